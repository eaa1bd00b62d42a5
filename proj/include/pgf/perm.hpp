// Copyright 2026 The pgroup-family Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file perm.hpp
 * @brief Permutations of {1, ..., n}.
 *
 * Conventions used throughout the library:
 *
 *  - Points are 1-based in every public interface (cycle notation,
 *    `image()`, `from_images()`). Storage is 0-based; `operator[]` and
 *    `images()` expose the 0-based form for kernels.
 *  - Products apply the left factor first: `(a * b)(x) = b(a(x))`.
 *    Consequently `x^(ab) = (x^a)^b`, conjugation is `a^g = g^-1 a g` and
 *    the commutator is `[a, b] = a^-1 b^-1 a b`.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgf/error.hpp"

namespace pgf {

/// 0-based point index used by the kernels.
using Point = std::uint32_t;

class Perm {
 public:
  /// Degree-0 permutation; only useful as a placeholder.
  Perm() = default;

  /// Identity on `degree` points.
  explicit Perm(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Builds from 1-based images: point i maps to `images[i-1]`.
  static Perm from_images(std::span<const std::size_t> images) {
    std::vector<Point> raw(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] < 1 || images[i] > images.size()) {
        throw Error("image " + std::to_string(images[i]) + " out of range");
      }
      raw[i] = static_cast<Point>(images[i] - 1);
    }
    return from_raw(std::move(raw));
  }

  /// Builds from 0-based images, validating bijectivity.
  static Perm from_raw(std::vector<Point> raw) {
    std::vector<bool> seen(raw.size(), false);
    for (Point p : raw) {
      if (p >= raw.size() || seen[p]) {
        throw Error("images do not form a permutation");
      }
      seen[p] = true;
    }
    Perm out;
    out.images_ = std::move(raw);
    return out;
  }

  /// Parses cycle notation such as "(1 2 3)(4,5)" or "()" on `degree` points.
  static Perm from_cycles(std::string_view text, std::size_t degree) {
    Perm out(degree);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
      if (text[i] != '(') throw Error("expected '(' in cycle notation");
      ++i;
      std::vector<Point> cycle;
      for (;;) {
        skip();
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        std::size_t value = 0;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + static_cast<std::size_t>(text[i] - '0');
          ++i;
        }
        if (start == i) throw Error("malformed cycle notation");
        if (value < 1 || value > degree) {
          throw Error("point " + std::to_string(value) + " exceeds degree");
        }
        cycle.push_back(static_cast<Point>(value - 1));
      }
      if (!cycle.empty()) {
        Perm c(degree);
        for (std::size_t k = 0; k < cycle.size(); ++k) {
          Point from = cycle[k];
          if (c.images_[from] != from) throw Error("repeated point in cycle");
          c.images_[from] = cycle[(k + 1) % cycle.size()];
        }
        out = out * c;
      }
      skip();
    }
    return out;
  }

  std::size_t degree() const noexcept { return images_.size(); }

  /// 1-based image of a 1-based point.
  std::size_t image(std::size_t point) const {
    return static_cast<std::size_t>(images_.at(point - 1)) + 1;
  }

  Point operator[](Point x) const noexcept { return images_[x]; }

  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (Point i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  std::optional<Point> first_moved() const noexcept {
    for (Point i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return i;
    }
    return std::nullopt;
  }

  Perm inverse() const {
    Perm out;
    out.images_.resize(images_.size());
    for (Point i = 0; i < images_.size(); ++i) out.images_[images_[i]] = i;
    return out;
  }

  /// k-th power; negative k is allowed.
  Perm pow(long long k) const {
    Perm base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                                 : static_cast<unsigned long long>(k);
    Perm out(degree());
    while (e) {
      if (e & 1u) out = out * base;
      base = base * base;
      e >>= 1u;
    }
    return out;
  }

  /// Element order: lcm of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t result = 1;
    for (Point i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (Point j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// Cycle notation with 1-based points; "()" for the identity.
  std::string to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (Point i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      for (Point j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out += ' ';
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
    Perm out;
    out.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) {
      out.images_[i] = b.images_[a.images_[i]];
    }
    return out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

/// Product applying `a` first, then `b`.
inline Perm compose(const Perm& a, const Perm& b) { return a * b; }

/// [a, b] = a^-1 b^-1 a b.
inline Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// a^g = g^-1 a g.
inline Perm conjugate(const Perm& a, const Perm& g) { return g.inverse() * a * g; }

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace pgf
