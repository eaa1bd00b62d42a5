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
 * @file perm_group.hpp
 * @brief Stabilizer chains (deterministic Schreier-Sims) and PermGroup.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "pgf/error.hpp"
#include "pgf/perm.hpp"

namespace pgf {

/// Default cap on explicit element enumeration.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;
/// Default cap on the degree of constructed permutation groups.
inline constexpr std::size_t kDefaultDegreeCap = 4096;

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw CapExceeded("group order exceeds 64-bit range");
  }
  return a * b;
}

}  // namespace detail

/// Base, strong generators and explicit transversals of a permutation group.
///
/// Mutable only through `add_generator`; every level keeps the full list of
/// strong generators fixing the earlier base points, so levels are nested.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_index;  // point -> index in orbit, or -1
    std::vector<Perm> transversal;          // base ^ transversal[k] == orbit[k]
    std::vector<Perm> transversal_inv;
  };

  struct SiftResult {
    Perm residue;
    std::size_t level;  // first level where sifting stopped; size() if all passed
  };

  explicit StabilizerChain(std::size_t degree, std::span<const Point> base_prefix = {})
      : degree_(degree) {
    for (Point b : base_prefix) {
      if (b >= degree) throw Error("base point out of range");
      push_level(b);
    }
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return levels_.size(); }
  const Level& level(std::size_t k) const { return levels_[k]; }

  SiftResult sift(Perm g, std::size_t start = 0) const {
    for (std::size_t k = start; k < levels_.size(); ++k) {
      const Level& lv = levels_[k];
      std::int32_t idx = lv.orbit_index[g[lv.base]];
      if (idx < 0) return {std::move(g), k};
      g = g * lv.transversal_inv[static_cast<std::size_t>(idx)];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
    SiftResult r = sift(g);
    return r.level == levels_.size() && r.residue.is_identity();
  }

  /// Adds `g` to the generated group. Returns false if `g` was already a member.
  bool add_generator(const Perm& g) {
    if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
    SiftResult r = sift(g);
    if (r.level == levels_.size() && r.residue.is_identity()) return false;
    for (std::size_t k = r.level + 1; k-- > 0;) add_at(k, r.residue);
    return true;
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const Level& lv : levels_) n = detail::checked_mul(n, lv.orbit.size());
    return n;
  }

  std::vector<Point> base() const {
    std::vector<Point> out;
    out.reserve(levels_.size());
    for (const Level& lv : levels_) out.push_back(lv.base);
    return out;
  }

  /// Visits every element once (deterministic order).
  void for_each_element(const std::function<void(const Perm&)>& visit) const {
    Perm start(degree_);
    walk(levels_.size(), start, visit);
  }

 private:
  void push_level(Point b) {
    Level lv;
    lv.base = b;
    lv.orbit = {b};
    lv.orbit_index.assign(degree_, -1);
    lv.orbit_index[b] = 0;
    lv.transversal = {Perm(degree_)};
    lv.transversal_inv = {Perm(degree_)};
    levels_.push_back(std::move(lv));
  }

  // g fixes the base points of levels < k and is not in the group of level k.
  void add_at(std::size_t k, const Perm& g) {
    if (k == levels_.size()) {
      auto moved = g.first_moved();
      push_level(*moved);
    }
    std::size_t new_gen;
    std::size_t old_orbit;
    {
      Level& lv = levels_[k];
      lv.gens.push_back(g);
      new_gen = lv.gens.size() - 1;
      old_orbit = lv.orbit.size();
      // Extend the orbit: the new generator on old points, all generators on
      // new points.
      for (std::size_t d = 0; d < lv.orbit.size(); ++d) {
        std::size_t first = d < old_orbit ? new_gen : 0;
        for (std::size_t s = first; s < lv.gens.size(); ++s) {
          Point img = lv.gens[s][lv.orbit[d]];
          if (lv.orbit_index[img] >= 0) continue;
          lv.orbit_index[img] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(img);
          Perm u = lv.transversal[d] * lv.gens[s];
          lv.transversal_inv.push_back(u.inverse());
          lv.transversal.push_back(std::move(u));
        }
      }
    }
    // Schreier generators not yet known to sift: (old point, new gen) and
    // (new point, any gen).
    for (std::size_t d = 0; d < levels_[k].orbit.size(); ++d) {
      std::size_t first = d < old_orbit ? new_gen : 0;
      for (std::size_t s = first; s < levels_[k].gens.size(); ++s) {
        const Level& lv = levels_[k];
        Point img = lv.gens[s][lv.orbit[d]];
        auto target = static_cast<std::size_t>(lv.orbit_index[img]);
        Perm schreier = lv.transversal[d] * lv.gens[s] * lv.transversal_inv[target];
        if (schreier.is_identity()) continue;
        SiftResult r = sift(std::move(schreier), k + 1);
        if (r.level == levels_.size() && r.residue.is_identity()) continue;
        for (std::size_t j = r.level + 1; j-- > k + 1;) add_at(j, r.residue);
      }
    }
  }

  void walk(std::size_t k, const Perm& prefix,
            const std::function<void(const Perm&)>& visit) const {
    if (k == 0) {
      visit(prefix);
      return;
    }
    for (const Perm& u : levels_[k - 1].transversal) walk(k - 1, prefix * u, visit);
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A permutation group given by generators, with its stabilizer chain.
/// Immutable after construction; safe to share across threads.
class PermGroup {
 public:
  /// Group generated by `gens` (nonempty, same degree). `base_prefix` fixes
  /// the first base points of the chain (0-based).
  explicit PermGroup(std::vector<Perm> gens, std::span<const Point> base_prefix = {})
      : chain_(check_degree(gens), base_prefix), gens_(std::move(gens)) {
    for (const Perm& g : gens_) chain_.add_generator(g);
    order_ = chain_.order();
  }

  /// Wraps an already complete chain for the group generated by `gens`.
  PermGroup(std::vector<Perm> gens, StabilizerChain chain)
      : chain_(std::move(chain)), gens_(std::move(gens)) {
    order_ = chain_.order();
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup({Perm(degree)}); }

  std::size_t degree() const noexcept { return chain_.degree(); }
  const std::vector<Perm>& generators() const noexcept { return gens_; }
  const StabilizerChain& chain() const noexcept { return chain_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  bool contains(const Perm& p) const { return chain_.contains(p); }

  bool is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = i + 1; j < gens_.size(); ++j) {
        if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
      }
    }
    return true;
  }

  /// All elements, each exactly once. Throws CapExceeded above `cap`.
  std::vector<Perm> elements(std::uint64_t cap = kDefaultEnumerationCap) const {
    if (order_ > cap) {
      throw CapExceeded("group of order " + std::to_string(order_) +
                        " exceeds enumeration cap " + std::to_string(cap));
    }
    std::vector<Perm> out;
    out.reserve(order_);
    chain_.for_each_element([&](const Perm& p) { out.push_back(p); });
    return out;
  }

  /// Same group rebuilt on a chain whose base starts with `prefix`.
  PermGroup with_base_prefix(std::span<const Point> prefix) const {
    return PermGroup(gens_, prefix);
  }

 private:
  static std::size_t check_degree(const std::vector<Perm>& gens) {
    if (gens.empty()) throw Error("a generator list must not be empty");
    for (const Perm& g : gens) {
      if (g.degree() != gens.front().degree()) {
        throw DegreeMismatch(g.degree(), gens.front().degree());
      }
    }
    return gens.front().degree();
  }

  StabilizerChain chain_;
  std::vector<Perm> gens_;
  std::uint64_t order_ = 1;
};

/// Schreier-Sims on `gens`; deterministic for a given input order.
inline PermGroup build_chain(std::vector<Perm> gens) { return PermGroup(std::move(gens)); }

/// Membership by sifting through the chain.
inline bool contains(const PermGroup& g, const Perm& p) { return g.contains(p); }

inline std::vector<Perm> elements(const PermGroup& g,
                                  std::uint64_t cap = kDefaultEnumerationCap) {
  return g.elements(cap);
}

}  // namespace pgf
