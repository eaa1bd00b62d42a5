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
 * @file pc_presentation.hpp
 * @brief Power-commutator presentations of p-groups.
 *
 * A presentation on generators g_1..g_n of prime `p` has power relations
 * g_i^p = w_i and commutator relations [g_j, g_i] = w_ji (j > i), where each
 * right-hand side is a normal-form word in strictly higher generators.
 * Elements are exponent vectors (e_1..e_n), 0 <= e_k < p, standing for
 * g_1^e_1 ... g_n^e_n.
 *
 * Text format (line oriented, '#' starts a comment):
 *
 *     GROUP <order> <index>
 *     PRIME <p>
 *     NGENS <n>
 *     POWER <i> = <word>        omitted means g_i^p = 1
 *     COMM <j> <i> = <word>     j > i; omitted means [g_j, g_i] = 1
 *     END
 *
 * where <word> is "1" or "g<a>^<e>*g<b>^<f>*..." with strictly increasing
 * generator indices above the relation's left side and exponents in 1..p-1.
 */

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgf/error.hpp"
#include "pgf/perm.hpp"
#include "pgf/perm_group.hpp"

namespace pgf {

/// Identifies a group within an ingested dataset: (order, index in file).
struct GroupId {
  std::uint64_t order = 0;
  std::uint64_t index = 0;

  friend auto operator<=>(const GroupId&, const GroupId&) = default;

  std::string to_string() const {
    return std::to_string(order) + "#" + std::to_string(index);
  }
};

/// Exponent vector normal form.
struct PcElement {
  std::vector<std::uint32_t> exponents;

  friend bool operator==(const PcElement&, const PcElement&) = default;
};

class PcPresentation {
 public:
  PcPresentation(std::uint32_t prime, std::size_t ngens)
      : prime_(prime), ngens_(ngens), power_(ngens), comm_(ngens * ngens) {
    if (prime < 2) throw Error("prime must be at least 2");
    for (std::uint32_t d = 2; d * d <= prime; ++d) {
      if (prime % d == 0) throw Error(std::to_string(prime) + " is not prime");
    }
    order_ = 1;
    for (std::size_t i = 0; i < ngens; ++i) order_ = detail::checked_mul(order_, prime);
  }

  std::uint32_t prime() const noexcept { return prime_; }
  std::size_t ngens() const noexcept { return ngens_; }
  std::uint64_t order() const noexcept { return order_; }

  /// Sets g_i^p = rhs (1-based i); rhs must be an exponent vector supported
  /// on generators above i.
  void set_power(std::size_t i, const std::vector<std::uint32_t>& rhs) {
    check_rhs(i, i, rhs);
    power_[i - 1] = to_syllables(rhs);
  }

  /// Sets [g_j, g_i] = rhs for j > i (1-based).
  void set_comm(std::size_t j, std::size_t i, const std::vector<std::uint32_t>& rhs) {
    if (!(j > i && i >= 1)) throw Error("commutator relation needs j > i >= 1");
    check_rhs(j, j, rhs);
    comm_[(j - 1) * ngens_ + (i - 1)] = to_syllables(rhs);
  }

  std::vector<std::uint32_t> power(std::size_t i) const {
    return from_syllables(power_.at(i - 1));
  }
  std::vector<std::uint32_t> comm(std::size_t j, std::size_t i) const {
    return from_syllables(comm_.at((j - 1) * ngens_ + (i - 1)));
  }

  PcElement identity() const { return {std::vector<std::uint32_t>(ngens_, 0)}; }

  PcElement generator(std::size_t i) const {
    PcElement e = identity();
    e.exponents.at(i - 1) = 1;
    return e;
  }

  /// Normal form of a * b by collection from the left.
  PcElement multiply(const PcElement& a, const PcElement& b) const {
    check_element(a);
    check_element(b);
    PcElement out = a;
    for (std::size_t k = 0; k < ngens_; ++k) {
      for (std::uint32_t e = 0; e < b.exponents[k]; ++e) mul_gen(out.exponents, k);
    }
    return out;
  }

  PcElement inverse(const PcElement& a) const {
    // a^(|G|-1) = a^-1.
    PcElement result = identity();
    PcElement base = a;
    std::uint64_t e = order_ - 1;
    while (e) {
      if (e & 1u) result = multiply(result, base);
      base = multiply(base, base);
      e >>= 1u;
    }
    return result;
  }

  /// Position of `a` in lexicographic order of exponent vectors (g_1 most
  /// significant), 0-based.
  std::uint64_t index_of(const PcElement& a) const {
    std::uint64_t idx = 0;
    for (std::uint32_t e : a.exponents) idx = idx * prime_ + e;
    return idx;
  }

  PcElement element_at(std::uint64_t idx) const {
    PcElement e = identity();
    for (std::size_t k = ngens_; k-- > 0;) {
      e.exponents[k] = static_cast<std::uint32_t>(idx % prime_);
      idx /= prime_;
    }
    return e;
  }

  friend bool operator==(const PcPresentation&, const PcPresentation&) = default;

 private:
  using Syllables = std::vector<std::pair<std::size_t, std::uint32_t>>;  // 0-based gen

  void check_rhs(std::size_t lhs, std::size_t above, const std::vector<std::uint32_t>& rhs) const {
    if (lhs < 1 || lhs > ngens_) throw Error("generator index out of range");
    if (rhs.size() != ngens_) throw Error("right-hand side has wrong length");
    for (std::size_t k = 0; k < ngens_; ++k) {
      if (rhs[k] >= prime_) throw Error("exponent out of range");
      if (rhs[k] != 0 && k + 1 <= above) {
        throw Error("right-hand side must use generators above " + std::to_string(above));
      }
    }
  }

  void check_element(const PcElement& a) const {
    if (a.exponents.size() != ngens_) throw Error("element has wrong length");
    for (std::uint32_t e : a.exponents) {
      if (e >= prime_) throw Error("exponent out of range");
    }
  }

  static Syllables to_syllables(const std::vector<std::uint32_t>& rhs) {
    Syllables s;
    for (std::size_t k = 0; k < rhs.size(); ++k) {
      if (rhs[k]) s.emplace_back(k, rhs[k]);
    }
    return s;
  }

  std::vector<std::uint32_t> from_syllables(const Syllables& s) const {
    std::vector<std::uint32_t> out(ngens_, 0);
    for (auto [k, e] : s) out[k] = e;
    return out;
  }

  void mul_word(std::vector<std::uint32_t>& v, const Syllables& w) const {
    for (auto [k, e] : w) {
      for (std::uint32_t r = 0; r < e; ++r) mul_gen(v, k);
    }
  }

  // v := v * g_i. With v = P g_i^a T (T in higher generators),
  // v g_i = P g_i^(a+1) T^(g_i), and g_j^(g_i) = g_j [g_j, g_i].
  void mul_gen(std::vector<std::uint32_t>& v, std::size_t i) const {
    std::vector<std::uint32_t> tail(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end());
    std::fill(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end(), 0u);
    if (++v[i] == prime_) {
      v[i] = 0;
      mul_word(v, power_[i]);
    }
    for (std::size_t t = 0; t < tail.size(); ++t) {
      std::size_t j = i + 1 + t;
      for (std::uint32_t r = 0; r < tail[t]; ++r) {
        mul_gen(v, j);
        mul_word(v, comm_[j * ngens_ + i]);
      }
    }
  }

  std::uint32_t prime_;
  std::size_t ngens_;
  std::uint64_t order_ = 1;
  std::vector<Syllables> power_;
  std::vector<Syllables> comm_;
};

inline PcElement pc_multiply(const PcPresentation& p, const PcElement& a, const PcElement& b) {
  return p.multiply(a, b);
}

/// Right regular action on the elements, numbered lexicographically by
/// exponent vector (point k+1 is element_at(k)). Faithful, degree p^n.
inline PermGroup pc_to_perm(const PcPresentation& p, std::uint64_t cap = kDefaultEnumerationCap) {
  if (p.order() > cap) {
    throw CapExceeded("presentation of order " + std::to_string(p.order()) +
                      " exceeds enumeration cap");
  }
  const auto n = static_cast<std::size_t>(p.order());
  std::vector<Perm> gens;
  for (std::size_t i = 1; i <= std::max<std::size_t>(p.ngens(), 1); ++i) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) {
      images[x] = p.ngens() == 0
                      ? static_cast<Point>(x)
                      : static_cast<Point>(p.index_of(p.multiply(p.element_at(x), p.generator(i))));
    }
    gens.push_back(Perm::from_raw(std::move(images)));
  }
  Point zero = 0;
  return PermGroup(std::move(gens), std::span<const Point>(&zero, 1));
}

struct PcEntry {
  GroupId id;
  PcPresentation presentation;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view s, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("expected integer for ") + what + ", got '" +
                               std::string(s) + "'");
  }
  return v;
}

// Parses "1" or "g3^1*g5^2" into an exponent vector.
inline std::vector<std::uint32_t> parse_word(std::string_view text, std::size_t ngens,
                                             std::uint32_t prime, std::size_t above,
                                             std::size_t line) {
  std::vector<std::uint32_t> out(ngens, 0);
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\r') compact += c;
  }
  if (compact == "1") return out;
  if (compact.empty()) throw ParseError(line, "empty word");
  std::size_t last = 0;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    std::size_t end = compact.find('*', pos);
    if (end == std::string::npos) end = compact.size();
    std::string_view syl(compact.data() + pos, end - pos);
    if (syl.size() < 2 || syl[0] != 'g') throw ParseError(line, "malformed syllable '" + std::string(syl) + "'");
    std::size_t caret = syl.find('^');
    std::uint64_t gen = parse_uint(syl.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1),
                                   line, "generator");
    std::uint64_t exp = caret == std::string_view::npos ? 1 : parse_uint(syl.substr(caret + 1), line, "exponent");
    if (gen < 1 || gen > ngens) throw ParseError(line, "generator g" + std::to_string(gen) + " out of range");
    if (gen <= above) {
      throw ParseError(line, "index-order violation: g" + std::to_string(gen) +
                                 " must be above g" + std::to_string(above));
    }
    if (gen <= last) throw ParseError(line, "generator indices must strictly increase");
    if (exp < 1 || exp >= prime) {
      throw ParseError(line, "exponent " + std::to_string(exp) + " out of range 1.." +
                                 std::to_string(prime - 1));
    }
    out[gen - 1] = static_cast<std::uint32_t>(exp);
    last = gen;
    pos = end + 1;
    if (end == compact.size()) break;
    if (pos == compact.size()) throw ParseError(line, "trailing '*'");
  }
  return out;
}

inline std::string format_word(const std::vector<std::uint32_t>& exps) {
  std::string out;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (!exps[k]) continue;
    if (!out.empty()) out += '*';
    out += "g" + std::to_string(k + 1) + "^" + std::to_string(exps[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace detail

/// Parses a pc file. Errors carry the offending line number.
inline std::vector<PcEntry> parse_pc_file(std::string_view text) {
  std::vector<PcEntry> out;
  std::set<GroupId> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  // State of the block being read.
  bool in_group = false;
  std::size_t group_line = 0;
  GroupId id;
  std::uint64_t prime = 0;
  std::uint64_t ngens = 0;
  bool have_prime = false;
  bool have_ngens = false;
  std::vector<std::pair<std::size_t, std::string>> pending;  // (line, relation text)

  auto finish = [&](std::size_t end_line) {
    if (!have_prime || !have_ngens) throw ParseError(end_line, "group is missing PRIME or NGENS");
    PcPresentation pres(static_cast<std::uint32_t>(prime), static_cast<std::size_t>(ngens));
    if (pres.order() != id.order) {
      throw ParseError(group_line, "declared order " + std::to_string(id.order) + " is not " +
                                       std::to_string(prime) + "^" + std::to_string(ngens));
    }
    std::set<std::pair<std::size_t, std::size_t>> defined;
    for (const auto& [ln, rel] : pending) {
      std::size_t eq = rel.find('=');
      if (eq == std::string::npos) throw ParseError(ln, "missing '='");
      auto lhs = detail::split_ws(std::string_view(rel).substr(0, eq));
      std::string_view rhs = std::string_view(rel).substr(eq + 1);
      if (lhs.size() == 2 && lhs[0] == "POWER") {
        std::uint64_t i = detail::parse_uint(lhs[1], ln, "generator");
        if (i < 1 || i > ngens) throw ParseError(ln, "POWER index out of range");
        if (!defined.insert({i, 0}).second) throw ParseError(ln, "duplicate POWER relation");
        pres.set_power(i, detail::parse_word(rhs, ngens, static_cast<std::uint32_t>(prime), i, ln));
      } else if (lhs.size() == 3 && lhs[0] == "COMM") {
        std::uint64_t j = detail::parse_uint(lhs[1], ln, "generator");
        std::uint64_t i = detail::parse_uint(lhs[2], ln, "generator");
        if (!(j > i && i >= 1 && j <= ngens)) throw ParseError(ln, "COMM needs ngens >= j > i >= 1");
        if (!defined.insert({j, i}).second) throw ParseError(ln, "duplicate COMM relation");
        pres.set_comm(j, i, detail::parse_word(rhs, ngens, static_cast<std::uint32_t>(prime), j, ln));
      } else {
        throw ParseError(ln, "malformed relation");
      }
    }
    if (!seen.insert(id).second) throw ParseError(group_line, "duplicate group id " + id.to_string());
    out.push_back({id, std::move(pres)});
  };

  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    std::size_t hash = raw.find('#');
    std::string_view line = hash == std::string_view::npos ? raw : raw.substr(0, hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    const std::string_view kw = tok[0];
    if (kw == "GROUP") {
      if (in_group) throw ParseError(line_no, "GROUP inside an unfinished group");
      if (tok.size() != 3) throw ParseError(line_no, "expected GROUP <order> <index>");
      id = GroupId{detail::parse_uint(tok[1], line_no, "order"), detail::parse_uint(tok[2], line_no, "index")};
      if (id.index < 1) throw ParseError(line_no, "group index must be positive");
      in_group = true;
      group_line = line_no;
      have_prime = have_ngens = false;
      pending.clear();
    } else if (!in_group) {
      throw ParseError(line_no, "expected GROUP, got '" + std::string(kw) + "'");
    } else if (kw == "PRIME") {
      if (tok.size() != 2) throw ParseError(line_no, "expected PRIME <p>");
      prime = detail::parse_uint(tok[1], line_no, "prime");
      bool is_prime = prime >= 2;
      for (std::uint64_t d = 2; d * d <= prime && is_prime; ++d) is_prime = prime % d != 0;
      if (!is_prime) throw ParseError(line_no, std::to_string(prime) + " is not prime");
      have_prime = true;
    } else if (kw == "NGENS") {
      if (tok.size() != 2) throw ParseError(line_no, "expected NGENS <n>");
      ngens = detail::parse_uint(tok[1], line_no, "ngens");
      if (ngens > 64) throw ParseError(line_no, "too many generators");
      have_ngens = true;
    } else if (kw == "POWER" || kw == "COMM") {
      if (!have_prime || !have_ngens) throw ParseError(line_no, "relation before PRIME/NGENS");
      pending.emplace_back(line_no, std::string(line));
    } else if (kw == "END") {
      if (tok.size() != 1) throw ParseError(line_no, "unexpected tokens after END");
      try {
        finish(line_no);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      in_group = false;
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(kw) + "'");
    }
    if (nl == text.size()) break;
  }
  if (in_group) throw ParseError(line_no, "missing END for group " + id.to_string());
  return out;
}

/// Canonical text form: nontrivial relations only, powers by i, then
/// commutators ordered by (i, j).
inline std::string serialize_pc(const std::vector<PcEntry>& entries) {
  std::ostringstream os;
  for (const PcEntry& e : entries) {
    const PcPresentation& p = e.presentation;
    os << "GROUP " << e.id.order << ' ' << e.id.index << '\n';
    os << "PRIME " << p.prime() << '\n';
    os << "NGENS " << p.ngens() << '\n';
    for (std::size_t i = 1; i <= p.ngens(); ++i) {
      std::string w = detail::format_word(p.power(i));
      if (w != "1") os << "POWER " << i << " = " << w << '\n';
    }
    for (std::size_t i = 1; i <= p.ngens(); ++i) {
      for (std::size_t j = i + 1; j <= p.ngens(); ++j) {
        std::string w = detail::format_word(p.comm(j, i));
        if (w != "1") os << "COMM " << j << ' ' << i << " = " << w << '\n';
      }
    }
    os << "END\n";
  }
  return os.str();
}

}  // namespace pgf
