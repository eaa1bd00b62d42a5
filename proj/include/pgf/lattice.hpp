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
 * @file lattice.hpp
 * @brief Subgroup lattices of small groups.
 *
 * Elements are numbered 0..|G|-1 in lexicographic order of their images
 * (0 is the identity) and multiplied through a Cayley table. Subgroups are
 * bitsets over element numbers and are found by cyclic extension, which is
 * complete for solvable groups.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgf/error.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/perm.hpp"
#include "pgf/perm_group.hpp"

namespace pgf {

/// Default cap on the order of groups whose lattice is computed.
inline constexpr std::uint64_t kDefaultCensusOrderCap = 256;
/// Hard cap on the Cayley table size.
inline constexpr std::uint64_t kMaxTableOrder = 4096;

using Elt = std::uint32_t;

/// Fixed-size set of element numbers.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }
  void set(Elt x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  bool test(Elt x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t intersection_count(const ElementSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    }
    return c;
  }

  bool subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  std::vector<Elt> members() const {
    std::vector<Elt> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) {
        out.push_back(static_cast<Elt>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
    return out;
  }

  /// Lexicographic comparison of the sorted member lists.
  bool lex_less(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) return (words_[i] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Cayley table of a permutation group.
class GroupTable {
 public:
  explicit GroupTable(const PermGroup& g, std::uint64_t cap = kDefaultCensusOrderCap) {
    if (g.order() > cap || g.order() > kMaxTableOrder) {
      throw CapExceeded("group of order " + std::to_string(g.order()) +
                        " exceeds lattice cap " + std::to_string(std::min(cap, kMaxTableOrder)));
    }
    elements_ = g.elements(cap);
    std::sort(elements_.begin(), elements_.end());
    n_ = elements_.size();
    base_ = g.chain().base();

    std::unordered_map<std::vector<Point>, Elt, KeyHash> index;
    index.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) index.emplace(key(elements_[i]), static_cast<Elt>(i));
    auto lookup = [&](const Perm& x) { return index.at(key(x)); };

    table_.resize(n_ * n_);
    std::vector<Point> k(base_.size());
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t t = 0; t < base_.size(); ++t) k[t] = elements_[b][elements_[a][base_[t]]];
        table_[a * n_ + b] = index.at(k);
      }
    }
    inv_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (table_[a * n_ + b] == 0) {
          inv_[a] = static_cast<Elt>(b);
          break;
        }
      }
    }
    for (const Perm& s : g.generators()) gens_.push_back(lookup(s));
    degree_ = g.degree();
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  Elt mul(Elt a, Elt b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  /// x^g = g^-1 x g.
  Elt conj(Elt x, Elt g) const { return mul(mul(inv_[g], x), g); }
  const Perm& element(Elt a) const { return elements_[a]; }
  const std::vector<Elt>& generators() const noexcept { return gens_; }

  Elt index_of(const Perm& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || *it != x) throw Error("element not in group");
    return static_cast<Elt>(it - elements_.begin());
  }

  /// Image set of `s` under conjugation by g.
  ElementSet conjugate(const ElementSet& s, Elt g) const {
    ElementSet out(n_);
    for (Elt x : s.members()) out.set(conj(x, g));
    return out;
  }

  /// Permutation subgroup with the given generators (identity if empty).
  Subgroup to_subgroup(const std::vector<Elt>& gens) const {
    std::vector<Perm> perms;
    for (Elt x : gens) perms.push_back(elements_[x]);
    if (perms.empty()) perms.push_back(Perm(degree_));
    return Subgroup(std::move(perms));
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Point>& v) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (Point x : v) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

  std::vector<Point> key(const Perm& x) const {
    std::vector<Point> k;
    k.reserve(base_.size());
    for (Point b : base_) k.push_back(x[b]);
    return k;
  }

  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Point> base_;
  std::vector<Elt> table_;
  std::vector<Elt> inv_;
  std::vector<Elt> gens_;
};

/// One subgroup of the lattice.
struct SubgroupRecord {
  ElementSet elements;
  std::size_t order = 1;
  std::vector<Elt> gens;   // generators found by cyclic extension
  bool abelian = true;
  std::size_t cls = 0;     // conjugacy class id in the ambient group
};

/// All subgroups of a solvable group, sorted by (order, sorted element list),
/// with conjugacy classes in the ambient group.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const GroupTable& t) : t_(&t) {
    const std::size_t n = t.size();
    std::vector<SubgroupRecord> found;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    {
      SubgroupRecord triv;
      triv.elements = ElementSet(n);
      triv.elements.set(0);
      seen.emplace(triv.elements, 0);
      found.push_back(std::move(triv));
    }
    // Every subgroup V > U with V/U of prime order q is U<x> for x normalizing
    // U with x^q in U; extending every found subgroup reaches every subgroup of
    // a solvable group.
    for (std::size_t u = 0; u < found.size(); ++u) {
      ElementSet covered = found[u].elements;
      const std::vector<Elt> umem = found[u].elements.members();
      const std::vector<Elt> ugens = found[u].gens;
      for (Elt x = 1; x < n; ++x) {
        if (covered.test(x)) continue;
        bool normalizes = true;
        for (Elt a : ugens) {
          if (!found[u].elements.test(t.conj(a, x))) {
            normalizes = false;
            break;
          }
        }
        std::size_t k = 1;
        Elt y = x;
        if (normalizes) {
          while (!found[u].elements.test(y)) {
            y = t.mul(y, x);
            ++k;
          }
        }
        if (!normalizes || !is_prime(k)) {
          for (Elt a : umem) covered.set(t.mul(a, x));  // the whole coset Ux behaves alike
          continue;
        }
        ElementSet v = found[u].elements;
        Elt xi = 0;
        for (std::size_t i = 1; i < k; ++i) {
          xi = t.mul(xi, x);
          for (Elt a : umem) v.set(t.mul(a, xi));
        }
        covered |= v;
        if (seen.count(v)) continue;
        SubgroupRecord rec;
        rec.elements = v;
        rec.order = umem.size() * k;
        rec.gens = ugens;
        rec.gens.push_back(x);
        rec.abelian = found[u].abelian;
        for (Elt a : ugens) {
          if (t.mul(a, x) != t.mul(x, a)) rec.abelian = false;
        }
        seen.emplace(v, found.size());
        found.push_back(std::move(rec));
      }
    }

    std::vector<std::size_t> perm(found.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (found[a].order != found[b].order) return found[a].order < found[b].order;
      return found[a].elements.lex_less(found[b].elements);
    });
    records_.reserve(found.size());
    for (std::size_t i : perm) records_.push_back(std::move(found[i]));
    for (std::size_t i = 0; i < records_.size(); ++i) index_.emplace(records_[i].elements, i);

    auto cls = conjugacy_classes(all_indices(), t.generators());
    for (std::size_t i = 0; i < records_.size(); ++i) records_[i].cls = cls[i];
    class_count_ = 0;
    for (std::size_t i = 0; i < records_.size(); ++i) {
      if (records_[i].cls == i) ++class_count_;
    }
  }

  const GroupTable& table() const noexcept { return *t_; }
  const std::vector<SubgroupRecord>& records() const noexcept { return records_; }
  const SubgroupRecord& operator[](std::size_t i) const { return records_[i]; }
  std::size_t size() const noexcept { return records_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }
  /// Index of the whole group.
  std::size_t top() const noexcept { return records_.size() - 1; }

  std::optional<std::size_t> find(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::size_t> all_indices() const {
    std::vector<std::size_t> v(records_.size());
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
  }

  /// Indices of the subgroups of records_[h], ascending.
  std::vector<std::size_t> subgroups_of(std::size_t h) const {
    std::vector<std::size_t> out;
    const auto& hs = records_[h].elements;
    for (std::size_t i = 0; i <= h; ++i) {
      if (records_[h].order % records_[i].order == 0 && records_[i].elements.subset_of(hs)) {
        out.push_back(i);
      }
    }
    return out;
  }

  /// For each listed subgroup (closed under conjugation by `by`), the least
  /// listed index of its class under the group generated by `by`. Returned
  /// values are lattice indices; the result is indexed like `subset` when
  /// `subset` is not the full list, and by lattice index otherwise.
  std::vector<std::size_t> conjugacy_classes(const std::vector<std::size_t>& subset,
                                             const std::vector<Elt>& by) const {
    std::unordered_map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < subset.size(); ++k) pos.emplace(subset[k], k);
    std::vector<std::size_t> parent(subset.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t k = 0; k < subset.size(); ++k) {
      const auto& rec = records_[subset[k]];
      if (rec.order == 1 || rec.order == t_->size()) continue;
      for (Elt g : by) {
        std::size_t j = pos.at(*find(t_->conjugate(rec.elements, g)));
        std::size_t a = root(k), b = root(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::size_t> out(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) out[k] = subset[root(k)];
    return out;
  }

  bool is_normal_in(std::size_t a, const std::vector<Elt>& by) const {
    const auto& rec = records_[a];
    for (Elt g : by) {
      for (Elt x : rec.gens) {
        if (!rec.elements.test(t_->conj(x, g))) return false;
      }
    }
    return true;
  }

  Subgroup to_subgroup(std::size_t i) const { return t_->to_subgroup(records_[i].gens); }

 private:
  const GroupTable* t_;
  std::vector<SubgroupRecord> records_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::size_t class_count_ = 0;
};

/// One representative per conjugacy class of subgroups (trivial and full
/// group included), ascending by order; the representative is the class
/// member with the lexicographically least sorted element list.
inline std::vector<Subgroup> subgroups_up_to_conjugacy(
    const PermGroup& g, std::uint64_t cap = kDefaultCensusOrderCap) {
  GroupTable t(g, cap);
  SubgroupLattice lat(t);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat[i].cls == i) out.push_back(lat.to_subgroup(i));
  }
  return out;
}

/// Every abelian normal subgroup, ascending by order.
inline std::vector<Subgroup> normal_abelian_subgroups(const PermGroup& g,
                                                      std::uint64_t cap = kDefaultCensusOrderCap) {
  GroupTable t(g, cap);
  SubgroupLattice lat(t);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat[i].abelian && lat.is_normal_in(i, t.generators())) out.push_back(lat.to_subgroup(i));
  }
  return out;
}

/// Intersection of the maximal subgroups, from the lattice.
inline Subgroup frattini_by_maximal_subgroups(const PermGroup& g,
                                              std::uint64_t cap = kDefaultCensusOrderCap) {
  GroupTable t(g, cap);
  SubgroupLattice lat(t);
  ElementSet meet(t.size());
  for (Elt x = 0; x < t.size(); ++x) meet.set(x);
  for (std::size_t i = 0; i < lat.top(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < lat.top() && maximal; ++j) {
      if (lat[j].order > lat[i].order && lat[i].elements.subset_of(lat[j].elements)) {
        maximal = false;
      }
    }
    if (maximal) meet &= lat[i].elements;
  }
  std::vector<Perm> gens;
  for (Elt x : meet.members()) {
    if (x != 0) gens.push_back(t.element(x));
  }
  if (gens.empty()) return PermGroup::trivial(g.degree());
  return Subgroup(std::move(gens));
}

}  // namespace pgf
