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
 * @file semiabelian.hpp
 * @brief Deciding semiabelianity by the decomposition G = AH, A abelian
 * normal, H a proper semiabelian subgroup.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgf/error.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/lattice.hpp"
#include "pgf/perm_group.hpp"

namespace pgf {

/// One decomposition step: the current group equals A H.
struct SemiabelianStep {
  Subgroup a;
  Subgroup h;
};

struct SemiabelianVerdict {
  bool flag = false;
  /// On true: G = A_1 H_1, H_1 = A_2 H_2, ..., ending with H_k trivial.
  /// Empty for the trivial group.
  std::vector<SemiabelianStep> witness;
  /// Search statistics, also the summary of an exhausted search.
  std::size_t subgroups = 0;
  std::size_t classes = 0;
  std::size_t subproblems = 0;
  std::size_t pairs_tested = 0;

  std::string summary() const {
    if (flag) return "semiabelian; witness chain of length " + std::to_string(witness.size());
    return "not semiabelian; exhausted " + std::to_string(pairs_tested) + " (A, H) pairs over " +
           std::to_string(subproblems) + " subgroup classes (" + std::to_string(subgroups) +
           " subgroups, " + std::to_string(classes) + " classes)";
  }
};

namespace detail {

class SemiabelianSearch {
 public:
  explicit SemiabelianSearch(const SubgroupLattice& lat)
      : lat_(lat), memo_(lat.size(), -1) {}

  bool decide(std::size_t h) {
    const std::size_t key = lat_[h].cls;
    if (memo_[key] < 0) memo_[key] = solve(key) ? 1 : 0;
    return memo_[key] == 1;
  }

  /// Witness for a subgroup judged semiabelian, as lattice indices.
  std::vector<std::pair<std::size_t, std::size_t>> chain(std::size_t h) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    while (lat_[h].order > 1) {
      // The memo holds the decomposition of the class representative only;
      // recompute it for this member.
      auto step = find_step(h);
      out.push_back(step);
      h = step.second;
    }
    return out;
  }

  std::size_t subproblems = 0;
  std::size_t pairs_tested = 0;

 private:
  bool solve(std::size_t h) {
    ++subproblems;
    if (lat_[h].abelian) return true;
    return find_step(h).first != kNone;
  }

  // First (A, H') with h = A H', A abelian normal in h and H' a proper
  // semiabelian subgroup; A by descending order, H' by ascending order.
  std::pair<std::size_t, std::size_t> find_step(std::size_t h) {
    const SubgroupRecord& rec = lat_[h];
    if (rec.abelian) return {h, 0};
    const std::vector<std::size_t> subs = lat_.subgroups_of(h);
    std::vector<std::size_t> normal_abelian;
    for (std::size_t k = subs.size(); k-- > 0;) {
      std::size_t a = subs[k];
      if (lat_[a].order > 1 && lat_[a].abelian && lat_.is_normal_in(a, rec.gens)) {
        normal_abelian.push_back(a);
      }
    }
    // AH' = H'A is conjugation-stable when A is normal, so one H' per class
    // under conjugation by h suffices.
    std::vector<std::size_t> proper(subs.begin(), subs.end() - 1);
    std::vector<std::size_t> rep = lat_.conjugacy_classes(proper, rec.gens);
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < proper.size(); ++k) {
      if (rep[k] == proper[k]) candidates.push_back(proper[k]);
    }
    for (std::size_t a : normal_abelian) {
      const std::size_t need = rec.order / lat_[a].order;  // |H'| / |A n H'| must equal this
      for (std::size_t hh : candidates) {
        if (lat_[hh].order < need) continue;
        ++pairs_tested;
        const std::size_t meet = lat_[a].elements.intersection_count(lat_[hh].elements);
        if (lat_[hh].order != need * meet) continue;
        if (decide(hh)) return {a, hh};
      }
    }
    return {kNone, kNone};
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  const SubgroupLattice& lat_;
  std::vector<int> memo_;
};

}  // namespace detail

/// Decides whether `g` is semiabelian. Abelian groups are answered without
/// building the lattice (A = G, H = 1).
inline SemiabelianVerdict is_semiabelian(const PermGroup& g,
                                         std::uint64_t cap = kDefaultCensusOrderCap) {
  SemiabelianVerdict v;
  if (g.is_trivial()) {
    v.flag = true;
    return v;
  }
  if (g.is_abelian()) {
    v.flag = true;
    v.witness.push_back({g, PermGroup::trivial(g.degree())});
    return v;
  }
  if (g.order() > cap) {
    throw CapExceeded("group of order " + std::to_string(g.order()) +
                      " exceeds semiabelian search cap " + std::to_string(cap));
  }
  GroupTable table(g, cap);
  SubgroupLattice lat(table);
  detail::SemiabelianSearch search(lat);
  v.subgroups = lat.size();
  v.classes = lat.class_count();
  v.flag = search.decide(lat.top());
  if (v.flag) {
    for (auto [a, h] : search.chain(lat.top())) {
      v.witness.push_back({lat.to_subgroup(a), lat.to_subgroup(h)});
    }
  }
  v.subproblems = search.subproblems;
  v.pairs_tested = search.pairs_tested;
  return v;
}

/// Re-checks a positive verdict in the permutation model: each A is abelian
/// and normal in the current group, each H is a proper subgroup, A and H
/// generate the current group, and the chain ends at the trivial group.
inline bool validate_witness(const PermGroup& g, const SemiabelianVerdict& v) {
  if (!v.flag) return false;
  if (g.is_trivial()) return v.witness.empty();
  const PermGroup* cur = &g;
  for (const SemiabelianStep& s : v.witness) {
    if (cur->is_trivial()) return false;
    if (!is_subgroup(*cur, s.a) || !is_subgroup(*cur, s.h)) return false;
    if (!s.a.is_abelian() || !is_normal(*cur, s.a)) return false;
    if (s.h.order() >= cur->order()) return false;
    std::vector<Perm> both = s.a.generators();
    both.insert(both.end(), s.h.generators().begin(), s.h.generators().end());
    if (PermGroup(both).order() != cur->order()) return false;
    cur = &s.h;
  }
  return cur->is_trivial();
}

/// Membership in the certificate family, via its equality with the family
/// of semiabelian groups.
inline bool in_family_g(const PermGroup& g, std::uint64_t cap = kDefaultCensusOrderCap) {
  return is_semiabelian(g, cap).flag;
}

enum class Screen { definitely_not_member, inconclusive };

inline const char* to_string(Screen s) {
  return s == Screen::definitely_not_member ? "definitely_not_member" : "inconclusive";
}

/// Members of the family satisfy dl(G) <= rank(G); a group violating it is
/// certainly not a member.
inline Screen dl_rank_screen(const PermGroup& g, std::uint64_t p) {
  if (g.is_trivial()) return Screen::inconclusive;
  return derived_length(g) > rank(g, p) ? Screen::definitely_not_member : Screen::inconclusive;
}

}  // namespace pgf
