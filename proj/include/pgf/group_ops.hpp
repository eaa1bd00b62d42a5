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
 * @file group_ops.hpp
 * @brief Constructions and invariants on permutation groups: cyclic groups,
 * direct and regular wreath products, quotients, normal closures, the
 * derived / lower central / lower exponent-p central series, the Frattini
 * subgroup and the rank.
 *
 * Subgroups are ordinary PermGroup values acting on the same points as the
 * ambient group.
 */

#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgf/error.hpp"
#include "pgf/perm.hpp"
#include "pgf/perm_group.hpp"

namespace pgf {

/// A subgroup of some ambient group, on the same points.
using Subgroup = PermGroup;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// If n = p^k with p prime and k >= 1, returns {p, k}.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= n && n % p) ++p;
  if (n % p) p = n;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

/// log_p(n), throwing NotPGroup unless n is a power of p (n = 1 gives 0).
inline unsigned log_p(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) throw NotPGroup("order is not a power of " + std::to_string(p));
  return k;
}

inline bool is_p_group(const PermGroup& g, std::uint64_t p) {
  std::uint64_t n = g.order();
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

/// Prime dividing the order of a nontrivial p-group; nullopt for the
/// trivial group. Throws NotPGroup otherwise.
inline std::optional<std::uint64_t> group_prime(const PermGroup& g) {
  if (g.is_trivial()) return std::nullopt;
  auto pp = prime_power(g.order());
  if (!pp) throw NotPGroup("group of order " + std::to_string(g.order()) + " is not a p-group");
  return pp->first;
}

// ---------------------------------------------------------------------------
// Constructions

/// C_{p^k} as a single p^k-cycle.
inline PermGroup cyclic_group(std::uint64_t p, unsigned k,
                              std::uint64_t cap = kDefaultEnumerationCap) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (k == 0) throw Error("cyclic group exponent must be positive");
  std::uint64_t n = 1;
  for (unsigned i = 0; i < k; ++i) n = detail::checked_mul(n, p);
  if (n > cap) throw CapExceeded("cyclic group of order " + std::to_string(n) + " exceeds cap");
  std::vector<Point> images(n);
  for (std::uint64_t x = 0; x < n; ++x) images[x] = static_cast<Point>((x + 1) % n);
  return PermGroup({Perm::from_raw(std::move(images))});
}

/// G x H on the disjoint union of the point sets (G's points first).
/// Generators: those of G, then those of H.
inline PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t dg = g.degree();
  const std::size_t dh = h.degree();
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    std::vector<Point> img(dg + dh);
    for (Point x = 0; x < dg; ++x) img[x] = s[x];
    for (Point x = 0; x < dh; ++x) img[dg + x] = static_cast<Point>(dg + x);
    gens.push_back(Perm::from_raw(std::move(img)));
  }
  for (const Perm& s : h.generators()) {
    std::vector<Point> img(dg + dh);
    for (Point x = 0; x < dg; ++x) img[x] = x;
    for (Point x = 0; x < dh; ++x) img[dg + x] = static_cast<Point>(dg + s[x]);
    gens.push_back(Perm::from_raw(std::move(img)));
  }
  return PermGroup(std::move(gens));
}

/// Regular wreath product H wr G = H^|G| x| G, imprimitive on
/// degree(H) * |G| points: block b (one per element of G, identity first)
/// carries a copy of H, and G permutes blocks by right multiplication.
/// Generators: H's generators acting on the identity block, then G's.
inline PermGroup wreath_regular(const PermGroup& h, const PermGroup& g,
                                std::size_t degree_cap = kDefaultDegreeCap,
                                std::uint64_t enumeration_cap = kDefaultEnumerationCap) {
  if (g.order() > degree_cap || h.degree() * g.order() > degree_cap) {
    throw CapExceeded("wreath product degree exceeds cap " + std::to_string(degree_cap));
  }
  std::vector<Perm> top = g.elements(enumeration_cap);
  const Perm id_g(g.degree());
  for (std::size_t k = 0; k < top.size(); ++k) {
    if (top[k] == id_g) {
      std::swap(top[0], top[k]);
      break;
    }
  }
  std::unordered_map<Perm, std::size_t, PermHash> block_of;
  for (std::size_t k = 0; k < top.size(); ++k) block_of.emplace(top[k], k);

  const std::size_t dh = h.degree();
  const std::size_t degree = dh * top.size();
  std::vector<Perm> gens;
  for (const Perm& s : h.generators()) {
    std::vector<Point> img(degree);
    for (Point x = 0; x < degree; ++x) img[x] = x;
    for (Point x = 0; x < dh; ++x) img[x] = s[x];
    gens.push_back(Perm::from_raw(std::move(img)));
  }
  for (const Perm& s : g.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t b = 0; b < top.size(); ++b) {
      std::size_t target = block_of.at(top[b] * s);
      for (Point x = 0; x < dh; ++x) {
        img[b * dh + x] = static_cast<Point>(target * dh + x);
      }
    }
    gens.push_back(Perm::from_raw(std::move(img)));
  }
  return PermGroup(std::move(gens));
}

// ---------------------------------------------------------------------------
// Subgroups

/// Normal closure in `g` of the given elements.
inline Subgroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  StabilizerChain chain(g.degree());
  std::vector<Perm> gens;
  std::deque<Perm> queue(seeds.begin(), seeds.end());
  std::vector<Perm> inv;
  for (const Perm& s : g.generators()) inv.push_back(s.inverse());
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    if (x.degree() != g.degree()) throw DegreeMismatch(x.degree(), g.degree());
    if (!chain.add_generator(x)) continue;
    for (std::size_t k = 0; k < inv.size(); ++k) queue.push_back(inv[k] * x * g.generators()[k]);
    gens.push_back(std::move(x));
  }
  if (gens.empty()) gens.push_back(Perm(g.degree()));
  return Subgroup(std::move(gens), std::move(chain));
}

/// Subgroup generated by the given elements (nonempty, same degree).
inline Subgroup subgroup(const std::vector<Perm>& gens) { return Subgroup(gens); }

/// True if every generator of `h` lies in `g`.
inline bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  for (const Perm& s : h.generators()) {
    if (!g.contains(s)) return false;
  }
  return true;
}

inline bool is_normal(const PermGroup& g, const PermGroup& n) {
  for (const Perm& x : n.generators()) {
    for (const Perm& s : g.generators()) {
      if (!n.contains(conjugate(x, s))) return false;
    }
  }
  return true;
}

inline bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && is_subgroup(a, b) && is_subgroup(b, a);
}

/// Elements of `g` commuting with every generator (enumerates g).
inline Subgroup center(const PermGroup& g, std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Perm> gens;
  for (const Perm& x : g.elements(cap)) {
    bool central = true;
    for (const Perm& s : g.generators()) {
      if (x * s != s * x) {
        central = false;
        break;
      }
    }
    if (central && !x.is_identity()) gens.push_back(x);
  }
  if (gens.empty()) return PermGroup::trivial(g.degree());
  return Subgroup(std::move(gens));
}

/// [A, B] for subgroups A, B normal in `g`: the normal closure in `g` of the
/// commutators of their generators.
inline Subgroup commutator_subgroup(const PermGroup& g, const Subgroup& a, const Subgroup& b) {
  if (!is_normal(g, a) || !is_normal(g, b)) {
    throw NotNormal("commutator_subgroup needs subgroups normal in the ambient group");
  }
  std::vector<Perm> seeds;
  for (const Perm& x : a.generators()) {
    for (const Perm& y : b.generators()) seeds.push_back(commutator(x, y));
  }
  return normal_closure(g, seeds);
}

inline Subgroup derived_subgroup(const PermGroup& g) { return commutator_subgroup(g, g, g); }

// ---------------------------------------------------------------------------
// Quotients

/// Action of `g` on the right cosets of a normal subgroup `n`, by right
/// multiplication. Coset 0 is `n` itself.
class CosetAction {
 public:
  CosetAction(const PermGroup& g, const Subgroup& n, std::uint64_t cap = kDefaultEnumerationCap)
      : base_(g.chain().base()) {
    if (!is_subgroup(g, n)) throw Error("quotient_group: not a subgroup");
    if (!is_normal(g, n)) throw NotNormal("quotient_group: subgroup is not normal");
    const std::uint64_t index = g.order() / n.order();
    if (index > cap) {
      throw CapExceeded("quotient of index " + std::to_string(index) + " exceeds cap");
    }
    kernel_ = std::make_unique<PermGroup>(n.with_base_prefix(base_));

    reps_.push_back(Perm(g.degree()));
    index_of_.emplace(key(reps_[0]), 0);
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      for (const Perm& s : g.generators()) {
        Perm y = canonical(reps_[c] * s);
        auto k = key(y);
        if (index_of_.emplace(k, reps_.size()).second) reps_.push_back(std::move(y));
      }
    }
    if (reps_.size() != index) throw Error("coset enumeration found the wrong index");
    std::vector<Perm> gens;
    for (const Perm& s : g.generators()) gens.push_back(image(s));
    quotient_ = std::make_unique<PermGroup>(std::move(gens));
  }

  const PermGroup& group() const { return *quotient_; }
  std::size_t index() const { return reps_.size(); }

  /// Coset number of `n x`.
  std::size_t coset_of(const Perm& x) const { return index_of_.at(key(canonical(x))); }

  /// Image of an element of `g` under the natural map.
  Perm image(const Perm& x) const {
    std::vector<Point> img(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      img[c] = static_cast<Point>(coset_of(reps_[c] * x));
    }
    return Perm::from_raw(std::move(img));
  }

 private:
  // Element of n*y with lexicographically least base image.
  Perm canonical(Perm y) const {
    const StabilizerChain& ch = kernel_->chain();
    for (std::size_t k = 0; k < ch.size(); ++k) {
      const auto& lv = ch.level(k);
      std::size_t best = 0;
      for (std::size_t d = 1; d < lv.orbit.size(); ++d) {
        if (y[lv.orbit[d]] < y[lv.orbit[best]]) best = d;
      }
      if (best != 0) y = lv.transversal[best] * y;
    }
    return y;
  }

  std::vector<Point> key(const Perm& y) const {
    std::vector<Point> k;
    k.reserve(base_.size());
    for (Point b : base_) k.push_back(y[b]);
    return k;
  }

  std::vector<Point> base_;
  std::unique_ptr<PermGroup> kernel_;
  std::vector<Perm> reps_;
  std::map<std::vector<Point>, std::size_t> index_of_;
  std::unique_ptr<PermGroup> quotient_;
};

/// G/N as the regular action on the right cosets of N (degree = index).
/// Generators are the images of G's generators.
inline PermGroup quotient_group(const PermGroup& g, const Subgroup& n,
                                std::uint64_t cap = kDefaultEnumerationCap) {
  return CosetAction(g, n, cap).group();
}

// ---------------------------------------------------------------------------
// Frattini subgroup and rank

/// Phi(G) = G^p [G, G] for a p-group: the normal closure of the p-th powers
/// and pairwise commutators of the generators.
inline Subgroup frattini_subgroup(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (!is_p_group(g, p)) {
    throw NotPGroup("group of order " + std::to_string(g.order()) + " is not a " +
                    std::to_string(p) + "-group");
  }
  const auto& gens = g.generators();
  std::vector<Perm> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(gens[i].pow(static_cast<long long>(p)));
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure(g, seeds);
}

/// Minimal number of generators of a p-group: log_p |G / Phi(G)|.
inline unsigned rank(const PermGroup& g, std::uint64_t p) {
  Subgroup phi = frattini_subgroup(g, p);
  return log_p(g.order() / phi.order(), p);
}

// ---------------------------------------------------------------------------
// Series

enum class SeriesKind { derived, lower_central, lower_exp_p };

struct SeriesResult {
  SeriesKind kind;
  std::vector<Subgroup> terms;        // terms[0] = G, strictly descending
  std::vector<unsigned> factor_ranks; // rank of terms[i] / terms[i+1] (lower central only)

  /// Number of proper inclusions: derived length / nilpotency class.
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  bool reaches_trivial() const { return !terms.empty() && terms.back().is_trivial(); }
};

namespace detail {

template <typename Next>
SeriesResult descend(const PermGroup& g, SeriesKind kind, Next next) {
  SeriesResult out{kind, {g}, {}};
  while (!out.terms.back().is_trivial()) {
    Subgroup t = next(out.terms.back());
    if (t.order() == out.terms.back().order()) break;  // stable above 1
    out.terms.push_back(std::move(t));
  }
  return out;
}

}  // namespace detail

inline SeriesResult derived_series(const PermGroup& g) {
  return detail::descend(g, SeriesKind::derived, [](const Subgroup& t) {
    std::vector<Perm> seeds;
    const auto& gens = t.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
    }
    return normal_closure(t, seeds);
  });
}

/// gamma_1 = G, gamma_{i+1} = [G, gamma_i]. For p-groups, factor_ranks holds
/// the rank of each factor gamma_i / gamma_{i+1}, computed on the quotient.
inline SeriesResult lower_central_series(const PermGroup& g,
                                         std::uint64_t cap = kDefaultEnumerationCap) {
  SeriesResult out = detail::descend(g, SeriesKind::lower_central, [&](const Subgroup& t) {
    std::vector<Perm> seeds;
    for (const Perm& s : g.generators()) {
      for (const Perm& x : t.generators()) seeds.push_back(commutator(s, x));
    }
    return normal_closure(g, seeds);
  });
  if (auto p = g.is_trivial() ? std::nullopt : prime_power(g.order())) {
    for (std::size_t i = 0; i + 1 < out.terms.size(); ++i) {
      PermGroup factor = quotient_group(out.terms[i], out.terms[i + 1], cap);
      out.factor_ranks.push_back(rank(factor, p->first));
    }
  }
  return out;
}

/// F_1 = G, F_t = F_{t-1}^p [G, F_{t-1}].
inline SeriesResult lower_exp_p_series(const PermGroup& g, std::uint64_t p) {
  if (!is_p_group(g, p)) throw NotPGroup("lower exponent-p series needs a p-group");
  return detail::descend(g, SeriesKind::lower_exp_p, [&](const Subgroup& t) {
    std::vector<Perm> seeds;
    for (const Perm& x : t.generators()) {
      seeds.push_back(x.pow(static_cast<long long>(p)));
      for (const Perm& s : g.generators()) seeds.push_back(commutator(s, x));
    }
    return normal_closure(g, seeds);
  });
}

/// Length of the derived series; throws for non-solvable groups.
inline unsigned derived_length(const PermGroup& g) {
  SeriesResult s = derived_series(g);
  if (!s.reaches_trivial()) throw Error("group is not solvable");
  return static_cast<unsigned>(s.length());
}

}  // namespace pgf
