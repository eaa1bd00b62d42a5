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
 * @file claims.hpp
 * @brief The verification suite: one check per claim, each PASS, FAIL or
 * SKIPPED.
 *
 * Datasets are looked up as `<data_dir>/order<N>.pc`. A claim is SKIPPED only
 * when a dataset it needs is absent; optional long-running claims that were
 * not requested report NOT_RUN.
 */

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "pgf/census.hpp"
#include "pgf/cert.hpp"
#include "pgf/fixtures.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/lattice.hpp"
#include "pgf/pc_presentation.hpp"
#include "pgf/ramification.hpp"
#include "pgf/semiabelian.hpp"

namespace pgf {

enum class ClaimStatus { pass, fail, skipped, not_run };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::skipped: return "SKIPPED";
    case ClaimStatus::not_run: return "NOT_RUN";
  }
  return "?";
}

struct ClaimResult {
  int id = 0;
  std::string title;
  ClaimStatus status = ClaimStatus::fail;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // runtime budget; exceeding it fails the claim
  bool gating = true;         // false for optional claims
};

struct VerifyOptions {
  std::optional<std::filesystem::path> data_dir;
  bool include_long = false;  // run the optional extended counts
  unsigned jobs = 0;
  std::optional<std::filesystem::path> cache_dir;
};

// Runtime budgets and fixed parameters.
inline constexpr double kBudgetRankAdditivity = 60;
inline constexpr double kBudgetDlRank = 120;
inline constexpr double kBudgetOrder64 = 2 * 3600;
inline constexpr double kBudgetOrder243 = 10 * 60;
inline constexpr double kBudgetRemark = 60;
inline constexpr std::size_t kMinWreathCertificates = 30;
inline constexpr std::size_t kRandomGeneratorSets = 100;
inline constexpr std::uint64_t kRandomSeed = 20260101;
inline constexpr std::uint64_t kFrattiniOracleMaxOrder = 64;
inline constexpr std::uint64_t kVerifyOrderCap = 729;

struct VerifyReport {
  std::vector<ClaimResult> claims;

  /// True when every gating claim passed or was skipped.
  bool ok() const {
    for (const ClaimResult& c : claims) {
      if (c.gating && c.status == ClaimStatus::fail) return false;
    }
    return true;
  }

  std::string table() const {
    std::ostringstream os;
    for (const ClaimResult& c : claims) {
      os << "[" << to_string(c.status) << "] " << c.id << ". " << c.title;
      if (!c.gating) os << " (optional)";
      os << ": " << c.detail;
      char buf[48];
      std::snprintf(buf, sizeof buf, " (%.2f s)", c.seconds);
      os << buf << '\n';
    }
    return os.str();
  }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

/// Order of <gens> by breadth-first closure over all products.
inline std::uint64_t naive_closure_order(const std::vector<Perm>& gens, std::size_t degree) {
  std::unordered_set<Perm, PermHash> seen{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& s : gens) {
        Perm y = x * s;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

struct Dataset {
  std::string name;
  std::vector<PcEntry> entries;
};

/// Groups evaluated once and shared by the claims.
class VerifyContext {
 public:
  explicit VerifyContext(const VerifyOptions& opt) : opt_(opt) {}

  const VerifyOptions& options() const { return opt_; }

  /// The dataset of one order, or nullopt when the file is absent.
  const std::optional<Dataset>& dataset(std::uint64_t order) {
    auto it = datasets_.find(order);
    if (it != datasets_.end()) return it->second;
    std::optional<Dataset> d;
    if (opt_.data_dir) {
      const std::filesystem::path f = *opt_.data_dir / ("order" + std::to_string(order) + ".pc");
      if (std::filesystem::exists(f)) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        d = Dataset{f.filename().string(), parse_pc_file(ss.str())};
      }
    }
    return datasets_.emplace(order, std::move(d)).first->second;
  }

  /// Census of one dataset, run at most once per context.
  const CensusResult& census(std::uint64_t order, const Dataset& d) {
    auto it = census_.find(order);
    if (it != census_.end()) return it->second;
    CensusOptions co;
    co.provenance = d.name;
    co.jobs = opt_.jobs;
    co.cache_dir = opt_.cache_dir;
    co.order_cap = kVerifyOrderCap;
    CensusResult r = run_census(d.entries, co);
    note_census(r);
    return census_.emplace(order, std::move(r)).first->second;
  }

  /// Census of an embedded fixture order.
  const CensusResult& fixture_census(std::uint64_t order) {
    auto it = fixture_census_.find(order);
    if (it != fixture_census_.end()) return it->second;
    CensusOptions co;
    co.provenance = "embedded fixture";
    co.jobs = 1;
    CensusResult r = run_census(parse_pc_file(fixtures::for_order(order)), co);
    note_census(r);
    return fixture_census_.emplace(order, std::move(r)).first->second;
  }

  struct CorpusEntry {
    Cert cert;
    CertGroup group;
  };

  /// Valid certificate corpus within caps, with the count of rejected trees.
  const std::vector<CorpusEntry>& corpus() {
    if (!corpus_) {
      corpus_.emplace();
      for (Cert& c : certificate_corpus({2, 3}, 2, 3)) {
        ++corpus_trees_;
        try {
          CertGroup g = eval_cert_checked(c);
          corpus_->push_back({std::move(c), std::move(g)});
        } catch (const InvalidCertificate&) {
        } catch (const CapExceeded&) {
        }
      }
    }
    return *corpus_;
  }
  std::size_t corpus_trees() const { return corpus_trees_; }

  /// Every census record produced in this context.
  const std::vector<CensusRecord>& classified() const { return classified_; }
  std::size_t census_failures() const { return census_failures_; }

  void note_record(const CensusRecord& r) { classified_.push_back(r); }

 private:
  void note_census(const CensusResult& r) {
    classified_.insert(classified_.end(), r.records.begin(), r.records.end());
    census_failures_ += r.summary.failures.size();
  }

  VerifyOptions opt_;
  std::map<std::uint64_t, std::optional<Dataset>> datasets_;
  std::map<std::uint64_t, CensusResult> census_;
  std::map<std::uint64_t, CensusResult> fixture_census_;
  std::optional<std::vector<CorpusEntry>> corpus_;
  std::size_t corpus_trees_ = 0;
  std::vector<CensusRecord> classified_;
  std::size_t census_failures_ = 0;
};

inline std::string count_text(const CensusResult& r) {
  return std::to_string(r.summary.non_semiabelian) + " of " + std::to_string(r.summary.total) +
         " not semiabelian";
}

inline ClaimResult run_timed(int id, std::string title, double budget, bool gating,
                             const std::function<void(ClaimResult&)>& body) {
  ClaimResult c;
  c.id = id;
  c.title = std::move(title);
  c.budget_seconds = budget;
  c.gating = gating;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& ex) {
    c.status = ClaimStatus::fail;
    c.detail = std::string("error: ") + ex.what();
  }
  c.seconds = seconds_since(start);
  if (budget > 0 && c.seconds > budget && c.status == ClaimStatus::pass) {
    c.status = ClaimStatus::fail;
    c.detail += "; over runtime budget";
  }
  return c;
}

// 1. rank(H wr G) = rank(H) + rank(G), computed on all three groups.
inline ClaimResult claim_rank_additivity(VerifyContext& ctx) {
  return run_timed(1, "rank additivity under regular wreath products", kBudgetRankAdditivity, true,
                   [&](ClaimResult& c) {
    std::size_t wreaths = 0, bad = 0;
    std::string first_bad;
    for (const auto& e : ctx.corpus()) {
      if (e.cert.kind != Cert::Kind::wreath) continue;
      ++wreaths;
      const std::uint64_t p = e.group.prime;
      const unsigned inner = rank(eval_cert(e.cert.children[0]), p);
      const unsigned outer = rank(eval_cert(e.cert.children[1]), p);
      if (rank(e.group.group, p) != inner + outer) {
        if (!bad++) first_bad = to_string(e.cert);
      }
    }
    c.detail = std::to_string(wreaths) + " wreath certificates, " + std::to_string(bad) +
               " violations";
    if (bad) c.detail += " (first: " + first_bad + ")";
    c.status = bad == 0 && wreaths >= kMinWreathCertificates ? ClaimStatus::pass : ClaimStatus::fail;
  });
}

// 2. dl(G) <= rank(G) for every certificate-built group.
inline ClaimResult claim_dl_le_rank(VerifyContext& ctx) {
  return run_timed(2, "derived length at most rank on certificate groups", kBudgetDlRank, true,
                   [&](ClaimResult& c) {
    std::size_t bad = 0;
    std::string first_bad;
    for (const auto& e : ctx.corpus()) {
      if (derived_length(e.group.group) > e.group.rank && !bad++) first_bad = to_string(e.cert);
    }
    c.detail = std::to_string(ctx.corpus().size()) + " groups from " +
               std::to_string(ctx.corpus_trees()) + " trees, " + std::to_string(bad) + " violations";
    if (bad) c.detail += " (first: " + first_bad + ")";
    c.status = bad == 0 ? ClaimStatus::pass : ClaimStatus::fail;
  });
}

// 3. Census counts for orders 64 and 3^5.
inline ClaimResult claim_note_counts(VerifyContext& ctx) {
  return run_timed(3, "census counts for orders 64 and 243", kBudgetOrder64 + kBudgetOrder243, true,
                   [&](ClaimResult& c) {
    struct Want {
      std::uint64_t order;
      std::size_t total, non_semiabelian;
      double budget;
    };
    const Want wants[] = {{64, 267, 10, kBudgetOrder64}, {243, 67, 10, kBudgetOrder243}};
    bool all = true, missing = false;
    for (const Want& w : wants) {
      const auto& d = ctx.dataset(w.order);
      if (!c.detail.empty()) c.detail += "; ";
      if (!d) {
        missing = true;
        c.detail += "order " + std::to_string(w.order) + ": dataset absent";
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      const CensusResult& r = ctx.census(w.order, *d);
      const double t = seconds_since(start);
      const bool ok = r.summary.ok() && r.summary.total == w.total &&
                      r.summary.non_semiabelian == w.non_semiabelian && t <= w.budget;
      all = all && ok;
      c.detail += "order " + std::to_string(w.order) + ": " + count_text(r) + " (expected " +
                  std::to_string(w.non_semiabelian) + " of " + std::to_string(w.total) + ")";
    }
    c.status = !all ? ClaimStatus::fail : missing ? ClaimStatus::skipped : ClaimStatus::pass;
  });
}

// 4. Small orders are semiabelian.
inline ClaimResult claim_small_orders(VerifyContext& ctx) {
  return run_timed(4, "all groups of order <= p^4, and all 2-groups of order 32, semiabelian", 0,
                   true, [&](ClaimResult& c) {
    std::size_t groups = 0, bad = 0;
    std::vector<std::string> absent;
    auto take = [&](const CensusResult& r) {
      groups += r.summary.total;
      bad += r.summary.non_semiabelian + r.summary.failures.size();
    };
    for (std::uint64_t o : fixtures::kOrders) take(ctx.fixture_census(o));
    for (std::uint64_t o : {16, 32, 81}) {
      if (const auto& d = ctx.dataset(o)) {
        take(ctx.census(o, *d));
      } else {
        absent.push_back(std::to_string(o));
      }
    }
    c.detail = std::to_string(groups) + " groups checked, " + std::to_string(bad) + " exceptions";
    if (!absent.empty()) {
      c.detail += "; datasets absent for order";
      for (const auto& a : absent) c.detail += " " + a;
    }
    c.status = bad == 0 ? ClaimStatus::pass : ClaimStatus::fail;
  });
}

// 5. Both Plans sums for C5 wr C5 exceed the rank.
inline ClaimResult claim_plans_exceeds_rank() {
  return run_timed(5, "Plans bound exceeds rank for C5 wr C5", kBudgetRemark, true,
                   [&](ClaimResult& c) {
    const Cert cert = parse_cert("W(C(5,1),C(5,1))");
    RamReport r = min_ramified_primes(cert);
    c.detail = "rank " + std::to_string(r.rank) + ", excluding first " +
               std::to_string(r.plans_bound_excluding_first) + ", excluding last " +
               std::to_string(r.plans_bound_excluding_last);
    c.status = r.rank == 2 && r.plans_bound_excluding_first > r.rank &&
                       r.plans_bound_excluding_last > r.rank
                   ? ClaimStatus::pass
                   : ClaimStatus::fail;
  });
}

// 6. Record invariants over every classified group, including the
// certificate groups within the search cap.
inline ClaimResult claim_consistency(VerifyContext& ctx) {
  return run_timed(6, "screen consistency over every classified group", 0, true,
                   [&](ClaimResult& c) {
    std::size_t cert_groups = 0, cert_not_semi = 0;
    for (const auto& e : ctx.corpus()) {
      const PermGroup& g = e.group.group;
      if (g.order() > kVerifyOrderCap) continue;
      CensusRecord r;
      r.id = GroupId{g.order(), ++cert_groups};
      r.provenance = to_string(e.cert);
      r.rank = e.group.rank;
      r.derived_length = derived_length(g);
      r.screen = dl_rank_screen(g, e.group.prime);
      SemiabelianVerdict v = is_semiabelian(g, kVerifyOrderCap);
      r.semiabelian = v.flag && validate_witness(g, v);
      if (!r.semiabelian) ++cert_not_semi;
      ctx.note_record(r);
    }
    std::size_t bad = 0;
    for (const CensusRecord& r : ctx.classified()) {
      if (!record_violation(r).empty()) ++bad;
    }
    c.detail = std::to_string(ctx.classified().size()) + " records, " + std::to_string(bad) +
               " violations, " + std::to_string(ctx.census_failures()) + " census failures; " +
               std::to_string(cert_not_semi) + " of " + std::to_string(cert_groups) +
               " certificate groups not semiabelian";
    c.status = bad == 0 && ctx.census_failures() == 0 && cert_not_semi == 0 ? ClaimStatus::pass
                                                                            : ClaimStatus::fail;
  });
}

// 7. Chain order vs closure, Frattini two ways, pc order vs permutation order.
inline ClaimResult claim_oracles(VerifyContext& ctx) {
  return run_timed(7, "oracle equivalences", 0, true, [&](ClaimResult& c) {
    std::mt19937_64 rng(kRandomSeed);
    std::size_t order_bad = 0;
    for (std::size_t t = 0; t < kRandomGeneratorSets; ++t) {
      const std::size_t degree = 2 + rng() % 6;
      const std::size_t ngens = 1 + rng() % 3;
      std::vector<Perm> gens;
      for (std::size_t k = 0; k < ngens; ++k) {
        std::vector<Point> img(degree);
        for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
        std::shuffle(img.begin(), img.end(), rng);
        gens.push_back(Perm::from_raw(std::move(img)));
      }
      if (PermGroup(gens).order() != naive_closure_order(gens, degree)) ++order_bad;
    }

    std::size_t frattini_groups = 0, frattini_bad = 0, pc_groups = 0, pc_bad = 0;
    auto check = [&](const std::vector<PcEntry>& entries) {
      for (const PcEntry& e : entries) {
        PermGroup g = pc_to_perm(e.presentation);
        ++pc_groups;
        if (g.order() != e.presentation.order()) ++pc_bad;
        if (g.order() <= kFrattiniOracleMaxOrder && !g.is_trivial()) {
          ++frattini_groups;
          if (!same_group(frattini_subgroup(g, e.presentation.prime()),
                          frattini_by_maximal_subgroups(g))) {
            ++frattini_bad;
          }
        }
      }
    };
    for (std::uint64_t o : fixtures::kOrders) check(parse_pc_file(fixtures::for_order(o)));
    for (std::uint64_t o : {16, 32, 64, 81, 128, 243, 729}) {
      if (const auto& d = ctx.dataset(o)) check(d->entries);
    }
    c.detail = std::to_string(order_bad) + " of " + std::to_string(kRandomGeneratorSets) +
               " random sets disagree with closure; Frattini " + std::to_string(frattini_bad) +
               " of " + std::to_string(frattini_groups) + " disagree; pc order " +
               std::to_string(pc_bad) + " of " + std::to_string(pc_groups) + " disagree";
    c.status = order_bad + frattini_bad + pc_bad == 0 ? ClaimStatus::pass : ClaimStatus::fail;
  });
}

// 8. Extended counts, optional.
inline ClaimResult claim_extended_counts(VerifyContext& ctx) {
  return run_timed(8, "census counts for orders 128 and 729", 0, false, [&](ClaimResult& c) {
    if (!ctx.options().include_long) {
      c.status = ClaimStatus::not_run;
      c.detail = "long-running; enable with --long";
      return;
    }
    struct Want {
      std::uint64_t order;
      std::size_t total, non_semiabelian;
    };
    const Want wants[] = {{128, 2328, 82}, {729, 504, 54}};
    bool all = true, missing = false;
    for (const Want& w : wants) {
      const auto& d = ctx.dataset(w.order);
      if (!c.detail.empty()) c.detail += "; ";
      if (!d) {
        missing = true;
        c.detail += "order " + std::to_string(w.order) + ": dataset absent";
        continue;
      }
      const CensusResult& r = ctx.census(w.order, *d);
      all = all && r.summary.ok() && r.summary.total == w.total &&
            r.summary.non_semiabelian == w.non_semiabelian;
      c.detail += "order " + std::to_string(w.order) + ": " + count_text(r) + " (expected " +
                  std::to_string(w.non_semiabelian) + " of " + std::to_string(w.total) + ")";
    }
    c.status = !all ? ClaimStatus::fail : missing ? ClaimStatus::skipped : ClaimStatus::pass;
  });
}

}  // namespace detail

/// Runs every claim in order. `on_claim` sees each result as it completes.
inline VerifyReport run_verify(const VerifyOptions& opt,
                               const std::function<void(const ClaimResult&)>& on_claim = {}) {
  detail::VerifyContext ctx(opt);
  VerifyReport rep;
  auto add = [&](ClaimResult c) {
    if (on_claim) on_claim(c);
    rep.claims.push_back(std::move(c));
  };
  add(detail::claim_rank_additivity(ctx));
  add(detail::claim_dl_le_rank(ctx));
  add(detail::claim_note_counts(ctx));
  add(detail::claim_small_orders(ctx));
  add(detail::claim_plans_exceeds_rank());
  // The extended counts run before the consistency screen so their records
  // are screened too.
  ClaimResult extended = detail::claim_extended_counts(ctx);
  add(detail::claim_consistency(ctx));
  add(detail::claim_oracles(ctx));
  add(std::move(extended));
  return rep;
}

}  // namespace pgf
