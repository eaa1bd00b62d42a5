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
 * @file ramification.hpp
 * @brief Ramification counts read off group invariants.
 *
 * Nothing here touches number fields. The minimal count of tamely ramified
 * primes for a certified family member is its rank (a quoted result, with
 * the certificate as witness); Plans' bound is the sum of the lower central
 * factor ranks with one end factor left out, and both ends are reported.
 */

#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgf/census.hpp"
#include "pgf/cert.hpp"
#include "pgf/error.hpp"
#include "pgf/group_ops.hpp"

namespace pgf {

inline constexpr const char* kRankLowerBoundNote =
    "lower bound: a tamely ramified realization over Q has cyclic inertia groups that "
    "generate G, so at least rank(G) primes ramify";

struct PlansBound {
  std::vector<unsigned> factor_ranks;  // lower central series factors, top first
  unsigned excluding_first = 0;        // sum without gamma_1 / gamma_2
  unsigned excluding_last = 0;         // sum without the last nontrivial factor
};

inline PlansBound plans_bound(const PermGroup& g, std::uint64_t p) {
  if (g.is_trivial()) throw Error("Plans bound is undefined for the trivial group");
  if (!is_p_group(g, p)) throw NotPGroup("Plans bound needs a p-group");
  SeriesResult lcs = lower_central_series(g);
  PlansBound b;
  b.factor_ranks = lcs.factor_ranks;
  unsigned total = 0;
  for (unsigned r : b.factor_ranks) total += r;
  b.excluding_first = total - b.factor_ranks.front();
  b.excluding_last = total - b.factor_ranks.back();
  return b;
}

struct RamReport {
  std::string descriptor;  // certificate text or group id
  std::uint64_t prime = 0;
  unsigned rank = 0;
  std::string rank_lower_bound_note = kRankLowerBoundNote;
  unsigned plans_bound_excluding_first = 0;
  unsigned plans_bound_excluding_last = 0;
  std::vector<unsigned> lcs_factor_ranks;
  /// Equals rank when the group is certified to lie in the family.
  std::optional<unsigned> minimal_count_claim;

  std::string claim_text() const {
    return minimal_count_claim ? std::to_string(*minimal_count_claim)
                               : "unknown (not certified in the family)";
  }
};

/// Report for a certificate: the claim is the declared rank, checked against
/// the Frattini rank of the evaluated group.
inline RamReport min_ramified_primes(const Cert& c, const CertCaps& caps = {}) {
  CertGroup cg = eval_cert_checked(c, caps);
  PlansBound b = plans_bound(cg.group, cg.prime);
  RamReport r;
  r.descriptor = to_string(c);
  r.prime = cg.prime;
  r.rank = cg.rank;
  r.plans_bound_excluding_first = b.excluding_first;
  r.plans_bound_excluding_last = b.excluding_last;
  r.lcs_factor_ranks = b.factor_ranks;
  r.minimal_count_claim = declared_rank(c);
  return r;
}

/// Report for an arbitrary p-group; `certified` is the caller's evidence of
/// family membership (for instance a positive semiabelian verdict).
inline RamReport ram_report(const PermGroup& g, std::uint64_t p, std::string descriptor,
                            bool certified) {
  PlansBound b = plans_bound(g, p);
  RamReport r;
  r.descriptor = std::move(descriptor);
  r.prime = p;
  r.rank = rank(g, p);
  r.plans_bound_excluding_first = b.excluding_first;
  r.plans_bound_excluding_last = b.excluding_last;
  r.lcs_factor_ranks = b.factor_ranks;
  if (certified) r.minimal_count_claim = r.rank;
  return r;
}

/// One row of the rank versus Plans comparison. Gaps are signed.
struct BoundsRow {
  std::string cert;
  unsigned rank = 0;
  unsigned plans_ex_first = 0;
  unsigned plans_ex_last = 0;

  int gap_first() const { return static_cast<int>(plans_ex_first) - static_cast<int>(rank); }
  int gap_last() const { return static_cast<int>(plans_ex_last) - static_cast<int>(rank); }
};

inline BoundsRow compare_bounds(const Cert& c, const CertCaps& caps = {}) {
  RamReport r = min_ramified_primes(c, caps);
  return {r.descriptor, r.rank, r.plans_bound_excluding_first, r.plans_bound_excluding_last};
}

/// Fixed-width text table of comparison rows.
inline std::string format_bounds_table(const std::vector<BoundsRow>& rows) {
  std::size_t w = 4;
  for (const BoundsRow& r : rows) w = std::max(w, r.cert.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w)) << "cert" << std::right << std::setw(6) << "rank"
     << std::setw(10) << "ex_first" << std::setw(9) << "ex_last" << std::setw(11) << "gap_first"
     << std::setw(10) << "gap_last" << '\n';
  for (const BoundsRow& r : rows) {
    os << std::left << std::setw(static_cast<int>(w)) << r.cert << std::right << std::setw(6)
       << r.rank << std::setw(10) << r.plans_ex_first << std::setw(9) << r.plans_ex_last
       << std::setw(11) << r.gap_first() << std::setw(10) << r.gap_last() << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json to_json(const RamReport& r) {
  nlohmann::ordered_json j;
  j["descriptor"] = r.descriptor;
  j["prime"] = r.prime;
  j["rank"] = r.rank;
  j["plans_ex_first"] = r.plans_bound_excluding_first;
  j["plans_ex_last"] = r.plans_bound_excluding_last;
  j["lcs_factor_ranks"] = r.lcs_factor_ranks;
  if (r.minimal_count_claim) {
    j["minimal_count_claim"] = *r.minimal_count_claim;
  } else {
    j["minimal_count_claim"] = r.claim_text();
  }
  j["rank_lower_bound_note"] = r.rank_lower_bound_note;
  return j;
}

/// A certificate's bounds as a census row plus the Plans columns. The
/// certificate itself witnesses membership, so the row is marked semiabelian
/// without a lattice search; dl and the screen are computed.
struct RamRow {
  CensusRecord record;
  unsigned plans_ex_first = 0;
  unsigned plans_ex_last = 0;
};

inline RamRow ram_row(const Cert& c, std::uint64_t index, const CertCaps& caps = {}) {
  CertGroup cg = eval_cert_checked(c, caps);
  PlansBound b = plans_bound(cg.group, cg.prime);
  RamRow row;
  row.record.id = GroupId{cg.group.order(), index};
  row.record.provenance = to_string(c);
  row.record.rank = cg.rank;
  row.record.derived_length = derived_length(cg.group);
  row.record.semiabelian = true;
  row.record.screen = dl_rank_screen(cg.group, cg.prime);
  row.plans_ex_first = b.excluding_first;
  row.plans_ex_last = b.excluding_last;
  return row;
}

inline std::string emit_ram_rows(const std::vector<RamRow>& rows, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::string out = std::string(kCensusCsvHeader) + ",plans_ex_first,plans_ex_last\n";
    for (const RamRow& r : rows) {
      std::string line = emit_report({r.record}, ReportFormat::csv);
      line = line.substr(line.find('\n') + 1);
      line.pop_back();
      out += line + "," + std::to_string(r.plans_ex_first) + "," + std::to_string(r.plans_ex_last) +
             "\n";
    }
    return out;
  }
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const RamRow& r : rows) {
    nlohmann::ordered_json j = to_json(r.record);
    j["plans_ex_first"] = r.plans_ex_first;
    j["plans_ex_last"] = r.plans_ex_last;
    recs.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["records"] = recs;
  return doc.dump(2) + "\n";
}

}  // namespace pgf
