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


#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgf/cert.hpp"
#include "pgf/error.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/ramification.hpp"

namespace {

using pgf::parse_cert;

TEST(RamificationTest, ClaimEqualsRank) {
  EXPECT_EQ(pgf::min_ramified_primes(parse_cert("C(2,3)")).minimal_count_claim, 1u);
  EXPECT_EQ(pgf::min_ramified_primes(parse_cert("W(C(2,1),C(2,1))")).minimal_count_claim, 2u);
  EXPECT_EQ(pgf::min_ramified_primes(parse_cert("D(C(3,1),W(C(3,1),C(3,1)))")).minimal_count_claim, 3u);
}

TEST(RamificationTest, UncertifiedGroupHasNoClaim) {
  const auto g = pgf::eval_cert(parse_cert("W(C(2,1),C(2,1))"));
  const auto r = pgf::ram_report(g, 2, "D4", false);
  EXPECT_FALSE(r.minimal_count_claim.has_value());
  EXPECT_EQ(r.rank, 2u);
  EXPECT_NE(r.claim_text().find("unknown"), std::string::npos);
  EXPECT_EQ(pgf::ram_report(g, 2, "D4", true).minimal_count_claim, 2u);
}

TEST(RamificationTest, PlansBoundExamples) {
  const auto ab = pgf::plans_bound(pgf::cyclic_group(2, 3), 2);
  EXPECT_EQ(ab.factor_ranks, (std::vector<unsigned>{1}));
  EXPECT_EQ(ab.excluding_first, 0u);
  EXPECT_EQ(ab.excluding_last, 0u);
  const auto d4 = pgf::plans_bound(pgf::eval_cert(parse_cert("W(C(2,1),C(2,1))")), 2);
  EXPECT_EQ(d4.factor_ranks, (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(d4.excluding_first, 1u);
  EXPECT_EQ(d4.excluding_last, 2u);
  EXPECT_THROW(pgf::plans_bound(pgf::PermGroup::trivial(2), 2), pgf::Error);
}

TEST(RamificationTest, WreathC5C5BoundsExceedRank) {
  const auto r = pgf::min_ramified_primes(parse_cert("W(C(5,1),C(5,1))"));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.lcs_factor_ranks, (std::vector<unsigned>{2, 1, 1, 1, 1}));
  EXPECT_EQ(r.plans_bound_excluding_first, 4u);
  EXPECT_EQ(r.plans_bound_excluding_last, 5u);
}

TEST(RamificationTest, LowerCentralFactorsMatchBruteForce) {
  // Term orders from explicit commutators: gamma_{i+1} = [G, gamma_i].
  for (const std::string text : {"W(C(2,1),C(2,1))", "W(C(3,1),C(3,1))", "W(C(2,1),C(2,2))"}) {
    const auto g = pgf::eval_cert(parse_cert(text));
    const oracle::Table t(g.generators(), g.degree());
    oracle::Table::Sub all(t.size());
    for (int x = 0; x < t.size(); ++x) all[x] = x;
    std::vector<std::size_t> orders{all.size()};
    oracle::Table::Sub cur = all;
    while (cur.size() > 1) {
      oracle::Table::Sub comms;
      for (int a : all) {
        for (int b : cur) comms.push_back(t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b)));
      }
      cur = t.close(comms);
      orders.push_back(cur.size());
    }
    const auto lcs = pgf::lower_central_series(g);
    ASSERT_EQ(lcs.terms.size(), orders.size()) << text;
    for (std::size_t i = 0; i < orders.size(); ++i) EXPECT_EQ(lcs.terms[i].order(), orders[i]) << text;
  }
}

TEST(RamificationTest, BoundsTableIsSigned) {
  const std::vector<pgf::BoundsRow> rows = {pgf::compare_bounds(parse_cert("C(2,2)")),
                                            pgf::compare_bounds(parse_cert("W(C(5,1),C(5,1))"))};
  EXPECT_EQ(rows[0].gap_first(), -1);
  EXPECT_EQ(rows[1].gap_first(), 2);
  EXPECT_EQ(rows[1].gap_last(), 3);
  const std::string table = pgf::format_bounds_table(rows);
  EXPECT_NE(table.find("gap_first"), std::string::npos);
  EXPECT_NE(table.find("W(C(5,1),C(5,1))"), std::string::npos);
}

TEST(RamificationTest, SmallCorpusBoundsAreConsistent) {
  for (const auto& c : pgf::certificate_corpus({2, 3}, 2, 2)) {
    pgf::BoundsRow row;
    try {
      row = pgf::compare_bounds(c);
    } catch (const pgf::InvalidCertificate&) {
      continue;
    } catch (const pgf::CapExceeded&) {
      continue;
    }
    const auto g = pgf::eval_cert(c);
    const auto b = pgf::plans_bound(g, pgf::cert_prime(c));
    unsigned total = 0;
    for (unsigned r : b.factor_ranks) total += r;
    // The first factor's rank is the group's rank.
    EXPECT_EQ(b.factor_ranks.front(), row.rank) << row.cert;
    EXPECT_EQ(row.plans_ex_first + row.rank, total) << row.cert;
    EXPECT_EQ(row.plans_ex_last + b.factor_ranks.back(), total) << row.cert;
  }
}

TEST(RamificationTest, RowsUseCensusSchema) {
  const std::vector<pgf::RamRow> rows = {pgf::ram_row(parse_cert("W(C(2,1),C(2,1))"), 1)};
  const std::string csv = pgf::emit_ram_rows(rows, pgf::ReportFormat::csv);
  EXPECT_EQ(csv,
            "order,index,provenance,rank,dl,semiabelian,screen,elapsed_ms,plans_ex_first,plans_ex_last\n"
            "8,1,\"W(C(2,1),C(2,1))\",2,2,true,inconclusive,0,1,2\n");
  const auto j = nlohmann::json::parse(pgf::emit_ram_rows(rows, pgf::ReportFormat::json));
  EXPECT_EQ(j["records"][0]["plans_ex_last"], 2);
  EXPECT_EQ(j["records"][0]["rank"], 2);
}

}  // namespace
