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
#include "pgf/fixtures.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/pc_presentation.hpp"
#include "pgf/semiabelian.hpp"

namespace {

using pgf::PermGroup;

PermGroup fixture(std::uint64_t order, std::size_t k) {
  return pgf::pc_to_perm(pgf::parse_pc_file(pgf::fixtures::for_order(order))[k].presentation);
}

std::vector<pgf::PcEntry> dataset(const std::string& name) {
  return pgf::parse_pc_file(oracle::read_file(std::string(PGF_DATA_DIR) + "/" + name));
}

TEST(SemiabelianTest, TrivialAndAbelian) {
  const auto t = pgf::is_semiabelian(PermGroup::trivial(3));
  EXPECT_TRUE(t.flag);
  EXPECT_TRUE(t.witness.empty());
  const auto c = pgf::is_semiabelian(pgf::cyclic_group(2, 5));
  EXPECT_TRUE(c.flag);
  ASSERT_EQ(c.witness.size(), 1u);
  EXPECT_TRUE(c.witness[0].h.is_trivial());
}

TEST(SemiabelianTest, Q8AndD4WithValidWitness) {
  for (std::size_t k : {2, 3}) {
    const PermGroup g = fixture(8, k);
    const auto v = pgf::is_semiabelian(g);
    EXPECT_TRUE(v.flag);
    EXPECT_TRUE(pgf::validate_witness(g, v));
    EXPECT_GE(v.witness.size(), 2u);
  }
}

TEST(SemiabelianTest, TamperedWitnessIsRejected) {
  const PermGroup g = fixture(8, 2);
  auto v = pgf::is_semiabelian(g);
  ASSERT_TRUE(v.flag);
  auto bad = v;
  bad.witness[0].h = g;  // not proper
  EXPECT_FALSE(pgf::validate_witness(g, bad));
  bad = v;
  bad.witness.pop_back();  // chain no longer ends at 1
  EXPECT_FALSE(pgf::validate_witness(g, bad));
  bad = v;
  bad.witness[0].a = g;  // not abelian
  EXPECT_FALSE(pgf::validate_witness(g, bad));
}

TEST(SemiabelianTest, CapIsEnforced) {
  const PermGroup g = pgf::eval_cert(pgf::parse_cert("W(C(2,2),C(2,2))"));
  EXPECT_THROW(pgf::is_semiabelian(g, 256), pgf::CapExceeded);
}

TEST(SemiabelianTest, ExactlyTenOfOrder64AreNot) {
  std::size_t not_semi = 0;
  for (const auto& e : dataset("order64.pc")) {
    const PermGroup g = pgf::pc_to_perm(e.presentation);
    const auto v = pgf::is_semiabelian(g);
    if (!v.flag) {
      ++not_semi;
      EXPECT_FALSE(v.summary().empty());
    } else {
      EXPECT_TRUE(pgf::validate_witness(g, v)) << e.id.to_string();
    }
  }
  EXPECT_EQ(not_semi, 10u);
}

TEST(SemiabelianTest, ScreenExamples) {
  EXPECT_EQ(pgf::dl_rank_screen(fixture(8, 2), 2), pgf::Screen::inconclusive);
  EXPECT_EQ(pgf::dl_rank_screen(pgf::cyclic_group(2, 3), 2), pgf::Screen::inconclusive);
}

TEST(SemiabelianTest, DerivedLengthAboveRankExcludes) {
  std::size_t found = 0;
  for (const auto& e : dataset("order128.pc")) {
    const PermGroup g = pgf::pc_to_perm(e.presentation);
    if (pgf::derived_length(g) <= pgf::rank(g, 2)) continue;
    ++found;
    EXPECT_EQ(pgf::dl_rank_screen(g, 2), pgf::Screen::definitely_not_member);
    EXPECT_FALSE(pgf::is_semiabelian(g).flag) << e.id.to_string();
    EXPECT_FALSE(pgf::in_family_g(g)) << e.id.to_string();
  }
  EXPECT_GT(found, 0u);
}

TEST(SemiabelianProperty, AgreesWithUnreducedSearch) {
  // The oracle tries every (A, H) pair over all subgroups, with no class
  // reduction, on its own multiplication table.
  const auto entries = dataset("order64.pc");
  std::size_t checked_false = 0, checked_true = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const PermGroup g = pgf::pc_to_perm(entries[k].presentation);
    if (g.is_abelian()) continue;
    const bool flag = pgf::is_semiabelian(g).flag;
    if (flag && k % 20 != 0) continue;
    const oracle::Table t(g.generators(), g.degree());
    EXPECT_EQ(t.semiabelian(), flag) << entries[k].id.to_string();
    ++(flag ? checked_true : checked_false);
  }
  EXPECT_EQ(checked_false, 10u);
  EXPECT_GT(checked_true, 5u);
  for (std::uint64_t o : {8, 27}) {
    for (const auto& e : pgf::parse_pc_file(pgf::fixtures::for_order(o))) {
      const PermGroup g = pgf::pc_to_perm(e.presentation);
      EXPECT_EQ(oracle::Table(g.generators(), g.degree()).semiabelian(), pgf::is_semiabelian(g).flag);
    }
  }
}

TEST(SemiabelianProperty, CertificateGroupsAreSemiabelian) {
  std::size_t checked = 0;
  for (const auto& c : pgf::certificate_corpus({2, 3}, 2, 2)) {
    PermGroup g = PermGroup::trivial(1);
    try {
      g = pgf::eval_cert(c);
    } catch (const pgf::Error&) {
      continue;
    }
    if (g.order() > 256) continue;
    const auto v = pgf::is_semiabelian(g);
    EXPECT_TRUE(v.flag) << pgf::to_string(c);
    EXPECT_TRUE(pgf::validate_witness(g, v)) << pgf::to_string(c);
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}

TEST(SemiabelianProperty, ClosedUnderQuotientsAndProducts) {
  const auto entries = dataset("order32.pc");
  const PermGroup c2 = pgf::cyclic_group(2, 1);
  for (const auto& e : entries) {
    const PermGroup g = pgf::pc_to_perm(e.presentation);
    EXPECT_TRUE(pgf::is_semiabelian(pgf::quotient_group(g, pgf::center(g))).flag) << e.id.to_string();
    EXPECT_TRUE(pgf::is_semiabelian(pgf::direct_product(g, c2)).flag) << e.id.to_string();
  }
}

TEST(SemiabelianProperty, MembersSatisfyDerivedLengthBound) {
  for (const std::string name : {"order64.pc", "order243.pc"}) {
    for (const auto& e : dataset(name)) {
      const PermGroup g = pgf::pc_to_perm(e.presentation);
      if (pgf::is_semiabelian(g).flag) {
        EXPECT_LE(pgf::derived_length(g), pgf::rank(g, e.presentation.prime())) << e.id.to_string();
      }
    }
  }
}

}  // namespace
