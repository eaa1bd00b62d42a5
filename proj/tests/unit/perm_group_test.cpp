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


#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgf/error.hpp"
#include "pgf/perm_group.hpp"

namespace {

using pgf::Perm;
using pgf::PermGroup;

TEST(PermGroupTest, SymmetricAndAlternatingOrders) {
  const Perm cycle = Perm::from_cycles("(1,2,3,4,5,6)", 6);
  const Perm swap = Perm::from_cycles("(1,2)", 6);
  EXPECT_EQ(PermGroup({cycle, swap}).order(), 720u);
  const Perm t1 = Perm::from_cycles("(1,2,3)", 6);
  const Perm t2 = Perm::from_cycles("(2,3,4,5,6)", 6);
  EXPECT_EQ(PermGroup({t1, t2}).order(), 360u);
}

TEST(PermGroupTest, MembershipAgreesWithClosure) {
  const Perm a = Perm::from_cycles("(1,2,3,4)", 4);
  const Perm b = Perm::from_cycles("(1,3)", 4);
  const PermGroup d4({a, b});
  ASSERT_EQ(d4.order(), 8u);
  const auto members = oracle::closure({a, b}, 4);
  std::vector<pgf::Point> img = {0, 1, 2, 3};
  do {
    const Perm x = Perm::from_raw(img);
    const bool expect = std::find(members.begin(), members.end(), x) != members.end();
    EXPECT_EQ(d4.contains(x), expect) << x.to_string();
  } while (std::next_permutation(img.begin(), img.end()));
}

TEST(PermGroupTest, ElementsEnumeratesEachOnce) {
  const PermGroup g({Perm::from_cycles("(1,2,3)(4,5)", 5)});
  auto els = g.elements();
  ASSERT_EQ(els.size(), 6u);
  std::sort(els.begin(), els.end());
  EXPECT_EQ(std::adjacent_find(els.begin(), els.end()), els.end());
}

TEST(PermGroupTest, EnumerationCapIsEnforced) {
  const PermGroup s6({Perm::from_cycles("(1,2,3,4,5,6)", 6), Perm::from_cycles("(1,2)", 6)});
  EXPECT_THROW(s6.elements(100), pgf::CapExceeded);
}

TEST(PermGroupTest, TrivialGroup) {
  const PermGroup t = PermGroup::trivial(5);
  EXPECT_EQ(t.order(), 1u);
  EXPECT_TRUE(t.is_trivial());
  EXPECT_TRUE(t.is_abelian());
}

TEST(PermGroupTest, BasePrefixIsHonoured) {
  const PermGroup g({Perm::from_cycles("(1,2,3,4)", 4), Perm::from_cycles("(1,3)", 4)});
  const std::vector<pgf::Point> prefix = {3, 2};
  const PermGroup h = g.with_base_prefix(prefix);
  EXPECT_EQ(h.order(), 8u);
  const auto base = h.chain().base();
  ASSERT_GE(base.size(), 1u);
  EXPECT_EQ(base[0], 3u);
}

TEST(PermGroupProperty, OrderMatchesNaiveClosure) {
  std::mt19937_64 rng(20260101);
  for (int t = 0; t < 100; ++t) {
    const std::size_t degree = 2 + rng() % 6;
    std::vector<Perm> gens;
    for (std::size_t k = 0, n = 1 + rng() % 3; k < n; ++k) gens.push_back(oracle::random_perm(degree, rng));
    EXPECT_EQ(PermGroup(gens).order(), oracle::closure(gens, degree).size());
  }
}

TEST(PermGroupProperty, SiftedProductsStayInside) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t degree = 3 + rng() % 6;
    std::vector<Perm> gens = {oracle::random_perm(degree, rng), oracle::random_perm(degree, rng)};
    const PermGroup g(gens);
    Perm x(degree);
    for (int k = 0; k < 20; ++k) {
      x = x * gens[rng() % 2];
      EXPECT_TRUE(g.contains(x));
    }
  }
}

}  // namespace
