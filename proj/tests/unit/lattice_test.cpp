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


#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgf/error.hpp"
#include "pgf/fixtures.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/lattice.hpp"
#include "pgf/pc_presentation.hpp"

namespace {

using pgf::Perm;
using pgf::PermGroup;
using PermSet = std::set<Perm>;

PermGroup fixture(std::uint64_t order, std::size_t k) {
  return pgf::pc_to_perm(pgf::parse_pc_file(pgf::fixtures::for_order(order))[k].presentation);
}

std::vector<PermGroup> groups_up_to_16() {
  std::vector<PermGroup> out;
  for (std::uint64_t o : pgf::fixtures::kOrders) {
    for (const auto& e : pgf::parse_pc_file(pgf::fixtures::for_order(o))) {
      out.push_back(pgf::pc_to_perm(e.presentation));
    }
  }
  for (const auto& e : pgf::parse_pc_file(oracle::read_file(std::string(PGF_DATA_DIR) + "/order16.pc"))) {
    out.push_back(pgf::pc_to_perm(e.presentation));
  }
  return out;
}

std::set<PermSet> lattice_sets(const pgf::GroupTable& t, const pgf::SubgroupLattice& lat) {
  std::set<PermSet> out;
  for (const auto& r : lat.records()) {
    PermSet s;
    for (auto x : r.elements.members()) s.insert(t.element(x));
    out.insert(s);
  }
  return out;
}

std::set<PermSet> oracle_sets(const oracle::Table& t) {
  std::set<PermSet> out;
  for (const auto& sub : t.all_subgroups()) {
    PermSet s;
    for (int x : sub) s.insert(t.element(x));
    out.insert(s);
  }
  return out;
}

// Number of conjugacy classes of subgroups, by brute-force conjugation.
std::size_t oracle_class_count(const oracle::Table& t) {
  const auto subs = t.all_subgroups();
  std::set<oracle::Table::Sub> done;
  std::size_t classes = 0;
  for (const auto& s : subs) {
    if (done.count(s)) continue;
    ++classes;
    for (int g = 0; g < t.size(); ++g) {
      oracle::Table::Sub c;
      for (int x : s) c.push_back(t.mul(t.mul(t.inv(g), x), g));
      std::sort(c.begin(), c.end());
      done.insert(c);
    }
  }
  return classes;
}

TEST(LatticeTest, GroupTableIdentityFirst) {
  const pgf::GroupTable t(fixture(8, 2));
  ASSERT_EQ(t.size(), 8u);
  EXPECT_TRUE(t.element(0).is_identity());
  for (pgf::Elt x = 0; x < t.size(); ++x) {
    EXPECT_EQ(t.mul(x, t.inv(x)), 0u);
    EXPECT_EQ(t.index_of(t.element(x)), x);
  }
}

TEST(LatticeTest, ClassCountsOfSmallGroups) {
  EXPECT_EQ(pgf::subgroups_up_to_conjugacy(pgf::cyclic_group(2, 2)).size(), 3u);
  const PermGroup c2 = pgf::cyclic_group(2, 1);
  EXPECT_EQ(pgf::subgroups_up_to_conjugacy(pgf::direct_product(c2, c2)).size(), 5u);
  EXPECT_EQ(pgf::subgroups_up_to_conjugacy(fixture(8, 2)).size(), 8u);  // D4
}

TEST(LatticeTest, RepresentativesAscendByOrder) {
  const auto reps = pgf::subgroups_up_to_conjugacy(fixture(8, 2));
  for (std::size_t k = 1; k < reps.size(); ++k) EXPECT_LE(reps[k - 1].order(), reps[k].order());
  EXPECT_EQ(reps.front().order(), 1u);
  EXPECT_EQ(reps.back().order(), 8u);
}

TEST(LatticeTest, NormalAbelianSubgroups) {
  EXPECT_EQ(pgf::normal_abelian_subgroups(fixture(8, 3)).size(), 5u);  // Q8
  const PermGroup c2 = pgf::cyclic_group(2, 1);
  EXPECT_EQ(pgf::normal_abelian_subgroups(pgf::direct_product(c2, c2)).size(), 5u);
  // D4: 1, Z, C4 and the two Klein subgroups.
  const PermGroup d4 = fixture(8, 2);
  const auto na = pgf::normal_abelian_subgroups(d4);
  EXPECT_EQ(na.size(), 5u);
  const oracle::Table t(d4.generators(), d4.degree());
  std::size_t brute = 0;
  for (const auto& s : t.all_subgroups()) brute += t.abelian(s) && t.normal_in(s, t.all_subgroups().back());
  EXPECT_EQ(na.size(), brute);
  for (const auto& a : na) {
    EXPECT_TRUE(a.is_abelian());
    EXPECT_TRUE(pgf::is_normal(d4, a));
  }
}

TEST(LatticeTest, TableCapIsEnforced) {
  EXPECT_THROW(pgf::GroupTable(pgf::cyclic_group(2, 9), 256), pgf::CapExceeded);
}

TEST(LatticeProperty, SubgroupsMatchJoinClosureUpToOrder16) {
  for (const PermGroup& g : groups_up_to_16()) {
    const pgf::GroupTable t(g);
    const pgf::SubgroupLattice lat(t);
    const oracle::Table o(g.generators(), g.degree());
    EXPECT_EQ(lattice_sets(t, lat), oracle_sets(o)) << "order " << g.order();
    EXPECT_EQ(lat.class_count(), oracle_class_count(o)) << "order " << g.order();
  }
}

TEST(LatticeProperty, SubgroupsMatchJoinClosureOnLargerSamples) {
  for (const std::string name : {"order32.pc", "order81.pc", "order64.pc"}) {
    const auto entries = pgf::parse_pc_file(oracle::read_file(std::string(PGF_DATA_DIR) + "/" + name));
    for (std::size_t k = 0; k < entries.size(); k += 13) {
      const PermGroup g = pgf::pc_to_perm(entries[k].presentation);
      const pgf::GroupTable t(g);
      const pgf::SubgroupLattice lat(t);
      const oracle::Table o(g.generators(), g.degree());
      EXPECT_EQ(lattice_sets(t, lat), oracle_sets(o)) << entries[k].id.to_string();
    }
  }
}

TEST(LatticeProperty, ClassRepresentativeIsLeastMember) {
  const PermGroup g = fixture(27, 2);
  const pgf::GroupTable t(g);
  const pgf::SubgroupLattice lat(t);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    EXPECT_LE(lat[i].cls, i);
    EXPECT_EQ(lat[lat[i].cls].cls, lat[i].cls);
    EXPECT_EQ(lat[lat[i].cls].order, lat[i].order);
  }
}

}  // namespace
