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
#include "pgf/perm.hpp"

namespace {

using pgf::Perm;

TEST(PermTest, ProductAppliesLeftFactorFirst) {
  const Perm a = Perm::from_cycles("(1,2)", 3);
  const Perm b = Perm::from_cycles("(2,3)", 3);
  const Perm ab = a * b;
  // 1 -> 2 under a, then 2 -> 3 under b.
  EXPECT_EQ(ab.image(1), 3u);
  EXPECT_EQ(ab.image(3), 2u);
  EXPECT_EQ(ab.image(2), 1u);
  EXPECT_EQ(pgf::compose(a, b), ab);
}

TEST(PermTest, FromImagesIsOneBased) {
  const std::vector<std::size_t> img = {2, 3, 1};
  const Perm p = Perm::from_images(img);
  EXPECT_EQ(p.image(1), 2u);
  EXPECT_EQ(p.to_string(), "(1 2 3)");
  EXPECT_EQ(p.order(), 3u);
}

TEST(PermTest, RejectsNonPermutations) {
  const std::vector<std::size_t> repeated = {1, 1, 3};
  const std::vector<std::size_t> out_of_range = {1, 4, 2};
  EXPECT_THROW(Perm::from_images(repeated), pgf::Error);
  EXPECT_THROW(Perm::from_images(out_of_range), pgf::Error);
  EXPECT_THROW(Perm::from_cycles("(1,5)", 4), pgf::Error);
}

TEST(PermTest, DegreeMismatchThrows) {
  EXPECT_THROW(Perm(3) * Perm(4), pgf::DegreeMismatch);
}

TEST(PermTest, CommutatorAndConjugateConventions) {
  const Perm a = Perm::from_cycles("(1,2,3,4)", 4);
  const Perm b = Perm::from_cycles("(1,3)", 4);
  EXPECT_EQ(pgf::commutator(a, b), a.inverse() * b.inverse() * a * b);
  EXPECT_EQ(pgf::conjugate(a, b), b.inverse() * a * b);
}

TEST(PermTest, CycleTextRoundTrips) {
  const Perm p = Perm::from_cycles("(1,4)(2,5,3)", 6);
  EXPECT_EQ(p.to_string(), "(1 4)(2 5 3)");
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(Perm(5).to_string(), "()");
  EXPECT_TRUE(Perm(5).is_identity());
}

TEST(PermProperty, GroupAxiomsOnRandomPerms) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const Perm a = oracle::random_perm(n, rng);
    const Perm b = oracle::random_perm(n, rng);
    const Perm c = oracle::random_perm(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    EXPECT_TRUE(a.pow(static_cast<long long>(a.order())).is_identity());
    EXPECT_EQ(a.pow(-1), a.inverse());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(PermProperty, OrderIsSmallestPositivePower) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Perm a = oracle::random_perm(1 + rng() % 9, rng);
    Perm x = a;
    std::uint64_t k = 1;
    while (!x.is_identity()) {
      x = x * a;
      ++k;
    }
    EXPECT_EQ(a.order(), k);
  }
}

}  // namespace
