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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgf/fixtures.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/pc_presentation.hpp"

namespace {

using pgf::PcElement;
using pgf::PcPresentation;

std::vector<pgf::PcEntry> dataset(const std::string& name) {
  return pgf::parse_pc_file(oracle::read_file(std::string(PGF_DATA_DIR) + "/" + name));
}

TEST(PcTest, EmbeddedOrder8Fixtures) {
  const auto entries = pgf::parse_pc_file(pgf::fixtures::kOrder8);
  ASSERT_EQ(entries.size(), 5u);
  for (const auto& e : entries) {
    EXPECT_EQ(e.presentation.order(), 8u);
    EXPECT_EQ(pgf::pc_to_perm(e.presentation).order(), 8u);
  }
}

TEST(PcTest, FixtureInvariantsMatchTheClassification) {
  // (abelian, rank) for C8, C4xC2, D4, Q8, C2^3.
  const std::vector<std::pair<bool, unsigned>> want = {
      {true, 1}, {true, 2}, {false, 2}, {false, 2}, {true, 3}};
  const auto entries = pgf::parse_pc_file(pgf::fixtures::kOrder8);
  for (std::size_t k = 0; k < want.size(); ++k) {
    const auto g = pgf::pc_to_perm(entries[k].presentation);
    EXPECT_EQ(g.is_abelian(), want[k].first) << k;
    EXPECT_EQ(pgf::rank(g, 2), want[k].second) << k;
  }
  // Q8 has a single involution, D4 has five.
  auto involutions = [](const pgf::PermGroup& g) {
    int n = 0;
    for (const auto& x : g.elements()) n += x.order() == 2;
    return n;
  };
  EXPECT_EQ(involutions(pgf::pc_to_perm(entries[2].presentation)), 5);
  EXPECT_EQ(involutions(pgf::pc_to_perm(entries[3].presentation)), 1);
}

TEST(PcTest, CollectionInQ8) {
  const auto q8 = pgf::parse_pc_file(pgf::fixtures::kOrder8)[3].presentation;
  const PcElement a = q8.generator(1), b = q8.generator(2), z = q8.generator(3);
  EXPECT_EQ(q8.multiply(a, a), z);
  EXPECT_EQ(q8.multiply(b, b), z);
  // b a = a b [b, a] = a b z.
  EXPECT_EQ(q8.multiply(b, a), q8.multiply(q8.multiply(a, b), z));
  EXPECT_EQ(q8.multiply(z, z), q8.identity());
  EXPECT_EQ(q8.multiply(q8.inverse(a), a), q8.identity());
}

TEST(PcTest, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      pgf::parse_pc_file(text);
    } catch (const pgf::ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("GROUP 4 1\nPRIME 2\nNGENS 2\nPOWER 1 = g1\nEND\n"), 4u);
  EXPECT_EQ(line_of("GROUP 8 1\nPRIME 2\nNGENS 2\nEND\n"), 1u);
  EXPECT_EQ(line_of("GROUP 4 1\nPRIME 4\nNGENS 2\nEND\n"), 2u);
  EXPECT_EQ(line_of("# c\nGROUP 4 1\nPRIME 2\nNGENS 2\nFOO\nEND\n"), 5u);
  EXPECT_EQ(line_of("GROUP 4 1\nPRIME 2\nNGENS 2\nCOMM 1 2 = g2\nEND\n"), 4u);
  EXPECT_EQ(line_of("GROUP 2 1\nPRIME 2\nNGENS 1\nEND\nGROUP 2 1\nPRIME 2\nNGENS 1\nEND\n"), 5u);
  EXPECT_GT(line_of("GROUP 2 1\nPRIME 2\nNGENS 1\n"), 0u);
  EXPECT_EQ(line_of("GROUP 4 1\nPRIME 2\nNGENS 2\nPOWER 1 = g2^2\nEND\n"), 4u);
}

TEST(PcTest, SerializeRoundTrips) {
  for (std::uint64_t o : pgf::fixtures::kOrders) {
    const auto entries = pgf::parse_pc_file(pgf::fixtures::for_order(o));
    const std::string text = pgf::serialize_pc(entries);
    EXPECT_EQ(pgf::serialize_pc(pgf::parse_pc_file(text)), text);
  }
  const auto d64 = dataset("order64.pc");
  const std::string text = pgf::serialize_pc(d64);
  const auto again = pgf::parse_pc_file(text);
  ASSERT_EQ(again.size(), d64.size());
  for (std::size_t k = 0; k < d64.size(); k += 17) {
    const auto& p = d64[k].presentation;
    const auto& q = again[k].presentation;
    for (std::size_t i = 1; i <= p.ngens(); ++i) {
      EXPECT_EQ(p.power(i), q.power(i));
      for (std::size_t j = i + 1; j <= p.ngens(); ++j) EXPECT_EQ(p.comm(j, i), q.comm(j, i));
    }
  }
}

TEST(PcTest, IndexOfInvertsElementAt) {
  const auto p = pgf::parse_pc_file(pgf::fixtures::kOrder27)[3].presentation;
  for (std::uint64_t i = 0; i < p.order(); ++i) EXPECT_EQ(p.index_of(p.element_at(i)), i);
}

TEST(PcProperty, CollectionIsAssociative) {
  std::mt19937_64 rng(5);
  for (const std::string name : {"order32.pc", "order81.pc", "order243.pc"}) {
    const auto entries = dataset(name);
    for (std::size_t k = 0; k < entries.size(); k += 3) {
      const PcPresentation& p = entries[k].presentation;
      for (int t = 0; t < 10; ++t) {
        const PcElement a = p.element_at(rng() % p.order());
        const PcElement b = p.element_at(rng() % p.order());
        const PcElement c = p.element_at(rng() % p.order());
        ASSERT_EQ(p.multiply(p.multiply(a, b), c), p.multiply(a, p.multiply(b, c)))
            << entries[k].id.to_string();
        EXPECT_EQ(p.multiply(a, p.inverse(a)), p.identity());
      }
    }
  }
}

TEST(PcProperty, PresentationOrderEqualsPermutationOrder) {
  for (const std::string name : {"order16.pc", "order32.pc", "order64.pc", "order81.pc", "order243.pc"}) {
    for (const auto& e : dataset(name)) {
      ASSERT_EQ(pgf::pc_to_perm(e.presentation).order(), e.presentation.order()) << e.id.to_string();
    }
  }
}

TEST(PcProperty, RegularRepresentationIsAHomomorphism) {
  std::mt19937_64 rng(9);
  const auto entries = dataset("order32.pc");
  for (std::size_t k = 0; k < entries.size(); k += 5) {
    const PcPresentation& p = entries[k].presentation;
    const auto g = pgf::pc_to_perm(p);
    // Generator i of the permutation group is the image of g_i.
    auto image = [&](const PcElement& x) {
      pgf::Perm out(g.degree());
      for (std::size_t i = 0; i < p.ngens(); ++i) {
        for (std::uint32_t e = 0; e < x.exponents[i]; ++e) out = out * g.generators()[i];
      }
      return out;
    };
    for (int t = 0; t < 10; ++t) {
      const PcElement a = p.element_at(rng() % p.order());
      const PcElement b = p.element_at(rng() % p.order());
      EXPECT_EQ(image(p.multiply(a, b)), image(a) * image(b));
    }
  }
}

}  // namespace
