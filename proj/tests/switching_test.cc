// Copyright 2026 The signedva Authors
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

#include <gtest/gtest.h>

#include "signedva/error.h"
#include "signedva/generators.h"
#include "signedva/oracle.h"
#include "signedva/switching.h"
#include "test_graphs.h"

namespace signedva {
namespace {

using testing::triangle;

SignedGraph star3() {
  SignedGraph g(4);
  for (int leaf = 1; leaf <= 3; ++leaf) g.add_edge(0, leaf, kPositive);
  return g;
}

TEST(SwitchVertexTest, NegatesIncidentEdges) {
  const SignedGraph s = switch_vertex(star3(), 0);
  for (const Edge& e : s.edges()) EXPECT_EQ(e.sign, kNegative);
  EXPECT_EQ(switch_vertex(s, 0), star3());
}

TEST(SwitchVertexTest, PathMiddleVertex) {
  SignedGraph path(3);
  path.add_edge(0, 1, kPositive);
  path.add_edge(1, 2, kPositive);
  const SignedGraph s = switch_vertex(path, 1);
  EXPECT_EQ(s.sign(0, 1), kNegative);
  EXPECT_EQ(s.sign(1, 2), kNegative);
  EXPECT_THROW(switch_vertex(path, 3), Error);
}

TEST(SwitchSetTest, Examples) {
  const SignedGraph t = triangle();
  EXPECT_EQ(switch_set(t, std::vector<Vertex>{}), t);
  EXPECT_EQ(switch_set(t, std::vector<Vertex>{0, 1, 2}), t);
  const SignedGraph s = switch_set(t, std::vector<Vertex>{0});
  EXPECT_EQ(s.sign(0, 1), kNegative);
  EXPECT_EQ(s.sign(0, 2), kNegative);
  EXPECT_EQ(s.sign(1, 2), kPositive);
  EXPECT_THROW(switch_set(t, std::vector<Vertex>{5}), Error);
}

TEST(BalanceTest, Examples) {
  EXPECT_TRUE(is_balanced(testing::complete(5)));
  const BalanceResult one_negative = check_balance(triangle(1, 1, -1));
  EXPECT_FALSE(one_negative.balanced);
  EXPECT_EQ(one_negative.negative_cycle.size(), 3u);
  SignedGraph c4 = testing::cycle(4);
  c4.set_sign(0, kNegative);
  c4.set_sign(2, kNegative);
  EXPECT_TRUE(is_balanced(c4));
}

TEST(BalanceTest, RequireBalancedCarriesWitness) {
  try {
    require_balanced(triangle(-1, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBalanced);
    EXPECT_EQ(e.witness().size(), 3u);
  }
}

TEST(SignatureFromPotentialTest, Examples) {
  const std::vector<UnsignedEdge> edges{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_EQ(signature_from_potential(3, edges, std::vector<int>{1, 1, 1}),
            triangle());
  EXPECT_EQ(signature_from_potential(3, edges, std::vector<int>{-1, -1, -1}),
            triangle());
  const SignedGraph s =
      signature_from_potential(3, edges, std::vector<int>{1, -1, -1});
  EXPECT_EQ(s.sign(0, 1), kNegative);
  EXPECT_EQ(s.sign(0, 2), kNegative);
  EXPECT_EQ(s.sign(1, 2), kPositive);
  EXPECT_TRUE(is_balanced(s));
}

TEST(SwitchingOrbitTest, CountAndDeterminism) {
  const SignedGraph g = triangle(1, -1, 1);
  EXPECT_TRUE(switching_orbit_sample(g, 0, 3).empty());
  const auto a = switching_orbit_sample(g, 1, 42);
  const auto b = switching_orbit_sample(g, 1, 42);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a, b);
  for (const SignedGraph& o : switching_orbit_sample(g, 5, 7)) {
    EXPECT_EQ(is_balanced(o), is_balanced(g));
  }
}

class SwitchingProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SwitchingProperties, Invariants) {
  std::mt19937_64 rng(GetParam());
  const int n = std::uniform_int_distribution<int>(1, 10)(rng);
  const int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
  const SignedGraph g = random_signed_graph(n, m, rng());
  std::vector<Vertex> s, complement;
  for (Vertex v = 0; v < n; ++v) (rng() & 1 ? s : complement).push_back(v);

  EXPECT_EQ(switch_set(g, s), switch_set(g, complement));
  SignedGraph sequential = g;
  for (Vertex v : s) sequential = switch_vertex(sequential, v);
  EXPECT_EQ(sequential, switch_set(g, s));
  EXPECT_EQ(is_balanced(switch_set(g, s)), is_balanced(g));

  const BalanceResult b = check_balance(g);
  if (b.balanced) {
    EXPECT_EQ(signature_from_potential(n, g.unsigned_edges(), b.theta), g);
  } else {
    // The witness is a cycle of g with an odd number of negative edges.
    const auto& cyc = b.negative_cycle;
    ASSERT_GE(cyc.size(), 3u);
    int product = 1;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      product *= g.sign(cyc[k], cyc[(k + 1) % cyc.size()]);
    }
    EXPECT_EQ(product, -1);
  }
}

TEST_P(SwitchingProperties, OracleValueIsSwitchingInvariant) {
  std::mt19937_64 rng(GetParam() + 1000);
  const int n = std::uniform_int_distribution<int>(2, 7)(rng);
  const int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
  const SignedGraph g = random_signed_graph(n, m, rng());
  const int va = oracle_va(g, 4).va;
  for (const SignedGraph& h : switching_orbit_sample(g, 2, rng())) {
    EXPECT_EQ(oracle_va(h, 4).va, va);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SwitchingProperties,
                         ::testing::Range<std::uint64_t>(0, 60));

}  // namespace
}  // namespace signedva
