// Copyright 2026 The dspp2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dspp/generator.hpp"

#include <gtest/gtest.h>

#include "dspp/metrics.hpp"
#include "dspp/oracle.hpp"

namespace dspp {
namespace {

TEST(SplitMix64, ReferenceVectors) {
  SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(zero.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(zero.next(), 0x06c45d188009454fULL);
  SplitMix64 answer(42);
  EXPECT_EQ(answer.next(), 0xbdd732262feb6e95ULL);
  EXPECT_EQ(answer.next(), 0x28efe333b266f103ULL);
}

TEST(SplitMix64, BoundedDraws) {
  SplitMix64 rng(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.between(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
    const double u = rng.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_EQ(rng.below(1), 0U);
}

TEST(RandomInstance, AllZeroLengths) {
  const auto inst = random_instance(8, 12, 1.0, 9, 3);
  for (const auto& e : inst.graph.edges()) EXPECT_EQ(e.length, 0);
}

TEST(RandomInstance, PositiveLengthsInRange) {
  const auto inst = random_instance(8, 12, 0.0, 4, 3);
  for (const auto& e : inst.graph.edges()) {
    EXPECT_GE(e.length, 1);
    EXPECT_LE(e.length, 4);
  }
}

TEST(RandomInstance, Deterministic) {
  EXPECT_EQ(random_instance(7, 9, 0.3, 5, 11), random_instance(7, 9, 0.3, 5, 11));
  EXPECT_NE(random_instance(7, 9, 0.3, 5, 11), random_instance(7, 9, 0.3, 5, 12));
}

TEST(RandomInstance, SingleEdgeFamilyAndLimits) {
  const auto inst = random_instance(2, 1, 0.3, 5, 0);
  EXPECT_EQ(inst.graph.edge_count(), 1U);
  EXPECT_EQ(inst.queries.size(), 1U);
  EXPECT_THROW(random_instance(3, 4, 0.3, 5, 0), InputError);
}

TEST(PlantedInstance, SmallOnesAreFeasible) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (std::size_t n = 6; n <= 8; ++n) {
      const auto p = planted_instance(n, seed);
      const auto& q = p.instance.queries.front();
      ASSERT_TRUE(oracle::brute_force_dspp2(p.instance.graph, q).feasible);
      ASSERT_EQ(oracle::validate_solution(p.instance.graph, q, p.plant), std::nullopt);
    }
  }
}

TEST(PlantedInstance, ShapeAtScale) {
  const auto p = planted_instance(100, 4);
  const auto& g = p.instance.graph;
  EXPECT_GE(g.edge_count(), 200U);
  EXPECT_LE(g.edge_count(), 300U);
  std::vector<EdgeId> zero;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).length == 0) zero.push_back(e);
  }
  for (const auto& cell : connected_components(g, zero).cells) {
    EXPECT_LE(cell.size(), 12U);
  }
  const auto& q = p.instance.queries.front();
  EXPECT_EQ(dijkstra(g, q.s.first).at(q.t.first), path_length(g, p.plant[0]));
}

TEST(PlantedInstance, DeterministicAndChecked) {
  EXPECT_EQ(emit_instance(planted_instance(6, 9).instance),
            emit_instance(planted_instance(6, 9).instance));
  EXPECT_THROW(planted_instance(5, 0), InputError);
}

TEST(RandomMixedGraph, AlwaysWeaklyAcyclic) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(8);
    const auto g = random_mixed_graph(n, rng.below(n * (n - 1) / 2 + 1), seed);
    ASSERT_TRUE(is_weakly_acyclic(g)) << seed;
  }
}

}  // namespace
}  // namespace dspp
