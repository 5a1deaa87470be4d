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

#include "dspp/solver.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "dspp/generator.hpp"
#include "dspp/oracle.hpp"
#include "support.hpp"

namespace dspp {
namespace {

using testing::Example;

SolverOptions anchored() {
  SolverOptions o;
  o.anchored = true;
  return o;
}

SolverOptions checked(bool anchor) {
  SolverOptions o;
  o.anchored = anchor;
  o.check_invariants = true;
  return o;
}

void expect_valid(const UndirectedGraph& g, const Query& q, const Verdict& v) {
  ASSERT_TRUE(v.feasible);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(oracle::validate_solution(g, q, *v.witness), std::nullopt);
}

TEST(Solve, ExampleIsFeasible) {
  const auto g = Example::graph();
  for (bool anchor : {false, true}) {
    const auto v = solve(g, Example::query(), checked(anchor));
    expect_valid(g, Example::query(), v);
    EXPECT_EQ(v.distance1, 3);
    EXPECT_EQ(v.distance2, 3);
    EXPECT_EQ(path_length(g, (*v.witness)[0]), 3);
    EXPECT_EQ(path_length(g, (*v.witness)[1]), 3);
    EXPECT_EQ(v.stats.expansion_vertices, 14U);
    EXPECT_EQ(v.stats.components.size(), 5U);
  }
}

TEST(Solve, ExampleVertexMode) {
  const auto g = Example::graph();
  const auto q = Example::query(DisjointMode::kVertex);
  const auto want = oracle::brute_force_dspp2(g, q);
  const auto got = solve(g, q, checked(false));
  EXPECT_EQ(got.feasible, want.feasible);
  if (got.feasible) expect_valid(g, q, got);
}

TEST(Solve, PathIsInfeasible) {
  const auto g = testing::path_graph(3);
  EXPECT_FALSE(solve(g, {{0, 0}, {2, 2}}).feasible);
  EXPECT_FALSE(solve(g, {{0, 0}, {2, 2}}, anchored()).feasible);
}

TEST(Solve, EmptyFirstPath) {
  // s = (a, b), t = (a, d) on a path a - b - c - d.
  const auto g = testing::path_graph(4);
  const Query q{{0, 1}, {0, 3}};
  const auto v = solve(g, q);
  expect_valid(g, q, v);
  EXPECT_TRUE((*v.witness)[0].edges.empty());
}

TEST(Solve, UnreachableSinkReportsDistances) {
  const UndirectedGraph g(3, {{0, 1, 4}});
  const auto v = solve(g, {{0, 0}, {2, 1}});
  EXPECT_FALSE(v.feasible);
  EXPECT_FALSE(v.distance1.has_value());
  EXPECT_EQ(v.distance2, 4);
}

TEST(Solve, RejectsOutOfRangeQuery) {
  EXPECT_THROW(solve(testing::path_graph(2), {{0, 2}, {1, 1}}), InputError);
}

TEST(Solve, CycleHasTwoSides) {
  const auto g = testing::cycle_graph(4, 0);
  const Query q{{0, 0}, {2, 2}};
  expect_valid(g, q, solve(g, q));
  const auto unit = testing::cycle_graph(4, 1);
  expect_valid(unit, q, solve(unit, q));
  EXPECT_FALSE(solve(unit, {{0, 0}, {2, 2}, DisjointMode::kVertex}).feasible);
}

TEST(Solve, WithoutWitnesses) {
  SolverOptions o;
  o.with_witnesses = false;
  const auto v = solve(Example::graph(), Example::query(), o);
  EXPECT_TRUE(v.feasible);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(Successors, Example) {
  const auto s = successors(Example::graph(), {Example::s1, Example::s2},
                            DisjointMode::kEdge);
  EXPECT_TRUE(std::binary_search(s.begin(), s.end(),
                                 VertexPair{Example::t1, Example::t2}));
  EXPECT_TRUE(std::binary_search(s.begin(), s.end(),
                                 VertexPair{Example::s1, Example::s2}));
}

TEST(Successors, DisconnectedSinkNeverAppears) {
  const UndirectedGraph g(4, {{0, 1, 1}, {1, 2, 1}});
  for (const auto& t : successors(g, {0, 1}, DisjointMode::kEdge)) {
    EXPECT_NE(t.first, 3U);
  }
}

TEST(Successors, AgreeWithSolveAndAnchoring) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto mode = seed % 2 ? DisjointMode::kVertex : DisjointMode::kEdge;
    const auto inst = random_instance(6, 8, 0.3, 3, seed, mode);
    const auto& g = inst.graph;
    const VertexPair s = inst.queries.front().s;
    const auto full = successors(g, s, mode);
    EXPECT_EQ(full, successors(g, s, mode, anchored()));
    for (VertexId t1 = 0; t1 < 6; ++t1) {
      for (VertexId t2 = 0; t2 < 6; ++t2) {
        const bool listed =
            std::binary_search(full.begin(), full.end(), VertexPair{t1, t2});
        ASSERT_EQ(listed, solve(g, {s, {t1, t2}, mode}).feasible)
            << "seed " << seed << " t " << t1 << "," << t2;
      }
    }
  }
}

TEST(OpposedRelation, WitnessesValidate) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto mode = seed % 2 ? DisjointMode::kVertex : DisjointMode::kEdge;
    const auto inst = random_instance(6, 9, 0.3, 3, seed, mode);
    const auto x = build_expansion(inst.graph, inst.queries.front().s, mode);
    const auto oc = ordered_components(x);
    const auto rel = opposed_relation(x, oc);
    ASSERT_EQ(check_witnesses(x.graph, rel, mode), std::nullopt) << seed;
  }
}

TEST(SolverProperties, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(8);
    const std::size_t m = rng.below(n * (n - 1) / 2 + 1);
    const double zf = std::array{0.0, 0.3, 1.0}[seed % 3];
    const auto mode = (seed / 3) % 2 ? DisjointMode::kVertex : DisjointMode::kEdge;
    const auto inst = random_instance(n, m, zf, 4, seed, mode);
    const auto& q = inst.queries.front();
    const bool want = oracle::brute_force_dspp2(inst.graph, q).feasible;
    for (bool anchor : {false, true}) {
      const auto v = solve(inst.graph, q, checked(anchor));
      ASSERT_EQ(v.feasible, want) << "seed " << seed << " anchored " << anchor;
      if (v.feasible) expect_valid(inst.graph, q, v);
    }
  }
}

TEST(SolverProperties, Symmetries) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto mode = seed % 2 ? DisjointMode::kVertex : DisjointMode::kEdge;
    const auto inst = random_instance(7, 10, 0.3, 4, seed, mode);
    const auto& g = inst.graph;
    const auto q = inst.queries.front();
    const bool base = solve(g, q, anchored()).feasible;
    const Query swapped{{q.s.second, q.s.first}, {q.t.second, q.t.first}, mode};
    const Query reversed1{{q.t.first, q.s.second}, {q.s.first, q.t.second}, mode};
    const Query reversed2{{q.s.first, q.t.second}, {q.t.first, q.s.second}, mode};
    ASSERT_EQ(solve(g, swapped, anchored()).feasible, base) << seed;
    ASSERT_EQ(solve(g, reversed1, anchored()).feasible, base) << seed;
    ASSERT_EQ(solve(g, reversed2, anchored()).feasible, base) << seed;
    std::vector<UndirectedEdge> scaled = g.edges();
    for (auto& e : scaled) e.length *= 7;
    ASSERT_EQ(solve(UndirectedGraph(g.vertex_count(), scaled), q, anchored()).feasible,
              base)
        << seed;
  }
}

}  // namespace
}  // namespace dspp
