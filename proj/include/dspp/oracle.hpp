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

#ifndef DSPP_ORACLE_HPP_
#define DSPP_ORACLE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dspp/graph.hpp"
#include "dspp/relation.hpp"
#include "dspp/solver.hpp"

// Exhaustive reference implementations. They share types with the solver
// but none of its algorithms; distances come from Floyd-Warshall.
namespace dspp::oracle {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

using DistanceTable = std::vector<std::vector<std::optional<Length>>>;

DistanceTable all_pairs_distances(const UndirectedGraph& graph);

// Simple s-t paths of length d(s, t) in lexicographic vertex order. Throws
// BudgetExceeded after `budget` search steps.
std::vector<Path> enumerate_shortest_paths(const UndirectedGraph& graph,
                                           VertexId s, VertexId t,
                                           std::size_t budget = kDefaultBudget);

// First shortest path pair found, with a validated witness.
Verdict brute_force_dspp2(const UndirectedGraph& graph, const Query& query,
                          std::size_t budget = kDefaultBudget);

// All pairs of disjoint simple paths, arcs forward and edges either way.
// Requires at most 64 vertices and 64 elements.
Relation2 brute_force_mixed_dpp(const MixedGraph& graph, DisjointMode mode,
                                std::size_t budget = kDefaultBudget);

// Disjoint from.first-to.first and from.second-to.second paths, lengths
// ignored. Requires at most 64 vertices and 64 edges.
bool brute_force_undirected_dpp(const UndirectedGraph& graph, VertexPair from,
                                VertexPair to, DisjointMode mode,
                                std::size_t budget = kDefaultBudget);

// Checks that path i runs s_i to t_i over real edges with length d(s_i, t_i)
// and that the paths are disjoint under the query mode.
std::optional<std::string> validate_solution(const UndirectedGraph& graph,
                                             const Query& query,
                                             const std::array<Path, 2>& paths);

}  // namespace dspp::oracle

#endif  // DSPP_ORACLE_HPP_
