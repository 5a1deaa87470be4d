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

#ifndef DSPP_SOLVER_HPP_
#define DSPP_SOLVER_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dspp/dpp_undirected.hpp"
#include "dspp/expansion.hpp"
#include "dspp/graph.hpp"
#include "dspp/relation.hpp"

namespace dspp {

// Find disjoint shortest paths s1 -> t1 and s2 -> t2.
struct Query {
  VertexPair s;
  VertexPair t;
  DisjointMode mode = DisjointMode::kEdge;

  friend bool operator==(const Query&, const Query&) = default;
};

// A path in the input graph; vertices has one more entry than edges.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  friend bool operator==(const Path&, const Path&) = default;
};

Length path_length(const UndirectedGraph& graph, const Path& path);

struct ComponentStats {
  std::size_t vertices = 0;
  std::size_t entries_added = 0;
  double seconds = 0;
};

struct SolveStats {
  std::size_t expansion_vertices = 0;
  std::size_t gadgets = 0;
  std::size_t relation_size = 0;
  std::vector<ComponentStats> components;
  double seconds = 0;
};

struct SolverOptions {
#ifdef NDEBUG
  static constexpr bool kCheckByDefault = false;
#else
  static constexpr bool kCheckByDefault = true;
#endif

  // Restrict the relation to left elements the query can use and drop
  // entries that can no longer reach the sinks. Verdicts are unchanged.
  bool anchored = false;
  bool with_witnesses = true;
  // Run the expansion distance and component order checks.
  bool check_invariants = kCheckByDefault;
  std::size_t path_budget = ExhaustiveDppSolver::kDefaultPathBudget;
  // Overrides path_budget when set.
  const UndirectedDppSolver* subroutine = nullptr;
};

struct Verdict {
  bool feasible = false;
  std::optional<std::array<Path, 2>> witness;
  std::optional<Length> distance1;  // d1(t1)
  std::optional<Length> distance2;  // d2(t2)
  SolveStats stats;
};

// Throws InputError when a query vertex is out of range.
Verdict solve(const UndirectedGraph& graph, const Query& query,
              const SolverOptions& options = {});

// Every t over the input vertices for which solve(graph, {s, t, mode}) is
// feasible, sorted.
std::vector<VertexPair> successors(const UndirectedGraph& graph, VertexPair s,
                                   DisjointMode mode,
                                   const SolverOptions& options = {});

// The opposed relation over W^2 after the last component. `lefts` limits
// the left elements (all of W^2 when unset).
Relation2 opposed_relation(const Expansion& expansion,
                           const OrderedComponents& order,
                           const SolverOptions& options = {},
                           std::optional<std::span<const VertexPair>> lefts =
                               std::nullopt);

// Paths through the expansion rewritten over input edges; each gadget
// traversal becomes its edge.
Path collapse_path(const Expansion& expansion, VertexId start,
                   std::span<const ElementId> elements);

}  // namespace dspp

#endif  // DSPP_SOLVER_HPP_
