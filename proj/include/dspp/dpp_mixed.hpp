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

#ifndef DSPP_DPP_MIXED_HPP_
#define DSPP_DPP_MIXED_HPP_

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dspp/dpp_undirected.hpp"
#include "dspp/graph.hpp"
#include "dspp/relation.hpp"

namespace dspp {

struct MixedDppOptions {
  DisjointMode mode = DisjointMode::kEdge;
  bool with_witnesses = true;
  // Null selects an ExhaustiveDppSolver with its default budget.
  const UndirectedDppSolver* subroutine = nullptr;
};

// Disjoint paths relation of a weakly acyclic mixed graph, evaluated edge
// component by edge component in topological order. The decomposition and
// the per-component undirected relations are computed once and reused by
// every run. Runs on one instance must not overlap in time.
class DisjointPathsProgram {
 public:
  // Throws NotAcyclicError unless `graph` is weakly acyclic, and InputError
  // if an edge component holds parallel edges.
  DisjointPathsProgram(const MixedGraph& graph, MixedDppOptions options = {});

  const MixedGraph& graph() const { return graph_; }
  const MixedDppOptions& options() const { return options_; }
  const Partition& cells() const { return cells_; }
  const std::vector<std::uint32_t>& order() const { return order_; }

  // Full relation.
  Relation2 run() const;
  // Only entries whose left element has its first coordinate in `anchors`.
  Relation2 run(std::span<const VertexId> anchors) const;

 private:
  struct CellGraph {
    UndirectedGraph local;
    std::vector<ElementId> element_map;  // local edge -> element
  };

  Relation2 evaluate(const std::vector<VertexPair>& lefts) const;
  const Relation2& cell_relation(std::uint32_t cell) const;

  MixedGraph graph_;
  MixedDppOptions options_;
  Partition cells_;
  std::vector<std::uint32_t> order_;
  std::vector<std::vector<ElementId>> incoming_arcs_;  // per cell
  std::vector<CellGraph> cell_graphs_;
  mutable std::map<std::uint32_t, Relation2> cell_relations_;
};

// The relation in one call. `anchors`, when set, restricts the left
// elements as in DisjointPathsProgram::run.
Relation2 disjoint_paths_relation(
    const MixedGraph& graph, const MixedDppOptions& options = {},
    std::optional<std::span<const VertexId>> anchors = std::nullopt);

}  // namespace dspp

#endif  // DSPP_DPP_MIXED_HPP_
