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

#ifndef DSPP_DPP_UNDIRECTED_HPP_
#define DSPP_DPP_UNDIRECTED_HPP_

#include <cstddef>
#include <optional>

#include "dspp/graph.hpp"
#include "dspp/relation.hpp"

namespace dspp {

// Two disjoint paths in an undirected graph, lengths ignored. Witness
// elements are edge ids of the graph passed in.
class UndirectedDppSolver {
 public:
  virtual ~UndirectedDppSolver() = default;

  // Forward relation of all (v, w) joined by mode-disjoint v1-w1 and v2-w2
  // paths. In vertex mode the endpoint sets {v1, w1}, {v2, w2} are disjoint.
  virtual Relation2 relation(const UndirectedGraph& graph, DisjointMode mode,
                             bool with_witnesses) const = 0;

  // Point query; a witness when the pair is related.
  virtual std::optional<Witness> find(const UndirectedGraph& graph,
                                      VertexPair from, VertexPair to,
                                      DisjointMode mode) const = 0;
};

// Enumerates simple paths for the first coordinate and searches the residual
// graph for the second. Exponential; intended for the small zero-length
// clusters the solver hands it. Throws BudgetExceeded once more than
// `path_budget` paths have been enumerated in one call.
class ExhaustiveDppSolver final : public UndirectedDppSolver {
 public:
  static constexpr std::size_t kDefaultPathBudget = 1'000'000;

  explicit ExhaustiveDppSolver(std::size_t path_budget = kDefaultPathBudget)
      : path_budget_(path_budget) {}

  std::size_t path_budget() const { return path_budget_; }

  Relation2 relation(const UndirectedGraph& graph, DisjointMode mode,
                     bool with_witnesses) const override;
  std::optional<Witness> find(const UndirectedGraph& graph, VertexPair from,
                              VertexPair to, DisjointMode mode) const override;

 private:
  std::size_t path_budget_;
};

Relation2 two_disjoint_paths_relation(const UndirectedGraph& graph,
                                      DisjointMode mode,
                                      bool with_witnesses = true);

std::optional<Witness> two_disjoint_paths_exists(const UndirectedGraph& graph,
                                                 VertexPair from, VertexPair to,
                                                 DisjointMode mode);

}  // namespace dspp

#endif  // DSPP_DPP_UNDIRECTED_HPP_
