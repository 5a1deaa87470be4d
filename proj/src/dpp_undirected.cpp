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

#include "dspp/dpp_undirected.hpp"

#include <limits>
#include <string>
#include <vector>

namespace dspp {

namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Depth-first enumeration of the simple paths leaving one vertex.
class PathEnumerator {
 public:
  PathEnumerator(const UndirectedGraph& graph, std::size_t budget)
      : graph_(graph),
        budget_(budget),
        on_path_(graph.vertex_count(), false),
        edge_used_(graph.edge_count(), false) {}

  // Calls visit(end) for every simple path from `start`, the empty path
  // first. visit returns false to stop the enumeration.
  template <class Visit>
  void run(VertexId start, Visit&& visit) {
    stopped_ = false;
    vertices_.assign(1, start);
    edges_.clear();
    on_path_[start] = true;
    descend(start, visit);
    on_path_[start] = false;
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  const std::vector<bool>& on_path() const { return on_path_; }
  const std::vector<bool>& edge_used() const { return edge_used_; }

 private:
  template <class Visit>
  void descend(VertexId v, Visit& visit) {
    if (++count_ > budget_) {
      throw BudgetExceeded("component too large: more than " +
                           std::to_string(budget_) + " paths enumerated");
    }
    if (!visit(v)) {
      stopped_ = true;
      return;
    }
    for (const auto& inc : graph_.incident(v)) {
      if (on_path_[inc.neighbor]) continue;
      on_path_[inc.neighbor] = true;
      edge_used_[inc.edge] = true;
      vertices_.push_back(inc.neighbor);
      edges_.push_back(inc.edge);
      descend(inc.neighbor, visit);
      edges_.pop_back();
      vertices_.pop_back();
      edge_used_[inc.edge] = false;
      on_path_[inc.neighbor] = false;
      if (stopped_) return;
    }
  }

  const UndirectedGraph& graph_;
  std::size_t budget_;
  std::size_t count_ = 0;
  bool stopped_ = false;
  std::vector<bool> on_path_;
  std::vector<bool> edge_used_;
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
};

// BFS in the residual of the current first path. parent[x] holds the edge
// used to reach x (kNoEdge for the root and for unreached vertices).
struct ResidualSearch {
  std::vector<bool> reached;
  std::vector<EdgeId> parent;
  std::vector<VertexId> order;

  void run(const UndirectedGraph& graph, VertexId root, DisjointMode mode,
           const std::vector<bool>& on_path,
           const std::vector<bool>& edge_used) {
    reached.assign(graph.vertex_count(), false);
    parent.assign(graph.vertex_count(), kNoEdge);
    order.clear();
    if (mode == DisjointMode::kVertex && on_path[root]) return;
    reached[root] = true;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (const auto& inc : graph.incident(order[head])) {
        if (reached[inc.neighbor]) continue;
        if (mode == DisjointMode::kEdge ? edge_used[inc.edge]
                                        : on_path[inc.neighbor]) {
          continue;
        }
        reached[inc.neighbor] = true;
        parent[inc.neighbor] = inc.edge;
        order.push_back(inc.neighbor);
      }
    }
  }

  // Path root -> x listed back to front.
  Trail trail_to(const UndirectedGraph& graph, VertexId x) const {
    std::vector<EdgeId> back_to_front;
    while (parent[x] != kNoEdge) {
      back_to_front.push_back(parent[x]);
      x = graph.edge(parent[x]).other(x);
    }
    return Trail::from(back_to_front);
  }
};

Trail back_to_front(const std::vector<EdgeId>& path) {
  std::vector<EdgeId> reversed(path.rbegin(), path.rend());
  return Trail::from(reversed);
}

}  // namespace

Relation2 ExhaustiveDppSolver::relation(const UndirectedGraph& graph,
                                        DisjointMode mode,
                                        bool with_witnesses) const {
  Relation2 rel(Semantics::kForward, with_witnesses);
  PathEnumerator paths(graph, path_budget_);
  ResidualSearch search;
  const auto n = static_cast<VertexId>(graph.vertex_count());
  for (VertexId v1 = 0; v1 < n; ++v1) {
    paths.run(v1, [&](VertexId w1) {
      std::optional<Trail> first;
      for (VertexId v2 = 0; v2 < n; ++v2) {
        search.run(graph, v2, mode, paths.on_path(), paths.edge_used());
        for (VertexId w2 : search.order) {
          if (rel.contains({v1, v2}, {w1, w2})) continue;
          Witness w;
          if (with_witnesses) {
            if (!first) first = back_to_front(paths.edges());
            w = {*first, search.trail_to(graph, w2)};
          }
          rel.insert({v1, v2}, {w1, w2}, std::move(w));
        }
      }
      return true;
    });
  }
  return rel;
}

std::optional<Witness> ExhaustiveDppSolver::find(const UndirectedGraph& graph,
                                                 VertexPair from, VertexPair to,
                                                 DisjointMode mode) const {
  PathEnumerator paths(graph, path_budget_);
  ResidualSearch search;
  std::optional<Witness> found;
  paths.run(from.first, [&](VertexId end) {
    if (end != to.first) return true;
    search.run(graph, from.second, mode, paths.on_path(), paths.edge_used());
    if (!search.reached[to.second]) return true;
    found = Witness{back_to_front(paths.edges()),
                    search.trail_to(graph, to.second)};
    return false;
  });
  return found;
}

Relation2 two_disjoint_paths_relation(const UndirectedGraph& graph,
                                      DisjointMode mode, bool with_witnesses) {
  return ExhaustiveDppSolver().relation(graph, mode, with_witnesses);
}

std::optional<Witness> two_disjoint_paths_exists(const UndirectedGraph& graph,
                                                 VertexPair from, VertexPair to,
                                                 DisjointMode mode) {
  return ExhaustiveDppSolver().find(graph, from, to, mode);
}

}  // namespace dspp
