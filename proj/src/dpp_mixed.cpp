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

#include "dspp/dpp_mixed.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "staged.hpp"

namespace dspp {

namespace {

constexpr ElementId kNone = std::numeric_limits<ElementId>::max();

const UndirectedDppSolver& default_subroutine() {
  static const ExhaustiveDppSolver solver;
  return solver;
}

// Vertices reachable from `root` over edges only, with the element used to
// enter each of them.
struct EdgeReach {
  std::vector<VertexId> order;
  std::unordered_map<VertexId, ElementId> parent;

  EdgeReach(const MixedGraph& g, VertexId root) {
    order.push_back(root);
    parent.emplace(root, kNone);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const VertexId v = order[i];
      for (ElementId e : g.outgoing(v)) {
        const auto& el = g.element(e);
        if (!el.is_edge()) continue;
        const VertexId w = el.other(v);
        if (parent.emplace(w, e).second) order.push_back(w);
      }
    }
  }

  // root -> x, back to front.
  Trail trail_to(const MixedGraph& g, VertexId x) const {
    std::vector<ElementId> ids;
    for (ElementId e = parent.at(x); e != kNone; e = parent.at(x)) {
      ids.push_back(e);
      x = g.element(e).other(x);
    }
    return Trail::from(ids);
  }
};

}  // namespace

DisjointPathsProgram::DisjointPathsProgram(const MixedGraph& graph,
                                           MixedDppOptions options)
    : graph_(graph), options_(options) {
  if (options_.subroutine == nullptr) options_.subroutine = &default_subroutine();
  cells_ = weakly_connected_components(graph_, graph_.edges());
  order_ = contract_and_topo_order(graph_, cells_);

  incoming_arcs_.resize(cells_.size());
  for (ElementId a : graph_.arcs()) {
    incoming_arcs_[cells_.cell_of[graph_.element(a).head]].push_back(a);
  }

  cell_graphs_.resize(cells_.size());
  for (std::uint32_t c = 0; c < cells_.size(); ++c) {
    const auto& cell = cells_.cells[c];
    const auto local = [&](VertexId v) {
      return static_cast<VertexId>(
          std::lower_bound(cell.begin(), cell.end(), v) - cell.begin());
    };
    std::vector<UndirectedEdge> edges;
    auto& map = cell_graphs_[c].element_map;
    for (VertexId v : cell) {
      for (ElementId e : graph_.outgoing(v)) {
        const auto& el = graph_.element(e);
        if (!el.is_edge() || el.tail != v) continue;
        edges.push_back({local(el.tail), local(el.head), 0});
        map.push_back(e);
      }
    }
    try {
      cell_graphs_[c].local = UndirectedGraph(cell.size(), std::move(edges));
    } catch (const InputError&) {
      throw InputError("parallel edges inside an edge component of vertex " +
                       std::to_string(cell.front()));
    }
  }
}

const Relation2& DisjointPathsProgram::cell_relation(std::uint32_t cell) const {
  auto it = cell_relations_.find(cell);
  if (it == cell_relations_.end()) {
    const auto& cg = cell_graphs_[cell];
    Relation2 local = options_.subroutine->relation(cg.local, options_.mode,
                                                    options_.with_witnesses);
    it = cell_relations_
             .emplace(cell, remap(local, cells_.cells[cell], cg.element_map))
             .first;
  }
  return it->second;
}

Relation2 DisjointPathsProgram::run() const {
  std::vector<VertexPair> lefts;
  const auto n = static_cast<VertexId>(graph_.vertex_count());
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (options_.mode == DisjointMode::kVertex && a == b) continue;
      lefts.push_back({a, b});
    }
  }
  return evaluate(lefts);
}

Relation2 DisjointPathsProgram::run(std::span<const VertexId> anchors) const {
  std::vector<VertexId> sorted(anchors.begin(), anchors.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<VertexPair> lefts;
  const auto n = static_cast<VertexId>(graph_.vertex_count());
  for (VertexId a : sorted) {
    if (a >= n) throw InputError("anchor vertex out of range");
    for (VertexId b = 0; b < n; ++b) {
      if (options_.mode == DisjointMode::kVertex && a == b) continue;
      lefts.push_back({a, b});
    }
  }
  return evaluate(lefts);
}

Relation2 DisjointPathsProgram::evaluate(
    const std::vector<VertexPair>& lefts) const {
  const bool witnesses = options_.with_witnesses;
  detail::StagedRelation staged(graph_.vertex_count(), Semantics::kForward,
                                witnesses);
  for (const auto& l : lefts) staged.insert(l, l, {});

  for (std::uint32_t c : order_) {
    const auto& cell = cells_.cells[c];
    const detail::ArcIndex by_tail(graph_, incoming_arcs_[c],
                                   detail::ArcIndex::Key::kTail);
    std::vector<VertexId> candidates = by_tail.keys();
    candidates.insert(candidates.end(), cell.begin(), cell.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    const auto active = staged.touching(candidates, candidates);
    if (active.empty()) continue;

    const auto delta = [&](VertexPair p, std::vector<detail::Move>& out) {
      detail::forward_arc_moves(graph_, by_tail, p, options_.mode, witnesses,
                                out);
    };
    const auto component = [&](VertexPair q, std::vector<detail::Move>& out) {
      const bool in1 = cells_.cell_of[q.first] == c;
      const bool in2 = cells_.cell_of[q.second] == c;
      if (in1 && in2) {
        if (const auto* row = cell_relation(c).row(q)) {
          for (const auto& [right, w] : *row) out.push_back({right, w});
        }
      } else if (in1 || in2) {
        const VertexId root = in1 ? q.first : q.second;
        const EdgeReach reach(graph_, root);
        for (VertexId x : reach.order) {
          Witness w;
          Trail t = witnesses ? reach.trail_to(graph_, x) : Trail{};
          (in1 ? w.first : w.second) = std::move(t);
          out.push_back({in1 ? VertexPair{x, q.second} : VertexPair{q.first, x},
                         std::move(w)});
        }
      } else {
        out.push_back({q, {}});
      }
    };
    detail::advance(staged, active, delta, component);
  }
  return staged.release();
}

Relation2 disjoint_paths_relation(
    const MixedGraph& graph, const MixedDppOptions& options,
    std::optional<std::span<const VertexId>> anchors) {
  const DisjointPathsProgram program(graph, options);
  return anchors ? program.run(*anchors) : program.run();
}

}  // namespace dspp
