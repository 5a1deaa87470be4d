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

#include "dspp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>

namespace dspp::oracle {

namespace {

void charge(std::size_t& steps, std::size_t budget) {
  if (++steps > budget) throw BudgetExceeded("path budget exceeded");
}

// Pruned DFS over simple s-t paths of length exactly `target`, skipping
// blocked edges and vertices. visit returns false to stop.
class ShortestPathSearch {
 public:
  ShortestPathSearch(const UndirectedGraph& graph, const DistanceTable& d,
                     std::size_t budget)
      : graph_(graph), d_(d), budget_(budget) {}

  void run(VertexId s, VertexId t, const std::vector<bool>& blocked_edges,
           const std::vector<bool>& blocked_vertices,
           const std::function<bool(const Path&)>& visit) {
    if (!d_[s][t] || blocked_vertices[s]) return;
    target_ = *d_[s][t];
    t_ = t;
    blocked_edges_ = &blocked_edges;
    blocked_vertices_ = &blocked_vertices;
    on_path_.assign(graph_.vertex_count(), false);
    path_ = Path{{s}, {}};
    on_path_[s] = true;
    stop_ = false;
    descend(s, 0, visit);
  }

 private:
  void descend(VertexId v, Length length,
               const std::function<bool(const Path&)>& visit) {
    charge(steps_, budget_);
    if (v == t_ && length == target_) {
      if (!visit(path_)) stop_ = true;
      return;
    }
    for (const auto& inc : graph_.incident(v)) {
      const VertexId w = inc.neighbor;
      if (on_path_[w] || (*blocked_edges_)[inc.edge] || (*blocked_vertices_)[w]) {
        continue;
      }
      const Length next = length + graph_.edge(inc.edge).length;
      if (!d_[w][t_] || next + *d_[w][t_] > target_) continue;
      on_path_[w] = true;
      path_.vertices.push_back(w);
      path_.edges.push_back(inc.edge);
      descend(w, next, visit);
      path_.edges.pop_back();
      path_.vertices.pop_back();
      on_path_[w] = false;
      if (stop_) return;
    }
  }

  const UndirectedGraph& graph_;
  const DistanceTable& d_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  Length target_ = 0;
  VertexId t_ = 0;
  const std::vector<bool>* blocked_edges_ = nullptr;
  const std::vector<bool>* blocked_vertices_ = nullptr;
  std::vector<bool> on_path_;
  Path path_;
  bool stop_ = false;
};

struct MaskedPath {
  VertexId start;
  VertexId end;
  std::uint64_t elements;
  std::uint64_t vertices;
  std::vector<ElementId> ids;
};

// Every simple path of a mixed graph (empty ones included).
std::vector<MaskedPath> all_simple_paths(const MixedGraph& g,
                                         std::size_t budget) {
  std::vector<MaskedPath> out;
  std::size_t steps = 0;
  MaskedPath cur{};
  std::function<void(VertexId)> descend = [&](VertexId v) {
    charge(steps, budget);
    cur.end = v;
    out.push_back(cur);
    for (ElementId e : g.outgoing(v)) {
      const VertexId w = g.element(e).other(v);
      if (cur.vertices >> w & 1U) continue;
      cur.vertices |= std::uint64_t{1} << w;
      cur.elements |= std::uint64_t{1} << e;
      cur.ids.push_back(e);
      descend(w);
      cur.ids.pop_back();
      cur.elements &= ~(std::uint64_t{1} << e);
      cur.vertices &= ~(std::uint64_t{1} << w);
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    cur = MaskedPath{v, v, 0, std::uint64_t{1} << v, {}};
    descend(v);
  }
  return out;
}

bool masks_disjoint(const MaskedPath& a, const MaskedPath& b,
                    DisjointMode mode) {
  return mode == DisjointMode::kEdge ? (a.elements & b.elements) == 0
                                     : (a.vertices & b.vertices) == 0;
}

}  // namespace

DistanceTable all_pairs_distances(const UndirectedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  DistanceTable d(n, std::vector<std::optional<Length>>(n));
  for (VertexId v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : graph.edges()) {
    if (!d[e.u][e.v] || e.length < *d[e.u][e.v]) {
      d[e.u][e.v] = e.length;
      d[e.v][e.u] = e.length;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        const Length via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
      }
    }
  }
  return d;
}

std::vector<Path> enumerate_shortest_paths(const UndirectedGraph& graph,
                                           VertexId s, VertexId t,
                                           std::size_t budget) {
  const auto d = all_pairs_distances(graph);
  const std::vector<bool> no_edges(graph.edge_count(), false);
  const std::vector<bool> no_vertices(graph.vertex_count(), false);
  std::vector<Path> out;
  ShortestPathSearch(graph, d, budget).run(s, t, no_edges, no_vertices,
                                           [&](const Path& p) {
                                             out.push_back(p);
                                             return true;
                                           });
  return out;
}

Verdict brute_force_dspp2(const UndirectedGraph& graph, const Query& query,
                          std::size_t budget) {
  const std::size_t n = graph.vertex_count();
  if (query.s.first >= n || query.s.second >= n || query.t.first >= n ||
      query.t.second >= n) {
    throw InputError("query vertex out of range");
  }
  const auto d = all_pairs_distances(graph);
  Verdict v;
  v.distance1 = d[query.s.first][query.t.first];
  v.distance2 = d[query.s.second][query.t.second];
  if (!v.distance1 || !v.distance2) return v;

  const bool vertex_mode = query.mode == DisjointMode::kVertex;
  const std::vector<bool> no_edges(graph.edge_count(), false);
  const std::vector<bool> no_vertices(n, false);
  std::vector<bool> blocked_edges(graph.edge_count(), false);
  std::vector<bool> blocked_vertices(n, false);
  ShortestPathSearch outer(graph, d, budget);
  ShortestPathSearch inner(graph, d, budget);
  outer.run(query.s.first, query.t.first, no_edges, no_vertices,
            [&](const Path& p1) {
              std::fill(blocked_edges.begin(), blocked_edges.end(), false);
              std::fill(blocked_vertices.begin(), blocked_vertices.end(), false);
              if (vertex_mode) {
                for (VertexId x : p1.vertices) blocked_vertices[x] = true;
              } else {
                for (EdgeId e : p1.edges) blocked_edges[e] = true;
              }
              if (blocked_vertices[query.t.second]) return true;
              inner.run(query.s.second, query.t.second, blocked_edges,
                        blocked_vertices, [&](const Path& p2) {
                          v.witness = std::array<Path, 2>{p1, p2};
                          return false;
                        });
              return !v.witness.has_value();
            });
  v.feasible = v.witness.has_value();
  if (v.feasible) {
    if (auto problem = validate_solution(graph, query, *v.witness)) {
      throw InvariantViolation("oracle witness invalid: " + *problem);
    }
  }
  return v;
}

Relation2 brute_force_mixed_dpp(const MixedGraph& graph, DisjointMode mode,
                                std::size_t budget) {
  if (graph.vertex_count() > 64 || graph.element_count() > 64) {
    throw InputError("brute force limited to 64 vertices and 64 elements");
  }
  const auto paths = all_simple_paths(graph, budget);
  Relation2 rel(Semantics::kForward, true);
  for (const auto& a : paths) {
    for (const auto& b : paths) {
      if (!masks_disjoint(a, b, mode)) continue;
      std::vector<ElementId> ra(a.ids.rbegin(), a.ids.rend());
      std::vector<ElementId> rb(b.ids.rbegin(), b.ids.rend());
      rel.insert({a.start, b.start}, {a.end, b.end},
                 {Trail::from(ra), Trail::from(rb)});
    }
  }
  return rel;
}

bool brute_force_undirected_dpp(const UndirectedGraph& graph, VertexPair from,
                                VertexPair to, DisjointMode mode,
                                std::size_t budget) {
  if (graph.vertex_count() > 64 || graph.edge_count() > 64) {
    throw InputError("brute force limited to 64 vertices and 64 edges");
  }
  const auto paths = all_simple_paths(to_mixed(graph), budget);
  std::vector<const MaskedPath*> first;
  std::vector<const MaskedPath*> second;
  for (const auto& p : paths) {
    if (p.start == from.first && p.end == to.first) first.push_back(&p);
    if (p.start == from.second && p.end == to.second) second.push_back(&p);
  }
  for (const auto* a : first) {
    for (const auto* b : second) {
      if (masks_disjoint(*a, *b, mode)) return true;
    }
  }
  return false;
}

std::optional<std::string> validate_solution(const UndirectedGraph& graph,
                                             const Query& query,
                                             const std::array<Path, 2>& paths) {
  const auto d = all_pairs_distances(graph);
  const VertexPair ends[2] = {{query.s.first, query.t.first},
                              {query.s.second, query.t.second}};
  for (int i = 0; i < 2; ++i) {
    const Path& p = paths[i];
    const std::string name = "path " + std::to_string(i + 1);
    if (p.vertices.size() != p.edges.size() + 1) {
      return name + ": vertex and edge counts disagree";
    }
    if (p.vertices.front() != ends[i].first ||
        p.vertices.back() != ends[i].second) {
      return name + ": wrong endpoints";
    }
    Length total = 0;
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
      if (p.edges[k] >= graph.edge_count()) return name + ": unknown edge";
      const auto& e = graph.edge(p.edges[k]);
      const VertexId a = p.vertices[k];
      const VertexId b = p.vertices[k + 1];
      if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
        return name + ": edge " + std::to_string(p.edges[k]) +
               " does not join consecutive vertices";
      }
      total += e.length;
    }
    const auto& want = d[ends[i].first][ends[i].second];
    if (!want || total != *want) return name + ": not a shortest path";
  }
  if (query.mode == DisjointMode::kEdge) {
    const std::set<EdgeId> used(paths[0].edges.begin(), paths[0].edges.end());
    for (EdgeId e : paths[1].edges) {
      if (used.contains(e)) return "paths share edge " + std::to_string(e);
    }
  } else {
    const std::set<VertexId> used(paths[0].vertices.begin(),
                                  paths[0].vertices.end());
    for (VertexId v : paths[1].vertices) {
      if (used.contains(v)) return "paths share vertex " + std::to_string(v);
    }
  }
  return std::nullopt;
}

}  // namespace dspp::oracle
