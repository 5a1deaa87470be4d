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

#include "dspp/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace dspp {

const char* to_string(DisjointMode mode) {
  return mode == DisjointMode::kEdge ? "edge" : "vertex";
}

namespace {

// Sum bound that keeps every path length representable after the x3
// scaling used by the expansion.
constexpr Length kMaxTotalLength = std::numeric_limits<Length>::max() / 4;

template <class Neighbors>
Partition label_components(std::size_t n, Neighbors&& for_each_neighbor) {
  Partition p;
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  p.cell_of.assign(n, kUnset);
  std::vector<VertexId> queue;
  for (VertexId start = 0; start < n; ++start) {
    if (p.cell_of[start] != kUnset) continue;
    const auto cell = static_cast<std::uint32_t>(p.cells.size());
    p.cell_of[start] = cell;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for_each_neighbor(queue[head], [&](VertexId w) {
        if (p.cell_of[w] == kUnset) {
          p.cell_of[w] = cell;
          queue.push_back(w);
        }
      });
    }
    std::sort(queue.begin(), queue.end());
    p.cells.push_back(queue);
  }
  return p;
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::size_t vertex_count,
                                 std::vector<UndirectedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  Length total = 0;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InputError(where + "endpoint out of range");
    }
    if (e.u == e.v) throw InputError(where + "self-loop");
    if (e.length < 0) throw InputError(where + "negative length");
    if (e.length > kMaxTotalLength - total) {
      throw InputError(where + "total length too large");
    }
    total += e.length;
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InputError(where + "duplicate edge");
    }
  }

  std::vector<std::size_t> degree(vertex_count_ + 1, 0);
  for (const auto& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  adjacency_.resize(offsets_[vertex_count_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Incidence& a, const Incidence& b) {
                return a.neighbor < b.neighbor;
              });
  }
}

std::span<const UndirectedGraph::Incidence> UndirectedGraph::incident(
    VertexId v) const {
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

MixedGraph::MixedGraph(std::size_t vertex_count, std::vector<Element> elements)
    : vertex_count_(vertex_count), elements_(std::move(elements)) {
  std::vector<std::size_t> out_degree(vertex_count_, 0);
  std::vector<std::size_t> in_degree(vertex_count_, 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& el = elements_[i];
    if (el.tail >= vertex_count_ || el.head >= vertex_count_) {
      throw InputError("element " + std::to_string(i) +
                       ": endpoint out of range");
    }
    if (el.tail == el.head) {
      throw InputError("element " + std::to_string(i) + ": self-loop");
    }
    ++out_degree[el.tail];
    ++in_degree[el.head];
    if (el.is_edge()) {
      ++out_degree[el.head];
      ++in_degree[el.tail];
    }
  }
  auto build = [&](const std::vector<std::size_t>& degree,
                   std::vector<std::size_t>& offsets,
                   std::vector<ElementId>& list, bool outgoing) {
    offsets.assign(vertex_count_ + 1, 0);
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      offsets[v + 1] = offsets[v] + degree[v];
    }
    list.resize(offsets[vertex_count_]);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (ElementId id = 0; id < elements_.size(); ++id) {
      const auto& el = elements_[id];
      if (el.is_edge()) {
        list[fill[el.tail]++] = id;
        list[fill[el.head]++] = id;
      } else {
        list[fill[outgoing ? el.tail : el.head]++] = id;
      }
    }
  };
  build(out_degree, out_offsets_, out_, true);
  build(in_degree, in_offsets_, in_, false);
}

std::span<const ElementId> MixedGraph::outgoing(VertexId v) const {
  return {out_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const ElementId> MixedGraph::incoming(VertexId v) const {
  return {in_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::vector<ElementId> MixedGraph::arcs() const {
  std::vector<ElementId> out;
  for (ElementId id = 0; id < elements_.size(); ++id) {
    if (elements_[id].is_arc()) out.push_back(id);
  }
  return out;
}

std::vector<ElementId> MixedGraph::edges() const {
  std::vector<ElementId> out;
  for (ElementId id = 0; id < elements_.size(); ++id) {
    if (elements_[id].is_edge()) out.push_back(id);
  }
  return out;
}

MixedGraph MixedGraph::induced(std::span<const VertexId> vertices,
                               std::vector<ElementId>* element_map) const {
  constexpr auto kAbsent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> local(vertex_count_, kAbsent);
  for (VertexId i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  std::vector<Element> kept;
  if (element_map != nullptr) element_map->clear();
  for (ElementId id = 0; id < elements_.size(); ++id) {
    const auto& el = elements_[id];
    if (local[el.tail] == kAbsent || local[el.head] == kAbsent) continue;
    kept.push_back({local[el.tail], local[el.head], el.kind});
    if (element_map != nullptr) element_map->push_back(id);
  }
  return MixedGraph(vertices.size(), std::move(kept));
}

MixedGraph to_mixed(const UndirectedGraph& graph) {
  std::vector<Element> elements;
  elements.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) {
    elements.push_back({e.u, e.v, ElementKind::kEdge});
  }
  return MixedGraph(graph.vertex_count(), std::move(elements));
}

Partition connected_components(const UndirectedGraph& graph) {
  return label_components(graph.vertex_count(), [&](VertexId v, auto&& visit) {
    for (const auto& inc : graph.incident(v)) visit(inc.neighbor);
  });
}

Partition connected_components(const UndirectedGraph& graph,
                               std::span<const EdgeId> edge_subset) {
  std::vector<std::vector<VertexId>> adj(graph.vertex_count());
  for (EdgeId e : edge_subset) {
    const auto& edge = graph.edge(e);
    adj[edge.u].push_back(edge.v);
    adj[edge.v].push_back(edge.u);
  }
  return label_components(graph.vertex_count(), [&](VertexId v, auto&& visit) {
    for (VertexId w : adj[v]) visit(w);
  });
}

Partition weakly_connected_components(const MixedGraph& graph) {
  std::vector<ElementId> all(graph.element_count());
  for (ElementId i = 0; i < all.size(); ++i) all[i] = i;
  return weakly_connected_components(graph, all);
}

Partition weakly_connected_components(const MixedGraph& graph,
                                      std::span<const ElementId> subset) {
  std::vector<std::vector<VertexId>> adj(graph.vertex_count());
  for (ElementId e : subset) {
    const auto& el = graph.element(e);
    adj[el.tail].push_back(el.head);
    adj[el.head].push_back(el.tail);
  }
  return label_components(graph.vertex_count(), [&](VertexId v, auto&& visit) {
    for (VertexId w : adj[v]) visit(w);
  });
}

bool is_weakly_acyclic(const MixedGraph& graph) {
  const auto cells = weakly_connected_components(graph, graph.edges());
  try {
    contract_and_topo_order(graph, cells);
  } catch (const NotAcyclicError&) {
    return false;
  }
  return true;
}

std::vector<std::uint32_t> contract_and_topo_order(const MixedGraph& graph,
                                                   const Partition& partition) {
  const std::size_t h = partition.size();
  std::vector<std::vector<std::uint32_t>> succ(h);
  std::vector<std::size_t> indegree(h, 0);
  for (const auto& el : graph.elements()) {
    const auto a = partition.cell_of[el.tail];
    const auto b = partition.cell_of[el.head];
    if (a == b) {
      if (el.is_arc()) {
        throw NotAcyclicError("not acyclic: arc inside a cell", {a});
      }
      continue;
    }
    if (el.is_edge()) {
      throw NotAcyclicError("not acyclic: edge between cells", {a, b});
    }
    succ[a].push_back(b);
    ++indegree[b];
  }

  // Cell index order equals smallest-vertex order.
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>,
                      std::greater<>>
      ready;
  for (std::uint32_t c = 0; c < h; ++c) {
    if (indegree[c] == 0) ready.push(c);
  }
  std::vector<std::uint32_t> order;
  order.reserve(h);
  while (!ready.empty()) {
    const auto c = ready.top();
    ready.pop();
    order.push_back(c);
    for (auto d : succ[c]) {
      if (--indegree[d] == 0) ready.push(d);
    }
  }
  if (order.size() == h) return order;

  // Every remaining cell has a remaining predecessor; walk backwards until a
  // cell repeats.
  std::vector<std::vector<std::uint32_t>> pred(h);
  for (std::uint32_t c = 0; c < h; ++c) {
    for (auto d : succ[c]) {
      if (indegree[d] > 0 && indegree[c] > 0) pred[d].push_back(c);
    }
  }
  std::uint32_t cur = 0;
  while (indegree[cur] == 0) ++cur;
  std::vector<std::int64_t> seen_at(h, -1);
  std::vector<std::uint32_t> walk;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<std::int64_t>(walk.size());
    walk.push_back(cur);
    cur = pred[cur].front();
  }
  std::vector<std::uint32_t> cycle(walk.begin() + seen_at[cur], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  throw NotAcyclicError("not acyclic: directed cycle between cells",
                        std::move(cycle));
}

}  // namespace dspp
