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

#include "dspp/metrics.hpp"

#include <functional>
#include <queue>
#include <utility>

namespace dspp {

namespace {

// Binary heap with lazy deletion; equal keys pop in vertex id order.
template <class Relax>
DistanceMap run_dijkstra(std::size_t n, VertexId source, Relax&& relax) {
  std::vector<std::optional<Length>> dist(n);
  std::vector<bool> settled(n, false);
  using Item = std::pair<Length, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (settled[v]) continue;
    settled[v] = true;
    relax(v, [&](VertexId w, Length len) {
      const Length candidate = d + len;
      if (!dist[w] || candidate < *dist[w]) {
        dist[w] = candidate;
        heap.emplace(candidate, w);
      }
    });
  }
  return DistanceMap(std::move(dist));
}

}  // namespace

DistanceMap dijkstra(const UndirectedGraph& graph, VertexId source) {
  return run_dijkstra(graph.vertex_count(), source, [&](VertexId v, auto&& relax) {
    for (const auto& inc : graph.incident(v)) {
      relax(inc.neighbor, graph.edge(inc.edge).length);
    }
  });
}

DistanceMap dijkstra(const MixedGraph& graph, std::span<const Length> lengths,
                     VertexId source) {
  return run_dijkstra(graph.vertex_count(), source, [&](VertexId v, auto&& relax) {
    for (ElementId e : graph.outgoing(v)) {
      relax(graph.element(e).other(v), lengths[e]);
    }
  });
}

std::vector<EdgeId> shortest_path_network(const UndirectedGraph& graph,
                                          const DistanceMap& distances) {
  std::vector<EdgeId> network;
  for (EdgeId id = 0; id < graph.edge_count(); ++id) {
    const auto& e = graph.edge(id);
    if (!distances.reachable(e.u) || !distances.reachable(e.v)) continue;
    const Length diff = distances.at(e.u) - distances.at(e.v);
    if (e.length == (diff < 0 ? -diff : diff)) network.push_back(id);
  }
  return network;
}

}  // namespace dspp
