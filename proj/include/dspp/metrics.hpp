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

#ifndef DSPP_METRICS_HPP_
#define DSPP_METRICS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "dspp/graph.hpp"

namespace dspp {

// Exact distances from one source. Unreachable vertices hold no value.
class DistanceMap {
 public:
  DistanceMap() = default;
  explicit DistanceMap(std::vector<std::optional<Length>> values)
      : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  bool reachable(VertexId v) const { return values_[v].has_value(); }
  // Precondition: reachable(v).
  Length at(VertexId v) const { return *values_[v]; }
  const std::optional<Length>& operator[](VertexId v) const {
    return values_[v];
  }
  const std::vector<std::optional<Length>>& values() const { return values_; }

  friend bool operator==(const DistanceMap&, const DistanceMap&) = default;

 private:
  std::vector<std::optional<Length>> values_;
};

DistanceMap dijkstra(const UndirectedGraph& graph, VertexId source);

// Shortest distances on a mixed graph where arcs are used forward only and
// edges in both directions. `lengths` is indexed by element id.
DistanceMap dijkstra(const MixedGraph& graph, std::span<const Length> lengths,
                     VertexId source);

// E_i: edges {v, w} with both endpoints reachable and
// length == |d(v) - d(w)|. Returned in increasing edge id order.
std::vector<EdgeId> shortest_path_network(const UndirectedGraph& graph,
                                          const DistanceMap& distances);

}  // namespace dspp

#endif  // DSPP_METRICS_HPP_
