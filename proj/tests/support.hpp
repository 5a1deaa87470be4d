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

#ifndef DSPP_TESTS_SUPPORT_HPP_
#define DSPP_TESTS_SUPPORT_HPP_

#include <vector>

#include "dspp/graph.hpp"
#include "dspp/solver.hpp"

namespace dspp::testing {

// The eight-vertex example with three conflicting edges.
struct Example {
  enum : VertexId { s1, s2, t1, t2, v1, v2, v3, v4 };

  static UndirectedGraph graph() {
    return UndirectedGraph(8, {
                                  {s2, v2, 1}, {s2, v1, 1}, {s2, s1, 1},
                                  {v2, v3, 1}, {v2, t1, 1}, {v1, t1, 1},
                                  {v3, s1, 1}, {v3, t2, 1}, {s1, v4, 1},
                                  {v4, t2, 1}, {t2, t1, 1}, {v2, v1, 0},
                                  {v3, v4, 0}, {s1, v2, 3}, {t1, v3, 3},
                              });
  }

  static Query query(DisjointMode mode = DisjointMode::kEdge) {
    return Query{{s1, s2}, {t1, t2}, mode};
  }
};

inline UndirectedGraph path_graph(std::size_t n, Length length = 1) {
  std::vector<UndirectedEdge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, length});
  return UndirectedGraph(n, std::move(edges));
}

inline UndirectedGraph cycle_graph(std::size_t n, Length length = 1) {
  std::vector<UndirectedEdge> edges;
  for (VertexId v = 0; v < n; ++v) {
    edges.push_back({v, static_cast<VertexId>((v + 1) % n), length});
  }
  return UndirectedGraph(n, std::move(edges));
}

}  // namespace dspp::testing

#endif  // DSPP_TESTS_SUPPORT_HPP_
