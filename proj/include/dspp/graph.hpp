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

#ifndef DSPP_GRAPH_HPP_
#define DSPP_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dspp/errors.hpp"

namespace dspp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;     // index into UndirectedGraph::edges()
using ElementId = std::uint32_t;  // index into MixedGraph::elements()
using Length = std::int64_t;

// Edge-disjoint or vertex-disjoint path semantics.
enum class DisjointMode : std::uint8_t { kEdge, kVertex };

const char* to_string(DisjointMode mode);

struct VertexPair {
  VertexId first = 0;
  VertexId second = 0;

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

struct UndirectedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Length length = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;
};

// Simple undirected graph with non-negative integer lengths. Immutable.
class UndirectedGraph {
 public:
  struct Incidence {
    VertexId neighbor;
    EdgeId edge;
  };

  UndirectedGraph() = default;
  // Throws InputError on self-loops, parallel edges, out-of-range endpoints,
  // negative lengths, or a total length that could overflow after scaling.
  UndirectedGraph(std::size_t vertex_count, std::vector<UndirectedEdge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<UndirectedEdge>& edges() const { return edges_; }
  const UndirectedEdge& edge(EdgeId e) const { return edges_[e]; }
  // Sorted by neighbor id.
  std::span<const Incidence> incident(VertexId v) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<UndirectedEdge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
};

enum class ElementKind : std::uint8_t { kArc, kEdge };

// An arc (tail -> head) or an undirected edge {tail, head}.
struct Element {
  VertexId tail = 0;
  VertexId head = 0;
  ElementKind kind = ElementKind::kArc;

  bool is_arc() const { return kind == ElementKind::kArc; }
  bool is_edge() const { return kind == ElementKind::kEdge; }
  VertexId other(VertexId x) const { return x == tail ? head : tail; }
};

// Mixed graph G = (V, A + E). Arcs and edges share one id space so a path is
// a plain sequence of element ids. Immutable.
class MixedGraph {
 public:
  MixedGraph() = default;
  // Throws InputError on self-loops or out-of-range endpoints.
  MixedGraph(std::size_t vertex_count, std::vector<Element> elements);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t element_count() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(ElementId e) const { return elements_[e]; }

  // Elements usable when leaving v: arcs with tail v and edges incident to v.
  std::span<const ElementId> outgoing(VertexId v) const;
  // Elements usable when entering v: arcs with head v and edges incident to v.
  std::span<const ElementId> incoming(VertexId v) const;

  std::vector<ElementId> arcs() const;
  std::vector<ElementId> edges() const;

  // Subgraph induced by `vertices`; local vertex i is vertices[i]. Fills the
  // local->parent element map.
  MixedGraph induced(std::span<const VertexId> vertices,
                     std::vector<ElementId>* element_map) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Element> elements_;
  std::vector<std::size_t> out_offsets_;
  std::vector<ElementId> out_;
  std::vector<std::size_t> in_offsets_;
  std::vector<ElementId> in_;
};

// The same graph as a mixed graph of edges; element id i is edge id i.
MixedGraph to_mixed(const UndirectedGraph& graph);

// Partition of a vertex set into cells. Cells are numbered by their smallest
// vertex and list their vertices in increasing order.
struct Partition {
  std::vector<std::uint32_t> cell_of;
  std::vector<std::vector<VertexId>> cells;

  std::size_t size() const { return cells.size(); }
};

Partition connected_components(const UndirectedGraph& graph);
Partition connected_components(const UndirectedGraph& graph,
                               std::span<const EdgeId> edge_subset);

// Components of the undirected shadow of the given elements.
Partition weakly_connected_components(const MixedGraph& graph);
Partition weakly_connected_components(const MixedGraph& graph,
                                      std::span<const ElementId> subset);

// True iff contracting every edge component leaves a loop-free DAG.
bool is_weakly_acyclic(const MixedGraph& graph);

// Topological order of the cells of `partition` under the arcs of `graph`,
// ties broken by smallest contained vertex. Throws NotAcyclicError if an arc
// lies inside a cell or the contraction has a directed cycle.
std::vector<std::uint32_t> contract_and_topo_order(const MixedGraph& graph,
                                                   const Partition& partition);

}  // namespace dspp

#endif  // DSPP_GRAPH_HPP_
