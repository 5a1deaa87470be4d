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

#ifndef DSPP_EXPANSION_HPP_
#define DSPP_EXPANSION_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dspp/graph.hpp"
#include "dspp/metrics.hpp"

namespace dspp {

// Class of an element of the expansion: a zero-length edge (E0), an arc
// usable by both paths (A1 & A2), or an arc usable by one path only.
enum class ArcClass : std::uint8_t { kZero, kShared, kFirstOnly, kSecondOnly };

const char* to_string(ArcClass c);

// Replacement for an edge {tail, head} whose first-path orientation is
// tail -> head and whose second-path orientation is head -> tail.
struct Gadget {
  EdgeId edge = 0;
  VertexId tail = 0;
  VertexId head = 0;
  VertexId minus = 0;
  VertexId plus = 0;
  // tail->minus, plus->head, head->minus, plus->tail, minus->plus.
  std::array<ElementId, 5> arcs{};
};

inline constexpr ElementId kNoGadget = static_cast<ElementId>(-1);

// Partially oriented expansion of an undirected instance for sources
// (s1, s2). All lengths and distances are multiplied by kScale.
struct Expansion {
  static constexpr Length kScale = 3;

  MixedGraph graph;
  std::size_t original_vertex_count = 0;
  VertexPair sources;
  DisjointMode mode = DisjointMode::kEdge;
  // Per element of `graph`.
  std::vector<ArcClass> classes;
  std::vector<EdgeId> origin;
  std::vector<Length> lengths;
  std::vector<ElementId> gadget_of;  // kNoGadget outside gadgets
  std::vector<Gadget> gadgets;
  DistanceMap d1;
  DistanceMap d2;

  bool usable_by_first(ElementId e) const {
    return classes[e] != ArcClass::kSecondOnly;
  }
  bool usable_by_second(ElementId e) const {
    return classes[e] != ArcClass::kFirstOnly;
  }
  std::size_t count(ArcClass c) const;
  std::vector<ElementId> elements_of(ArcClass c) const;
  bool is_original(VertexId v) const { return v < original_vertex_count; }
};

// Edge mode replaces each conflicting edge by a gadget; vertex mode by two
// opposite arcs. Throws InputError if a source is out of range.
Expansion build_expansion(const UndirectedGraph& graph, VertexPair sources,
                          DisjointMode mode = DisjointMode::kEdge);

// Recomputes d1 and d2 by Dijkstra over E0 plus the arcs each path may use
// and reports every vertex where the result differs from the stored maps.
std::vector<std::string> distance_violations(const Expansion& expansion);

// Components of (W, E0 + shared arcs) in processing order.
struct OrderedComponents {
  std::vector<std::vector<VertexId>> components;  // vertices ascending
  std::vector<std::uint32_t> position;            // vertex -> component
  // Component-constant d1 - d2 in input units; empty when a source does
  // not reach the component.
  std::vector<std::optional<Length>> difference;

  std::size_t size() const { return components.size(); }
};

// Sorted by d1 - d2, ties by smallest vertex. Components a source cannot
// reach are placed so both arc orders still hold: reached by s1 only
// first, reached by neither last. With `check`, throws InvariantViolation
// when structure_violations reports anything.
OrderedComponents ordered_components(const Expansion& expansion,
                                     bool check = true);

// Order and purity checks on a component sequence: each component weakly
// acyclic and built from E0 and shared arcs only; first-path arcs run
// forward and second-path arcs backward between components.
std::vector<std::string> structure_violations(const Expansion& expansion,
                                              const OrderedComponents& order);

}  // namespace dspp

#endif  // DSPP_EXPANSION_HPP_
