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

#include "dspp/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace dspp {

const char* to_string(ArcClass c) {
  switch (c) {
    case ArcClass::kZero:
      return "zero";
    case ArcClass::kShared:
      return "shared";
    case ArcClass::kFirstOnly:
      return "first-only";
    case ArcClass::kSecondOnly:
      return "second-only";
  }
  return "?";
}

std::size_t Expansion::count(ArcClass c) const {
  return static_cast<std::size_t>(std::count(classes.begin(), classes.end(), c));
}

std::vector<ElementId> Expansion::elements_of(ArcClass c) const {
  std::vector<ElementId> out;
  for (ElementId e = 0; e < classes.size(); ++e) {
    if (classes[e] == c) out.push_back(e);
  }
  return out;
}

namespace {

struct Builder {
  std::vector<Element> elements;
  std::vector<ArcClass> classes;
  std::vector<EdgeId> origin;
  std::vector<Length> lengths;
  std::vector<ElementId> gadget_of;

  ElementId add(VertexId tail, VertexId head, ElementKind kind, ArcClass c,
                EdgeId edge, Length length, ElementId gadget = kNoGadget) {
    elements.push_back({tail, head, kind});
    classes.push_back(c);
    origin.push_back(edge);
    lengths.push_back(length);
    gadget_of.push_back(gadget);
    return static_cast<ElementId>(elements.size() - 1);
  }
};

std::optional<Length> scaled(const std::optional<Length>& d) {
  if (!d) return std::nullopt;
  return *d * Expansion::kScale;
}

// Orientation of edge e in the shortest path network of d, if it belongs.
std::optional<std::pair<VertexId, VertexId>> orientation(
    const UndirectedEdge& e, const DistanceMap& d) {
  if (!d.reachable(e.u) || !d.reachable(e.v)) return std::nullopt;
  const Length du = d.at(e.u);
  const Length dv = d.at(e.v);
  if (e.length != (du > dv ? du - dv : dv - du)) return std::nullopt;
  return du < dv ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

}  // namespace

Expansion build_expansion(const UndirectedGraph& graph, VertexPair sources,
                          DisjointMode mode) {
  const std::size_t n = graph.vertex_count();
  if (sources.first >= n || sources.second >= n) {
    throw InputError("source vertex out of range");
  }
  const DistanceMap d1 = dijkstra(graph, sources.first);
  const DistanceMap d2 = dijkstra(graph, sources.second);
  std::vector<std::optional<Length>> x1(n);
  std::vector<std::optional<Length>> x2(n);
  for (VertexId v = 0; v < n; ++v) {
    x1[v] = scaled(d1[v]);
    x2[v] = scaled(d2[v]);
  }

  Builder b;
  std::vector<Gadget> gadgets;
  VertexId next_vertex = static_cast<VertexId>(n);
  for (EdgeId id = 0; id < graph.edge_count(); ++id) {
    const auto& e = graph.edge(id);
    const Length len = e.length;
    if (len == 0) {
      b.add(e.u, e.v, ElementKind::kEdge, ArcClass::kZero, id, 0);
      continue;
    }
    const auto o1 = orientation(e, d1);
    const auto o2 = orientation(e, d2);
    const Length arc_len = len * Expansion::kScale;
    if (o1 && o2 && *o1 == *o2) {
      b.add(o1->first, o1->second, ElementKind::kArc, ArcClass::kShared, id,
            arc_len);
    } else if (o1 && o2 && mode == DisjointMode::kVertex) {
      b.add(o1->first, o1->second, ElementKind::kArc, ArcClass::kFirstOnly, id,
            arc_len);
      b.add(o2->first, o2->second, ElementKind::kArc, ArcClass::kSecondOnly,
            id, arc_len);
    } else if (o1 && o2) {
      Gadget g;
      g.edge = id;
      g.tail = o1->first;
      g.head = o1->second;
      g.minus = next_vertex++;
      g.plus = next_vertex++;
      const auto gid = static_cast<ElementId>(gadgets.size());
      const auto add = [&](VertexId t, VertexId h, ArcClass c) {
        return b.add(t, h, ElementKind::kArc, c, id, len, gid);
      };
      g.arcs = {add(g.tail, g.minus, ArcClass::kFirstOnly),
                add(g.plus, g.head, ArcClass::kFirstOnly),
                add(g.head, g.minus, ArcClass::kSecondOnly),
                add(g.plus, g.tail, ArcClass::kSecondOnly),
                add(g.minus, g.plus, ArcClass::kShared)};
      x1.push_back(*x1[g.tail] + len);
      x1.push_back(*x1[g.tail] + 2 * len);
      x2.push_back(*x2[g.head] + len);
      x2.push_back(*x2[g.head] + 2 * len);
      gadgets.push_back(g);
    } else if (o1) {
      b.add(o1->first, o1->second, ElementKind::kArc, ArcClass::kFirstOnly, id,
            arc_len);
    } else if (o2) {
      b.add(o2->first, o2->second, ElementKind::kArc, ArcClass::kSecondOnly,
            id, arc_len);
    }
  }

  Expansion x;
  x.graph = MixedGraph(next_vertex, std::move(b.elements));
  x.original_vertex_count = n;
  x.sources = sources;
  x.mode = mode;
  x.classes = std::move(b.classes);
  x.origin = std::move(b.origin);
  x.lengths = std::move(b.lengths);
  x.gadget_of = std::move(b.gadget_of);
  x.gadgets = std::move(gadgets);
  x.d1 = DistanceMap(std::move(x1));
  x.d2 = DistanceMap(std::move(x2));
  return x;
}

std::vector<std::string> distance_violations(const Expansion& expansion) {
  std::vector<std::string> out;
  const auto check = [&](bool first, VertexId source, const DistanceMap& want) {
    std::vector<Element> kept;
    std::vector<Length> lengths;
    for (ElementId e = 0; e < expansion.graph.element_count(); ++e) {
      if (first ? expansion.usable_by_first(e) : expansion.usable_by_second(e)) {
        kept.push_back(expansion.graph.element(e));
        lengths.push_back(expansion.lengths[e]);
      }
    }
    const MixedGraph sub(expansion.graph.vertex_count(), std::move(kept));
    const DistanceMap got = dijkstra(sub, lengths, source);
    for (VertexId v = 0; v < got.size(); ++v) {
      if (got[v] != want[v]) {
        out.push_back(std::string(first ? "d1" : "d2") + " mismatch at vertex " +
                      std::to_string(v));
      }
    }
  };
  check(true, expansion.sources.first, expansion.d1);
  check(false, expansion.sources.second, expansion.d2);
  return out;
}

namespace {

// (rank, value): reached by s1 only < both (by d1 - d2) < s2 only < neither.
std::pair<int, Length> sort_key(const Expansion& x, VertexId v) {
  const bool r1 = x.d1.reachable(v);
  const bool r2 = x.d2.reachable(v);
  if (r1 && r2) return {1, x.d1.at(v) - x.d2.at(v)};
  if (r1) return {0, x.d1.at(v)};
  if (r2) return {2, -x.d2.at(v)};
  return {3, 0};
}

}  // namespace

OrderedComponents ordered_components(const Expansion& expansion, bool check) {
  std::vector<ElementId> inner;
  for (ElementId e = 0; e < expansion.classes.size(); ++e) {
    const auto c = expansion.classes[e];
    if (c == ArcClass::kZero || c == ArcClass::kShared) inner.push_back(e);
  }
  Partition cells = weakly_connected_components(expansion.graph, inner);

  std::vector<std::uint32_t> order(cells.size());
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return std::tuple(sort_key(expansion, cells.cells[a].front()),
                      cells.cells[a].front()) <
           std::tuple(sort_key(expansion, cells.cells[b].front()),
                      cells.cells[b].front());
  });

  OrderedComponents out;
  out.position.assign(expansion.graph.vertex_count(), 0);
  for (std::uint32_t c : order) {
    const auto index = static_cast<std::uint32_t>(out.components.size());
    for (VertexId v : cells.cells[c]) out.position[v] = index;
    const auto [rank, value] = sort_key(expansion, cells.cells[c].front());
    out.difference.push_back(rank == 1 ? std::optional(value / Expansion::kScale)
                                       : std::nullopt);
    out.components.push_back(std::move(cells.cells[c]));
  }
  if (check) {
    const auto problems = structure_violations(expansion, out);
    if (!problems.empty()) {
      throw InvariantViolation("component order: " + problems.front());
    }
  }
  return out;
}

std::vector<std::string> structure_violations(const Expansion& expansion,
                                              const OrderedComponents& order) {
  std::vector<std::string> out;
  const auto& g = expansion.graph;
  const auto& pos = order.position;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const auto& cell = order.components[j];
    const auto key = sort_key(expansion, cell.front());
    for (VertexId v : cell) {
      if (pos[v] != j) out.push_back("position table disagrees at " + std::to_string(v));
      if (sort_key(expansion, v) != key) {
        out.push_back("d1 - d2 not constant on component " + std::to_string(j));
        break;
      }
    }
    if (j > 0 && sort_key(expansion, order.components[j - 1].front()) > key) {
      out.push_back("components out of order at " + std::to_string(j));
    }
    std::vector<ElementId> map;
    if (!is_weakly_acyclic(g.induced(cell, &map))) {
      out.push_back("component " + std::to_string(j) + " not weakly acyclic");
    }
  }
  for (ElementId e = 0; e < g.element_count(); ++e) {
    const auto& el = g.element(e);
    const auto c = expansion.classes[e];
    const auto pt = pos[el.tail];
    const auto ph = pos[el.head];
    const bool inner = c == ArcClass::kZero || c == ArcClass::kShared;
    const std::string name = "element " + std::to_string(e) + " (" + to_string(c) + ")";
    if (inner && pt != ph) out.push_back(name + " crosses components");
    if (!inner && pt == ph) out.push_back(name + " inside a component");
    if (c == ArcClass::kFirstOnly && pt > ph) out.push_back(name + " runs backward");
    if (c == ArcClass::kSecondOnly && pt < ph) out.push_back(name + " runs forward");
  }
  return out;
}

}  // namespace dspp
