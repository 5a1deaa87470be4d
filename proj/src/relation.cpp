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

#include "dspp/relation.hpp"

#include <algorithm>
#include <utility>

#include "staged.hpp"

namespace dspp {

Trail::~Trail() {
  // Unlink uniquely owned nodes iteratively; long chains would otherwise
  // recurse once per node on destruction.
  auto node = std::move(head_);
  while (node && node.use_count() == 1) {
    auto next = std::move(node->next);
    node = std::move(next);
  }
}

Trail Trail::push_front(ElementId id) const {
  Trail t;
  t.head_ = std::make_shared<const Node>(Node{id, head_});
  t.size_ = size_ + 1;
  return t;
}

Trail Trail::join(const Trail& front, const Trail& back) {
  if (front.empty()) return back;
  const auto ids = front.to_vector();
  Trail t = back;
  for (auto it = ids.rbegin(); it != ids.rend(); ++it) t = t.push_front(*it);
  return t;
}

Trail Trail::from(std::span<const ElementId> ids) {
  Trail t;
  for (auto it = ids.rbegin(); it != ids.rend(); ++it) t = t.push_front(*it);
  return t;
}

Trail Trail::reversed() const {
  Trail t;
  for (const Node* n = head_.get(); n != nullptr; n = n->next.get()) {
    t = t.push_front(n->id);
  }
  return t;
}

Trail Trail::mapped(std::span<const ElementId> element_map) const {
  auto ids = to_vector();
  for (auto& id : ids) id = element_map[id];
  return from(ids);
}

std::vector<ElementId> Trail::to_vector() const {
  std::vector<ElementId> ids;
  ids.reserve(size_);
  for (const Node* n = head_.get(); n != nullptr; n = n->next.get()) {
    ids.push_back(n->id);
  }
  return ids;
}

Witness concatenate(const Witness& before, const Witness& then) {
  return {Trail::join(then.first, before.first),
          Trail::join(then.second, before.second)};
}

std::vector<ElementId> path_elements(const Witness& witness,
                                     Semantics semantics, int index) {
  const Trail& trail = index == 0 ? witness.first : witness.second;
  auto ids = trail.to_vector();
  if (!(semantics == Semantics::kOpposed && index == 1)) {
    std::reverse(ids.begin(), ids.end());
  }
  return ids;
}

bool Relation2::contains(VertexPair left, VertexPair right) const {
  const auto it = rows_.find(left);
  return it != rows_.end() && it->second.contains(right);
}

const Witness* Relation2::witness(VertexPair left, VertexPair right) const {
  if (!with_witnesses_) return nullptr;
  const auto it = rows_.find(left);
  if (it == rows_.end()) return nullptr;
  const auto jt = it->second.find(right);
  return jt == it->second.end() ? nullptr : &jt->second;
}

const Relation2::Row* Relation2::row(VertexPair left) const {
  const auto it = rows_.find(left);
  return it == rows_.end() ? nullptr : &it->second;
}

bool Relation2::insert(VertexPair left, VertexPair right, Witness witness) {
  auto& r = rows_[left];
  const bool added =
      r.try_emplace(right, with_witnesses_ ? std::move(witness) : Witness{})
          .second;
  if (added) ++size_;
  return added;
}

std::vector<RelationEntry> Relation2::entries() const {
  std::vector<RelationEntry> out;
  out.reserve(size_);
  for_each([&](VertexPair l, VertexPair r, const Witness&) {
    out.push_back({l, r});
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPair> Relation2::lefts() const {
  std::vector<VertexPair> out;
  for (const auto& [left, row] : rows_) {
    if (!row.empty()) out.push_back(left);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPair> Relation2::image(VertexPair left) const {
  std::vector<VertexPair> out;
  if (const Row* r = row(left)) {
    for (const auto& [right, w] : *r) out.push_back(right);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Relation2::same_entries(const Relation2& other) const {
  if (semantics_ != other.semantics_ || size_ != other.size_) return false;
  bool same = true;
  for_each([&](VertexPair l, VertexPair r, const Witness&) {
    if (same && !other.contains(l, r)) same = false;
  });
  return same;
}

Relation2 identity_relation(std::size_t vertex_count, Semantics semantics,
                            DisjointMode mode, bool with_witnesses) {
  Relation2 rel(semantics, with_witnesses);
  for (VertexId a = 0; a < vertex_count; ++a) {
    for (VertexId b = 0; b < vertex_count; ++b) {
      if (mode == DisjointMode::kVertex && a == b) continue;
      rel.insert({a, b}, {a, b});
    }
  }
  return rel;
}

Relation2 compose(const Relation2& r, const Relation2& s) {
  if (r.semantics() != s.semantics()) {
    throw std::invalid_argument("compose: semantics differ");
  }
  const bool witnesses = r.has_witnesses() && s.has_witnesses();
  Relation2 out(r.semantics(), witnesses);
  // Sorted traversal makes the smallest middle insert first.
  for (const auto& e : r.entries()) {
    const auto* next = s.row(e.right);
    if (next == nullptr) continue;
    for (const auto& [w, tail] : *next) {
      if (out.contains(e.left, w)) continue;
      out.insert(e.left, w,
                 witnesses ? concatenate(*r.witness(e.left, e.right), tail)
                           : Witness{});
    }
  }
  return out;
}

Relation2 delta_relation_forward(const MixedGraph& graph,
                                 std::span<const ElementId> arcs,
                                 DisjointMode mode, bool with_witnesses) {
  const detail::ArcIndex by_tail(graph, arcs, detail::ArcIndex::Key::kTail);
  Relation2 rel(Semantics::kForward, with_witnesses);
  std::vector<detail::Move> moves;
  const auto n = static_cast<VertexId>(graph.vertex_count());
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (mode == DisjointMode::kVertex && a == b) continue;
      moves.clear();
      detail::forward_arc_moves(graph, by_tail, {a, b}, mode, with_witnesses,
                                moves);
      for (auto& m : moves) rel.insert({a, b}, m.to, std::move(m.segment));
    }
  }
  return rel;
}

Relation2 delta_relation_opposed(const MixedGraph& graph,
                                 std::span<const ElementId> arcs_in,
                                 std::span<const ElementId> arcs_out,
                                 DisjointMode mode, bool with_witnesses) {
  for (ElementId a : arcs_in) {
    if (std::find(arcs_out.begin(), arcs_out.end(), a) != arcs_out.end()) {
      throw InvariantViolation("delta_relation_opposed: arc sets overlap");
    }
  }
  const detail::ArcIndex in_by_tail(graph, arcs_in,
                                    detail::ArcIndex::Key::kTail);
  const detail::ArcIndex out_by_head(graph, arcs_out,
                                     detail::ArcIndex::Key::kHead);
  Relation2 rel(Semantics::kOpposed, with_witnesses);
  std::vector<detail::Move> moves;
  const auto n = static_cast<VertexId>(graph.vertex_count());
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (mode == DisjointMode::kVertex && a == b) continue;
      moves.clear();
      detail::opposed_arc_moves(graph, in_by_tail, out_by_head, {a, b}, mode,
                                with_witnesses, moves);
      for (auto& m : moves) rel.insert({a, b}, m.to, std::move(m.segment));
    }
  }
  return rel;
}

Relation2 reindex_to_opposed(const Relation2& forward) {
  if (forward.semantics() != Semantics::kForward) {
    throw std::invalid_argument("reindex_to_opposed: expects forward semantics");
  }
  Relation2 out(Semantics::kOpposed, forward.has_witnesses());
  forward.for_each([&](VertexPair l, VertexPair r, const Witness& w) {
    // Forward (v1, w2) -> (w1, v2) becomes opposed (v1, v2) -> (w1, w2).
    out.insert({l.first, r.second}, {r.first, l.second},
               forward.has_witnesses()
                   ? Witness{w.first, w.second.reversed()}
                   : Witness{});
  });
  return out;
}

Relation2 remap(const Relation2& relation, std::span<const VertexId> vertex_map,
                std::span<const ElementId> element_map) {
  Relation2 out(relation.semantics(), relation.has_witnesses());
  relation.for_each([&](VertexPair l, VertexPair r, const Witness& w) {
    out.insert({vertex_map[l.first], vertex_map[l.second]},
               {vertex_map[r.first], vertex_map[r.second]},
               relation.has_witnesses()
                   ? Witness{w.first.mapped(element_map),
                             w.second.mapped(element_map)}
                   : Witness{});
  });
  return out;
}

namespace {

struct WalkResult {
  std::vector<VertexId> vertices;
  std::optional<std::string> error;
};

WalkResult walk(const MixedGraph& graph, VertexId start, VertexId target,
                const std::vector<ElementId>& ids,
                const std::vector<bool>& ground) {
  WalkResult res;
  res.vertices.push_back(start);
  VertexId cur = start;
  for (ElementId id : ids) {
    if (id >= graph.element_count()) {
      res.error = "unknown element " + std::to_string(id);
      return res;
    }
    if (!ground.empty() && !ground[id]) {
      res.error = "element " + std::to_string(id) + " outside ground set";
      return res;
    }
    const auto& el = graph.element(id);
    if (el.is_arc()) {
      if (el.tail != cur) {
        res.error = "arc " + std::to_string(id) + " not leaving " +
                    std::to_string(cur);
        return res;
      }
      cur = el.head;
    } else {
      if (el.tail != cur && el.head != cur) {
        res.error = "edge " + std::to_string(id) + " not incident to " +
                    std::to_string(cur);
        return res;
      }
      cur = el.other(cur);
    }
    res.vertices.push_back(cur);
  }
  if (cur != target) {
    res.error = "path ends at " + std::to_string(cur) + ", expected " +
                std::to_string(target);
  }
  return res;
}

}  // namespace

std::optional<std::string> check_witness(const MixedGraph& graph,
                                         Semantics semantics, DisjointMode mode,
                                         VertexPair left, VertexPair right,
                                         const Witness& witness,
                                         const std::vector<bool>& ground) {
  const auto p1 = path_elements(witness, semantics, 0);
  const auto p2 = path_elements(witness, semantics, 1);
  const bool opposed = semantics == Semantics::kOpposed;
  const auto w1 = walk(graph, left.first, right.first, p1, ground);
  if (w1.error) return "path 1: " + *w1.error;
  const auto w2 = opposed ? walk(graph, right.second, left.second, p2, ground)
                          : walk(graph, left.second, right.second, p2, ground);
  if (w2.error) return "path 2: " + *w2.error;
  if (mode == DisjointMode::kEdge) {
    for (ElementId id : p1) {
      if (std::find(p2.begin(), p2.end(), id) != p2.end()) {
        return "paths share element " + std::to_string(id);
      }
    }
  } else {
    for (VertexId v : w1.vertices) {
      if (std::find(w2.vertices.begin(), w2.vertices.end(), v) !=
          w2.vertices.end()) {
        return "paths share vertex " + std::to_string(v);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_witnesses(const MixedGraph& graph,
                                           const Relation2& relation,
                                           DisjointMode mode,
                                           const std::vector<bool>& ground) {
  if (!relation.has_witnesses()) return "relation stores no witnesses";
  std::optional<std::string> failure;
  relation.for_each([&](VertexPair l, VertexPair r, const Witness& w) {
    if (failure) return;
    if (auto err = check_witness(graph, relation.semantics(), mode, l, r, w,
                                 ground)) {
      failure = *err;
    }
  });
  return failure;
}

}  // namespace dspp
