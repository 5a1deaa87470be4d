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

#include "staged.hpp"

namespace dspp::detail {

ArcIndex::ArcIndex(const MixedGraph& graph, std::span<const ElementId> arcs,
                   Key key) {
  for (ElementId a : arcs) {
    const auto& el = graph.element(a);
    lists_[key == Key::kTail ? el.tail : el.head].push_back(a);
  }
  for (auto& [v, list] : lists_) std::sort(list.begin(), list.end());
}

std::span<const ElementId> ArcIndex::at(VertexId v) const {
  const auto it = lists_.find(v);
  if (it == lists_.end()) return {};
  return it->second;
}

std::vector<VertexId> ArcIndex::keys() const {
  std::vector<VertexId> out;
  out.reserve(lists_.size());
  for (const auto& [v, list] : lists_) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool endpoints_disjoint(VertexPair a, VertexPair b) {
  return a.first != b.first && a.first != b.second && a.second != b.first &&
         a.second != b.second;
}

namespace {

struct Step {
  VertexId to;
  std::optional<ElementId> arc;
};

}  // namespace

void forward_arc_moves(const MixedGraph& graph, const ArcIndex& by_tail,
                       VertexPair p, DisjointMode mode, bool witnesses,
                       std::vector<Move>& out) {
  std::vector<Step> first{{p.first, std::nullopt}};
  std::vector<Step> second{{p.second, std::nullopt}};
  for (ElementId a : by_tail.at(p.first)) first.push_back({graph.element(a).head, a});
  for (ElementId a : by_tail.at(p.second)) second.push_back({graph.element(a).head, a});
  for (const auto& s1 : first) {
    for (const auto& s2 : second) {
      if (s1.arc && s2.arc && *s1.arc == *s2.arc) continue;
      const VertexPair q{s1.to, s2.to};
      if (mode == DisjointMode::kVertex &&
          !endpoints_disjoint({p.first, s1.to}, {p.second, s2.to})) {
        continue;
      }
      Witness w;
      if (witnesses) {
        if (s1.arc) w.first = w.first.push_front(*s1.arc);
        if (s2.arc) w.second = w.second.push_front(*s2.arc);
      }
      out.push_back({q, std::move(w)});
    }
  }
}

void opposed_arc_moves(const MixedGraph& graph, const ArcIndex& in_by_tail,
                       const ArcIndex& out_by_head, VertexPair p,
                       DisjointMode mode, bool witnesses,
                       std::vector<Move>& out) {
  std::vector<Step> first{{p.first, std::nullopt}};
  std::vector<Step> second{{p.second, std::nullopt}};
  for (ElementId a : in_by_tail.at(p.first)) first.push_back({graph.element(a).head, a});
  for (ElementId a : out_by_head.at(p.second)) second.push_back({graph.element(a).tail, a});
  for (const auto& s1 : first) {
    for (const auto& s2 : second) {
      if (s1.arc && s2.arc && *s1.arc == *s2.arc) {
        throw InvariantViolation("opposed move uses one arc twice");
      }
      if (mode == DisjointMode::kVertex &&
          !endpoints_disjoint({p.first, s1.to}, {p.second, s2.to})) {
        continue;
      }
      Witness w;
      if (witnesses) {
        if (s1.arc) w.first = w.first.push_front(*s1.arc);
        if (s2.arc) w.second = w.second.push_front(*s2.arc);
      }
      out.push_back({{s1.to, s2.to}, std::move(w)});
    }
  }
}

StagedRelation::StagedRelation(std::size_t vertex_count, Semantics semantics,
                               bool witnesses)
    : relation_(semantics, witnesses),
      by_first_(vertex_count),
      by_second_(vertex_count) {}

bool StagedRelation::insert(VertexPair left, VertexPair right,
                            Witness witness) {
  if (!relation_.insert(left, right, std::move(witness))) return false;
  by_first_[right.first].push_back({left, right});
  by_second_[right.second].push_back({left, right});
  return true;
}

std::vector<RelationEntry> StagedRelation::touching(
    std::span<const VertexId> first, std::span<const VertexId> second) const {
  std::vector<RelationEntry> out;
  for (VertexId v : first) {
    out.insert(out.end(), by_first_[v].begin(), by_first_[v].end());
  }
  for (VertexId v : second) {
    out.insert(out.end(), by_second_[v].begin(), by_second_[v].end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dspp::detail
