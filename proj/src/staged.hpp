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

// Shared machinery for the stage-by-stage dynamic programs: single-arc move
// generators and a relation that can find the entries a stage may extend.

#ifndef DSPP_SRC_STAGED_HPP_
#define DSPP_SRC_STAGED_HPP_

#include <algorithm>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dspp/graph.hpp"
#include "dspp/relation.hpp"

namespace dspp::detail {

struct Move {
  VertexPair to;
  Witness segment;
};

// Arcs grouped by their tail or by their head.
class ArcIndex {
 public:
  enum class Key { kTail, kHead };

  ArcIndex(const MixedGraph& graph, std::span<const ElementId> arcs, Key key);

  std::span<const ElementId> at(VertexId v) const;
  // Keyed vertices in increasing order.
  std::vector<VertexId> keys() const;

 private:
  std::unordered_map<VertexId, std::vector<ElementId>> lists_;
};

// Appends every forward single-arc move from p, the stay-put move included.
void forward_arc_moves(const MixedGraph& graph, const ArcIndex& by_tail,
                       VertexPair p, DisjointMode mode, bool witnesses,
                       std::vector<Move>& out);

// Appends every opposed single-arc move from p: coordinate 1 along an arc of
// `in_by_tail`, coordinate 2 backwards along an arc of `out_by_head`.
void opposed_arc_moves(const MixedGraph& graph, const ArcIndex& in_by_tail,
                       const ArcIndex& out_by_head, VertexPair p,
                       DisjointMode mode, bool witnesses,
                       std::vector<Move>& out);

// {a.first, a.second} and {b.first, b.second} share no vertex.
bool endpoints_disjoint(VertexPair a, VertexPair b);

// Relation under construction, bucketed by the coordinates of each entry's
// right element.
class StagedRelation {
 public:
  StagedRelation(std::size_t vertex_count, Semantics semantics, bool witnesses);

  bool insert(VertexPair left, VertexPair right, Witness witness);
  // Entries whose right element has its first coordinate in `first` or its
  // second coordinate in `second`, sorted and without duplicates.
  std::vector<RelationEntry> touching(std::span<const VertexId> first,
                                      std::span<const VertexId> second) const;

  const Relation2& relation() const { return relation_; }
  Relation2 release() { return std::move(relation_); }

 private:
  Relation2 relation_;
  std::vector<std::vector<RelationEntry>> by_first_;
  std::vector<std::vector<RelationEntry>> by_second_;
};

// One stage R <- C o D o R evaluated on `active`, the only entries D or C can
// move; all other entries map to themselves. New entries are buffered so a
// stage never extends its own output. Returns the number of entries added.
template <class DeltaFn, class ComponentFn>
std::size_t advance(StagedRelation& staged,
                    const std::vector<RelationEntry>& active, DeltaFn&& delta,
                    ComponentFn&& component) {
  const Relation2& rel = staged.relation();
  const bool witnesses = rel.has_witnesses();
  std::unordered_map<VertexPair, std::vector<Move>, VertexPairHash> cache;
  std::vector<std::pair<RelationEntry, Witness>> added;
  std::unordered_map<VertexPair,
                     std::unordered_set<VertexPair, VertexPairHash>,
                     VertexPairHash>
      pending;
  std::vector<Move> deltas;
  for (const auto& entry : active) {
    const Witness* base = witnesses ? rel.witness(entry.left, entry.right)
                                    : nullptr;
    deltas.clear();
    delta(entry.right, deltas);
    for (const auto& d : deltas) {
      auto it = cache.find(d.to);
      if (it == cache.end()) {
        std::vector<Move> moves;
        component(d.to, moves);
        it = cache.emplace(d.to, std::move(moves)).first;
      }
      for (const auto& c : it->second) {
        if (rel.contains(entry.left, c.to)) continue;
        if (!pending[entry.left].insert(c.to).second) continue;
        Witness w;
        if (witnesses) {
          w = concatenate(concatenate(*base, d.segment), c.segment);
        }
        added.push_back({{entry.left, c.to}, std::move(w)});
      }
    }
  }
  for (auto& [e, w] : added) staged.insert(e.left, e.right, std::move(w));
  return added.size();
}

}  // namespace dspp::detail

#endif  // DSPP_SRC_STAGED_HPP_
