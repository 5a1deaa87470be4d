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

#ifndef DSPP_RELATION_HPP_
#define DSPP_RELATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dspp/graph.hpp"

namespace dspp {

// Persistent list of element ids. Extending or joining shares the tail, so
// composing witnesses costs only the newly added steps.
class Trail {
 public:
  Trail() = default;
  Trail(const Trail&) = default;
  Trail(Trail&&) noexcept = default;
  Trail& operator=(const Trail&) = default;
  Trail& operator=(Trail&&) noexcept = default;
  ~Trail();

  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }

  Trail push_front(ElementId id) const;
  // Elements of `front` followed by the elements of `back`.
  static Trail join(const Trail& front, const Trail& back);
  static Trail from(std::span<const ElementId> ids);

  Trail reversed() const;
  Trail mapped(std::span<const ElementId> element_map) const;
  std::vector<ElementId> to_vector() const;

 private:
  struct Node {
    ElementId id;
    // Mutable only so the destructor can unlink uniquely owned chains.
    mutable std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
  std::size_t size_ = 0;
};

// Forward (both paths v_i -> w_i) or opposed (v1 -> w1 and w2 -> v2).
enum class Semantics : std::uint8_t { kForward, kOpposed };

// One path per coordinate. Each trail starts at the end touching the
// entry's right element: for forward entries trail i lists path v_i -> w_i
// back to front; for opposed entries the second trail lists w2 -> v2 front
// to back.
struct Witness {
  Trail first;
  Trail second;
};

// Witness of `then` applied after `before` (right of `before` equals left
// of `then`).
Witness concatenate(const Witness& before, const Witness& then);

// Element sequence of coordinate `index` (0 or 1) in traversal order.
std::vector<ElementId> path_elements(const Witness& witness,
                                     Semantics semantics, int index);

struct VertexPairHash {
  std::size_t operator()(const VertexPair& p) const noexcept {
    std::uint64_t x = (static_cast<std::uint64_t>(p.first) << 32) | p.second;
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

struct RelationEntry {
  VertexPair left;
  VertexPair right;

  friend auto operator<=>(const RelationEntry&, const RelationEntry&) = default;
};

// Binary relation on V^2, stored as rows keyed by the left element, with at
// most one witness per entry.
class Relation2 {
 public:
  using Row = std::unordered_map<VertexPair, Witness, VertexPairHash>;

  explicit Relation2(Semantics semantics = Semantics::kForward,
                     bool with_witnesses = true)
      : semantics_(semantics), with_witnesses_(with_witnesses) {}

  Semantics semantics() const { return semantics_; }
  bool has_witnesses() const { return with_witnesses_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(VertexPair left, VertexPair right) const;
  // Null when absent or when witnesses are not stored.
  const Witness* witness(VertexPair left, VertexPair right) const;
  const Row* row(VertexPair left) const;

  // Keeps the existing witness if the entry is already present.
  bool insert(VertexPair left, VertexPair right, Witness witness = {});

  std::vector<RelationEntry> entries() const;  // sorted
  std::vector<VertexPair> lefts() const;       // sorted
  std::vector<VertexPair> image(VertexPair left) const;  // sorted

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [left, row] : rows_) {
      for (const auto& [right, witness] : row) f(left, right, witness);
    }
  }

  // Set equality; witnesses and the witness flag are ignored.
  bool same_entries(const Relation2& other) const;

 private:
  Semantics semantics_;
  bool with_witnesses_;
  std::size_t size_ = 0;
  std::unordered_map<VertexPair, Row, VertexPairHash> rows_;
};

// {(v, v)} over [0, vertex_count)^2; vertex mode keeps pairs with distinct
// coordinates only.
Relation2 identity_relation(std::size_t vertex_count, Semantics semantics,
                            DisjointMode mode, bool with_witnesses = true);

// s after r: {(u, w) : u r v and v s w}. Witnesses are concatenated per
// coordinate; the smallest middle v supplies the witness.
Relation2 compose(const Relation2& r, const Relation2& s);

// Single-arc moves: each coordinate stays put or follows one arc of `arcs`;
// both coordinates never share an arc. Vertex mode additionally requires
// disjoint endpoint sets {p1, q1} and {p2, q2}.
Relation2 delta_relation_forward(const MixedGraph& graph,
                                 std::span<const ElementId> arcs,
                                 DisjointMode mode = DisjointMode::kEdge,
                                 bool with_witnesses = true);

// Opposed single-arc moves: coordinate 1 follows an arc of `arcs_in`
// forward (p1 -> q1), coordinate 2 an arc of `arcs_out` read backwards
// (q2 -> p2).
Relation2 delta_relation_opposed(const MixedGraph& graph,
                                 std::span<const ElementId> arcs_in,
                                 std::span<const ElementId> arcs_out,
                                 DisjointMode mode = DisjointMode::kEdge,
                                 bool with_witnesses = true);

// v opposed-related to w iff (v1, w2) forward-related to (w1, v2).
Relation2 reindex_to_opposed(const Relation2& forward);

// Renames vertices and witness elements through local->global maps.
Relation2 remap(const Relation2& relation, std::span<const VertexId> vertex_map,
                std::span<const ElementId> element_map);

// Checks one witness against `graph`: endpoints and directions, membership
// in `ground` (all elements when empty) and mode-disjointness. Returns a
// description of the first problem found.
std::optional<std::string> check_witness(const MixedGraph& graph,
                                         Semantics semantics, DisjointMode mode,
                                         VertexPair left, VertexPair right,
                                         const Witness& witness,
                                         const std::vector<bool>& ground = {});

// check_witness over every entry; returns the first failure.
std::optional<std::string> check_witnesses(const MixedGraph& graph,
                                           const Relation2& relation,
                                           DisjointMode mode,
                                           const std::vector<bool>& ground = {});

}  // namespace dspp

#endif  // DSPP_RELATION_HPP_
