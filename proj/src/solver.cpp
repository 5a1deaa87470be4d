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

#include "dspp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <memory>
#include <unordered_map>

#include "dspp/dpp_mixed.hpp"
#include "staged.hpp"

namespace dspp {

Length path_length(const UndirectedGraph& graph, const Path& path) {
  Length total = 0;
  for (EdgeId e : path.edges) total += graph.edge(e).length;
  return total;
}

Path collapse_path(const Expansion& expansion, VertexId start,
                   std::span<const ElementId> elements) {
  Path out;
  out.vertices.push_back(start);
  VertexId at = start;
  for (ElementId e : elements) {
    const auto& el = expansion.graph.element(e);
    at = el.is_edge() ? el.other(at) : el.head;
    const ElementId g = expansion.gadget_of[e];
    // Keep a gadget's edge once, at the arc entering its first inner vertex.
    if (g == kNoGadget || at == expansion.gadgets[g].minus) {
      out.edges.push_back(expansion.origin[e]);
    }
    if (expansion.is_original(at)) out.vertices.push_back(at);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr ElementId kNone = std::numeric_limits<ElementId>::max();

// Vertices reachable from (forward) or reaching (backward) `root` using the
// elements accepted by `use`, with the element that links each vertex
// towards the root.
template <class Use>
std::unordered_map<VertexId, ElementId> search(const MixedGraph& g,
                                               VertexId root, bool forward,
                                               Use&& use,
                                               std::vector<VertexId>* order) {
  std::unordered_map<VertexId, ElementId> parent{{root, kNone}};
  std::vector<VertexId> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId v = queue[i];
    for (ElementId e : forward ? g.outgoing(v) : g.incoming(v)) {
      if (!use(e)) continue;
      const auto& el = g.element(e);
      const VertexId w =
          el.is_edge() ? el.other(v) : (forward ? el.head : el.tail);
      if (parent.emplace(w, e).second) queue.push_back(w);
    }
  }
  if (order != nullptr) *order = std::move(queue);
  return parent;
}

// Element ids from x back to the search root.
Trail trail_to_root(const MixedGraph& g,
                    const std::unordered_map<VertexId, ElementId>& parent,
                    VertexId x) {
  std::vector<ElementId> ids;
  for (ElementId e = parent.at(x); e != kNone; e = parent.at(x)) {
    ids.push_back(e);
    x = g.element(e).other(x);
  }
  return Trail::from(ids);
}

class OpposedProgram {
 public:
  OpposedProgram(const Expansion& x, const OrderedComponents& order,
                 const SolverOptions& options)
      : x_(x), order_(order), options_(options) {
    if (options_.subroutine == nullptr) {
      owned_ = std::make_unique<ExhaustiveDppSolver>(options_.path_budget);
      subroutine_ = owned_.get();
    } else {
      subroutine_ = options_.subroutine;
    }
    arcs_in_.resize(order.size());
    arcs_out_.resize(order.size());
    for (ElementId e = 0; e < x.graph.element_count(); ++e) {
      const auto& el = x.graph.element(e);
      if (x.classes[e] == ArcClass::kFirstOnly) {
        arcs_in_[order.position[el.head]].push_back(e);
      } else if (x.classes[e] == ArcClass::kSecondOnly) {
        arcs_out_[order.position[el.tail]].push_back(e);
      }
    }
  }

  // Drop new entries whose first path can no longer reach t1 or whose
  // second path cannot be reached from s2.
  void prune_towards(VertexId t1) {
    const auto& g = x_.graph;
    auto first = search(g, t1, false,
                        [&](ElementId e) { return x_.usable_by_first(e); },
                        nullptr);
    auto second = search(g, x_.sources.second, true,
                         [&](ElementId e) { return x_.usable_by_second(e); },
                         nullptr);
    keep_first_.assign(g.vertex_count(), false);
    keep_second_.assign(g.vertex_count(), false);
    for (const auto& [v, e] : first) keep_first_[v] = true;
    for (const auto& [v, e] : second) keep_second_[v] = true;
  }

  Relation2 run(std::span<const VertexPair> lefts, SolveStats* stats) {
    const bool witnesses = options_.with_witnesses;
    detail::StagedRelation staged(x_.graph.vertex_count(), Semantics::kOpposed,
                                  witnesses);
    for (const auto& l : lefts) staged.insert(l, l, {});
    for (std::uint32_t j = 0; j < order_.size(); ++j) {
      const auto start = Clock::now();
      const std::size_t added = stage(staged, j);
      if (stats != nullptr) {
        stats->components.push_back(
            {order_.components[j].size(), added, seconds_since(start)});
      }
    }
    return staged.release();
  }

 private:
  std::size_t stage(detail::StagedRelation& staged, std::uint32_t j) {
    const auto& cell = order_.components[j];
    const auto& g = x_.graph;
    const detail::ArcIndex in_by_tail(g, arcs_in_[j],
                                      detail::ArcIndex::Key::kTail);
    const detail::ArcIndex out_by_head(g, arcs_out_[j],
                                       detail::ArcIndex::Key::kHead);
    const auto with_cell = [&](std::vector<VertexId> v) {
      v.insert(v.end(), cell.begin(), cell.end());
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    };
    const auto active = staged.touching(with_cell(in_by_tail.keys()),
                                        with_cell(out_by_head.keys()));
    if (active.empty()) return 0;

    const bool witnesses = options_.with_witnesses;
    const auto inside = [&](ElementId e) {
      const auto& el = g.element(e);
      return order_.position[el.tail] == j && order_.position[el.head] == j;
    };
    // Local program for G[W_j] and its anchored slices, built on demand.
    std::vector<ElementId> element_map;
    std::unique_ptr<DisjointPathsProgram> program;
    std::unordered_map<VertexId,
                       std::unordered_map<VertexId, std::vector<detail::Move>>>
        slices;
    const auto local = [&](VertexId v) {
      return static_cast<VertexId>(
          std::lower_bound(cell.begin(), cell.end(), v) - cell.begin());
    };
    const auto slice = [&](VertexId q1) -> auto& {
      auto it = slices.find(q1);
      if (it != slices.end()) return it->second;
      if (!program) {
        MixedDppOptions mo;
        mo.mode = x_.mode;
        mo.with_witnesses = witnesses;
        mo.subroutine = subroutine_;
        program = std::make_unique<DisjointPathsProgram>(
            g.induced(cell, &element_map), mo);
      }
      const VertexId anchor = local(q1);
      const Relation2 forward = program->run(std::span(&anchor, 1));
      auto& by_q2 = slices[q1];
      // (q1, w2) forward-related to (w1, q2) gives q opposed-related to w.
      forward.for_each([&](VertexPair l, VertexPair r, const Witness& fw) {
        Witness w;
        if (witnesses) {
          w.first = fw.first.mapped(element_map);
          w.second = fw.second.reversed().mapped(element_map);
        }
        by_q2[cell[r.second]].push_back(
            {{cell[r.first], cell[l.second]}, std::move(w)});
      });
      return by_q2;
    };

    const auto delta = [&](VertexPair p, std::vector<detail::Move>& out) {
      detail::opposed_arc_moves(g, in_by_tail, out_by_head, p, x_.mode,
                                witnesses, out);
    };
    const auto keep = [&](VertexPair r) {
      return keep_first_.empty() || (keep_first_[r.first] && keep_second_[r.second]);
    };
    const auto component = [&](VertexPair q, std::vector<detail::Move>& out) {
      const bool in1 = order_.position[q.first] == j;
      const bool in2 = order_.position[q.second] == j;
      if (in1 && in2) {
        auto& by_q2 = slice(q.first);
        const auto it = by_q2.find(q.second);
        if (it == by_q2.end()) return;
        for (const auto& m : it->second) {
          if (keep(m.to)) out.push_back(m);
        }
      } else if (in1 || in2) {
        std::vector<VertexId> reached;
        const auto parent = search(g, in1 ? q.first : q.second, in1, inside,
                                   &reached);
        for (VertexId v : reached) {
          const VertexPair to = in1 ? VertexPair{v, q.second}
                                    : VertexPair{q.first, v};
          if (!keep(to)) continue;
          Witness w;
          if (witnesses) {
            (in1 ? w.first : w.second) = trail_to_root(g, parent, v);
          }
          out.push_back({to, std::move(w)});
        }
      } else if (keep(q)) {
        out.push_back({q, {}});
      }
    };
    return detail::advance(staged, active, delta, component);
  }

  const Expansion& x_;
  const OrderedComponents& order_;
  SolverOptions options_;
  std::unique_ptr<ExhaustiveDppSolver> owned_;
  const UndirectedDppSolver* subroutine_ = nullptr;
  std::vector<std::vector<ElementId>> arcs_in_;   // first-only, by head
  std::vector<std::vector<ElementId>> arcs_out_;  // second-only, by tail
  std::vector<bool> keep_first_;
  std::vector<bool> keep_second_;
};

void check_query(const UndirectedGraph& graph, VertexPair p) {
  if (p.first >= graph.vertex_count() || p.second >= graph.vertex_count()) {
    throw InputError("query vertex out of range");
  }
}

struct Prepared {
  Expansion expansion;
  OrderedComponents order;
};

Prepared prepare(const UndirectedGraph& graph, VertexPair s, DisjointMode mode,
                 const SolverOptions& options) {
  Prepared p{build_expansion(graph, s, mode), {}};
  if (options.check_invariants) {
    const auto problems = distance_violations(p.expansion);
    if (!problems.empty()) throw InvariantViolation(problems.front());
  }
  p.order = ordered_components(p.expansion, options.check_invariants);
  return p;
}

std::vector<VertexPair> all_pairs(std::size_t n, DisjointMode mode) {
  std::vector<VertexPair> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (mode == DisjointMode::kVertex && a == b) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

std::optional<Length> unscaled(const std::optional<Length>& d) {
  if (!d) return std::nullopt;
  return *d / Expansion::kScale;
}

}  // namespace

Relation2 opposed_relation(const Expansion& expansion,
                           const OrderedComponents& order,
                           const SolverOptions& options,
                           std::optional<std::span<const VertexPair>> lefts) {
  OpposedProgram program(expansion, order, options);
  if (lefts) return program.run(*lefts, nullptr);
  const auto all = all_pairs(expansion.graph.vertex_count(), expansion.mode);
  return program.run(all, nullptr);
}

Verdict solve(const UndirectedGraph& graph, const Query& query,
              const SolverOptions& options) {
  const auto start = Clock::now();
  check_query(graph, query.s);
  check_query(graph, query.t);
  const auto p = prepare(graph, query.s, query.mode, options);
  const auto& x = p.expansion;

  Verdict v;
  v.distance1 = unscaled(x.d1[query.t.first]);
  v.distance2 = unscaled(x.d2[query.t.second]);
  v.stats.expansion_vertices = x.graph.vertex_count();
  v.stats.gadgets = x.gadgets.size();
  if (v.distance1 && v.distance2) {
    OpposedProgram program(x, p.order, options);
    const VertexPair from{query.s.first, query.t.second};
    const VertexPair to{query.t.first, query.s.second};
    std::vector<VertexPair> lefts;
    if (options.anchored) {
      program.prune_towards(query.t.first);
      if (query.mode == DisjointMode::kEdge || from.first != from.second) {
        lefts.push_back(from);
      }
    } else {
      lefts = all_pairs(x.graph.vertex_count(), query.mode);
    }
    const Relation2 rel = program.run(lefts, &v.stats);
    v.stats.relation_size = rel.size();
    v.feasible = rel.contains(from, to);
    if (v.feasible && options.with_witnesses) {
      const Witness& w = *rel.witness(from, to);
      const auto p1 = path_elements(w, Semantics::kOpposed, 0);
      const auto p2 = path_elements(w, Semantics::kOpposed, 1);
      v.witness = std::array<Path, 2>{collapse_path(x, query.s.first, p1),
                                      collapse_path(x, query.s.second, p2)};
    }
  }
  v.stats.seconds = seconds_since(start);
  return v;
}

std::vector<VertexPair> successors(const UndirectedGraph& graph, VertexPair s,
                                   DisjointMode mode,
                                   const SolverOptions& options) {
  check_query(graph, s);
  SolverOptions opts = options;
  opts.with_witnesses = false;
  const auto p = prepare(graph, s, mode, opts);
  const auto& x = p.expansion;
  OpposedProgram program(x, p.order, opts);
  std::vector<VertexPair> lefts;
  if (options.anchored) {
    for (VertexId b = 0; b < x.graph.vertex_count(); ++b) {
      if (mode == DisjointMode::kVertex && b == s.first) continue;
      lefts.push_back({s.first, b});
    }
  } else {
    lefts = all_pairs(x.graph.vertex_count(), mode);
  }
  const Relation2 rel = program.run(lefts, nullptr);
  std::vector<VertexPair> out;
  const auto n = static_cast<VertexId>(graph.vertex_count());
  for (VertexId t1 = 0; t1 < n; ++t1) {
    for (VertexId t2 = 0; t2 < n; ++t2) {
      if (rel.contains({s.first, t2}, {t1, s.second})) out.push_back({t1, t2});
    }
  }
  return out;
}

}  // namespace dspp
