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

#include "dspp/generator.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "dspp/metrics.hpp"
#include "dspp/oracle.hpp"

namespace dspp {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Reject the low values that make the modulo biased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double SplitMix64::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

// m distinct pairs out of n(n-1)/2 by a partial Fisher-Yates shuffle of the
// pair indices, returned sorted.
std::vector<std::pair<VertexId, VertexId>> sample_pairs(std::size_t n,
                                                        std::size_t m,
                                                        SplitMix64& rng) {
  std::vector<std::pair<VertexId, VertexId>> all;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  if (m > all.size()) {
    throw InputError("cannot place " + std::to_string(m) + " edges on " +
                     std::to_string(n) + " vertices");
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::swap(all[i], all[i + rng.below(all.size() - i)]);
  }
  all.resize(m);
  std::sort(all.begin(), all.end());
  return all;
}

Query make_query(VertexId s1, VertexId t1, VertexId s2, VertexId t2,
                 DisjointMode mode) {
  return Query{{s1, s2}, {t1, t2}, mode};
}

}  // namespace

Instance random_instance(std::size_t n, std::size_t m, double zero_fraction,
                         Length max_length, std::uint64_t seed,
                         DisjointMode mode) {
  if (n == 0) throw InputError("need at least one vertex");
  if (max_length < 1) throw InputError("max_length must be positive");
  SplitMix64 rng(seed);
  std::vector<UndirectedEdge> edges;
  for (const auto& [u, v] : sample_pairs(n, m, rng)) {
    const Length len = rng.unit() < zero_fraction ? 0 : rng.between(1, max_length);
    edges.push_back({u, v, len});
  }
  const auto pick = [&] { return static_cast<VertexId>(rng.below(n)); };
  const VertexId s1 = pick();
  const VertexId t1 = pick();
  const VertexId s2 = pick();
  const VertexId t2 = pick();
  return Instance{UndirectedGraph(n, std::move(edges)),
                  {make_query(s1, t1, s2, t2, mode)},
                  mode};
}

PlantedInstance planted_instance(std::size_t n, std::uint64_t seed,
                                 DisjointMode mode) {
  if (n < 6) throw InputError("planted instances need n >= 6");
  SplitMix64 rng(seed);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);

  // Hop counts: together the plants cover roughly half the vertices.
  const std::size_t budget = std::max<std::size_t>(2, n / 2 - 2);
  const std::size_t hops1 = 1 + rng.below(budget - 1);
  const std::size_t hops2 = std::max<std::size_t>(1, budget - hops1);
  const Length a1 = rng.between(1, 10);
  const Length a2 = rng.between(1, 10);

  std::vector<UndirectedEdge> edges;
  std::set<std::pair<VertexId, VertexId>> used;
  std::array<Path, 2> plant;
  std::size_t next = 0;
  const auto lay = [&](std::size_t hops, Length a, Path& path) {
    path.vertices.push_back(perm[next++]);
    for (std::size_t h = 0; h < hops; ++h) {
      const VertexId u = path.vertices.back();
      const VertexId v = perm[next++];
      path.edges.push_back(static_cast<EdgeId>(edges.size()));
      path.vertices.push_back(v);
      edges.push_back({u, v, a});
      used.insert(std::minmax(u, v));
    }
  };
  lay(hops1, a1, plant[0]);
  lay(hops2, a2, plant[1]);
  const Query query = make_query(plant[0].vertices.front(), plant[0].vertices.back(),
                                 plant[1].vertices.front(), plant[1].vertices.back(),
                                 mode);
  const Length want1 = static_cast<Length>(hops1) * a1;
  const Length want2 = static_cast<Length>(hops2) * a2;

  // Keeps an edge only if both plants stay shortest.
  const auto try_add = [&](VertexId u, VertexId v, Length len) {
    if (u == v || used.contains(std::minmax(u, v))) return false;
    edges.push_back({u, v, len});
    const UndirectedGraph g(n, edges);
    if (dijkstra(g, query.s.first).at(query.t.first) == want1 &&
        dijkstra(g, query.s.second).at(query.t.second) == want2) {
      used.insert(std::minmax(u, v));
      return true;
    }
    edges.pop_back();
    return false;
  };

  // Zero-length trees on the remaining vertices, at most 12 per cluster.
  std::size_t rest = next;
  while (n - rest >= 2) {
    const std::size_t size =
        std::min<std::size_t>(n - rest, 2 + rng.below(11));
    for (std::size_t i = 1; i < size; ++i) {
      const VertexId v = perm[rest + i];
      const VertexId u = perm[rest + rng.below(i)];
      try_add(u, v, 0);
    }
    rest += size;
    // Leave some vertices outside clusters.
    if (n - rest >= 2) rest += 1 + rng.below(std::min<std::size_t>(3, n - rest));
  }

  const Length top = std::max(a1, a2);
  const std::size_t target = std::min(3 * n, n * (n - 1) / 2);
  for (std::size_t attempt = 0; edges.size() < target && attempt < 20 * target;
       ++attempt) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    try_add(u, v, rng.between(top + 1, top + 10));
  }

  PlantedInstance out{Instance{UndirectedGraph(n, std::move(edges)), {query}, mode},
                      plant};
  if (auto problem = oracle::validate_solution(out.instance.graph, query, plant)) {
    throw InvariantViolation("planted paths invalid: " + *problem);
  }
  if (n <= 8 && !oracle::brute_force_dspp2(out.instance.graph, query).feasible) {
    throw InvariantViolation("planted instance rejected by the oracle");
  }
  return out;
}

MixedGraph random_mixed_graph(std::size_t n, std::size_t elements,
                              std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t levels = 1 + rng.below(n);
  std::vector<std::uint64_t> level(n);
  for (auto& l : level) l = rng.below(levels);
  std::vector<Element> out;
  for (const auto& [u, v] : sample_pairs(n, elements, rng)) {
    if (level[u] == level[v]) {
      out.push_back({u, v, ElementKind::kEdge});
    } else if (level[u] < level[v]) {
      out.push_back({u, v, ElementKind::kArc});
    } else {
      out.push_back({v, u, ElementKind::kArc});
    }
  }
  return MixedGraph(n, std::move(out));
}

}  // namespace dspp
