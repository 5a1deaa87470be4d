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

#ifndef DSPP_GENERATOR_HPP_
#define DSPP_GENERATOR_HPP_

#include <array>
#include <cstdint>

#include "dspp/graph.hpp"
#include "dspp/instance.hpp"
#include "dspp/solver.hpp"

namespace dspp {

// SplitMix64 (Steele, Lea, Flood 2014). Seed 0 yields 0xe220a8397b1dcdaf,
// 0x6e789e6aa1b965f4, 0x06c45d188009454f, ...
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::uint64_t state_;
};

// G(n, m) with m distinct edges; each length is 0 with probability
// zero_fraction and otherwise uniform in [1, max_length]. One query with
// uniform terminals. Throws InputError if m > n(n-1)/2.
Instance random_instance(std::size_t n, std::size_t m, double zero_fraction,
                         Length max_length, std::uint64_t seed,
                         DisjointMode mode = DisjointMode::kEdge);

struct PlantedInstance {
  Instance instance;
  std::array<Path, 2> plant;
};

// Two vertex-disjoint shortest paths, zero-length clusters of at most 12
// vertices, and noise edges up to about 3n edges; noise that would shorten
// a plant is rejected. The plant is validated, and for n <= 8 the instance
// is also confirmed feasible by the oracle. Throws InputError if n < 6.
PlantedInstance planted_instance(std::size_t n, std::uint64_t seed,
                                 DisjointMode mode = DisjointMode::kEdge);

// Weakly acyclic mixed graph with `elements` distinct vertex pairs: vertices
// get random levels, pairs within a level become edges and the others arcs
// towards the higher level.
MixedGraph random_mixed_graph(std::size_t n, std::size_t elements,
                              std::uint64_t seed);

}  // namespace dspp

#endif  // DSPP_GENERATOR_HPP_
