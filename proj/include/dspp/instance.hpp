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

#ifndef DSPP_INSTANCE_HPP_
#define DSPP_INSTANCE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "dspp/graph.hpp"
#include "dspp/solver.hpp"

namespace dspp {

// A graph with its queries. Every query carries the instance mode.
struct Instance {
  UndirectedGraph graph;
  std::vector<Query> queries;
  DisjointMode mode = DisjointMode::kEdge;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Line-oriented text format, vertices numbered from 1:
//
//   c any comment            (also lines starting with '#')
//   p dspp <n> <m>
//   e <u> <v> <length>       m times
//   m vertex                 optional; `m edge` is the default
//   q <s1> <t1> <s2> <t2>    any number of times
//
// Throws InputError naming the offending line.
Instance parse_instance(std::string_view text);

std::string emit_instance(const Instance& instance);

}  // namespace dspp

#endif  // DSPP_INSTANCE_HPP_
