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

#include "dspp/instance.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <utility>

namespace dspp {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t number(std::string_view token, std::size_t line,
                    const char* what) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec == std::errc::result_out_of_range) fail(line, std::string(what) + " out of range");
  if (ec != std::errc() || ptr != end) {
    fail(line, std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::size_t n = 0;
  std::size_t m = 0;
  bool header = false;
  std::vector<UndirectedEdge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<Query> queries;
  DisjointMode mode = DisjointMode::kEdge;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto tok = split(line);
    if (tok.empty() || tok[0] == "c" || tok[0].front() == '#') continue;

    const auto vertex = [&](std::string_view t) {
      const auto v = number(t, line_no, "vertex");
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        fail(line_no, "vertex " + std::string(t) + " out of range 1.." +
                          std::to_string(n));
      }
      return static_cast<VertexId>(v - 1);
    };
    const auto arity = [&](std::size_t k) {
      if (tok.size() != k) {
        fail(line_no, "expected " + std::to_string(k - 1) + " fields after '" +
                          std::string(tok[0]) + "'");
      }
    };

    if (tok[0] == "p") {
      if (header) fail(line_no, "second 'p' line");
      arity(4);
      if (tok[1] != "dspp") fail(line_no, "unknown problem '" + std::string(tok[1]) + "'");
      const auto nv = number(tok[2], line_no, "vertex count");
      const auto ne = number(tok[3], line_no, "edge count");
      if (nv < 1 || nv > (std::int64_t{1} << 30)) fail(line_no, "vertex count out of range");
      if (ne < 0) fail(line_no, "negative edge count");
      n = static_cast<std::size_t>(nv);
      m = static_cast<std::size_t>(ne);
      header = true;
      continue;
    }
    if (!header) fail(line_no, "expected 'p dspp <n> <m>' first");
    if (tok[0] == "e") {
      arity(4);
      const VertexId u = vertex(tok[1]);
      const VertexId v = vertex(tok[2]);
      if (!tok[3].empty() && tok[3].front() == '-') fail(line_no, "negative length");
      const Length len = number(tok[3], line_no, "length");
      if (u == v) fail(line_no, "self-loop at vertex " + std::string(tok[1]));
      if (!seen.insert(std::minmax(u, v)).second) {
        fail(line_no, "duplicate edge " + std::string(tok[1]) + " " + std::string(tok[2]));
      }
      if (edges.size() == m) fail(line_no, "more than " + std::to_string(m) + " edges");
      edges.push_back({u, v, len});
    } else if (tok[0] == "q") {
      arity(5);
      queries.push_back({{vertex(tok[1]), vertex(tok[3])},
                         {vertex(tok[2]), vertex(tok[4])},
                         DisjointMode::kEdge});
    } else if (tok[0] == "m") {
      arity(2);
      if (tok[1] == "vertex") {
        mode = DisjointMode::kVertex;
      } else if (tok[1] == "edge") {
        mode = DisjointMode::kEdge;
      } else {
        fail(line_no, "unknown mode '" + std::string(tok[1]) + "'");
      }
    } else {
      fail(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!header) throw InputError("missing 'p dspp <n> <m>' line");
  if (edges.size() != m) {
    throw InputError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  for (auto& q : queries) q.mode = mode;
  return Instance{UndirectedGraph(n, std::move(edges)), std::move(queries), mode};
}

std::string emit_instance(const Instance& instance) {
  std::ostringstream out;
  const auto& g = instance.graph;
  out << "p dspp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.length << '\n';
  }
  if (instance.mode == DisjointMode::kVertex) out << "m vertex\n";
  for (const auto& q : instance.queries) {
    out << "q " << q.s.first + 1 << ' ' << q.t.first + 1 << ' '
        << q.s.second + 1 << ' ' << q.t.second + 1 << '\n';
  }
  return out.str();
}

}  // namespace dspp
