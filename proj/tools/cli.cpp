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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dspp/generator.hpp"
#include "dspp/instance.hpp"
#include "dspp/oracle.hpp"
#include "dspp/solver.hpp"

namespace dspp::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string mode;
  bool json_output = false;
  bool witness = false;
  bool anchored = false;
  std::uint64_t seed = 1;
  std::size_t n = 6;
  std::size_t m = 9;
  double zero_fraction = 0.3;
  Length max_length = 10;
  std::size_t max_n = 8;
  std::size_t instances = 1000;
  std::vector<std::size_t> sizes{50, 100, 200};
  std::optional<std::size_t> s1;
  std::optional<std::size_t> s2;
};

// Calls fn(i) for every i < count on all hardware threads; rethrows the
// first exception.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < count;) {
          try {
            fn(i);
          } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

DisjointMode parse_mode(const std::string& name) {
  if (name == "edge") return DisjointMode::kEdge;
  if (name == "vertex") return DisjointMode::kVertex;
  throw InputError("unknown mode '" + name + "'");
}

Instance load(const Options& o) {
  Instance inst = parse_instance(read_input(o.input));
  if (!o.mode.empty()) {
    inst.mode = parse_mode(o.mode);
    for (auto& q : inst.queries) q.mode = inst.mode;
  }
  return inst;
}

json distance(const std::optional<Length>& d) {
  return d ? json(*d) : json(nullptr);
}

json path_json(const UndirectedGraph& g, const Path& p) {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  for (VertexId v : p.vertices) vertices.push_back(v + 1);
  for (EdgeId e : p.edges) edges.push_back(e + 1);
  return {{"vertices", vertices}, {"edges", edges}, {"length", path_length(g, p)}};
}

json query_json(const Query& q) {
  return {{"s1", q.s.first + 1}, {"t1", q.t.first + 1},
          {"s2", q.s.second + 1}, {"t2", q.t.second + 1}};
}

std::string join_vertices(const Path& p) {
  std::string out;
  for (VertexId v : p.vertices) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

std::string show(const std::optional<Length>& d) {
  return d ? std::to_string(*d) : "unreachable";
}

// Shared output for `solve` and `oracle`.
template <class Decide>
int report(const Options& o, std::ostream& out, Decide&& decide) {
  const Instance inst = load(o);
  json results = json::array();
  std::size_t index = 0;
  for (const auto& q : inst.queries) {
    const Verdict v = decide(inst.graph, q);
    ++index;
    if (o.json_output) {
      json r{{"query", query_json(q)},
             {"feasible", v.feasible},
             {"distance1", distance(v.distance1)},
             {"distance2", distance(v.distance2)}};
      if (o.witness && v.witness) {
        r["witness"] = {path_json(inst.graph, (*v.witness)[0]),
                        path_json(inst.graph, (*v.witness)[1])};
      }
      results.push_back(std::move(r));
      continue;
    }
    out << "query " << index << ": " << (v.feasible ? "feasible" : "infeasible")
        << " d1=" << show(v.distance1) << " d2=" << show(v.distance2) << '\n';
    if (o.witness && v.witness) {
      out << "  path 1: " << join_vertices((*v.witness)[0]) << '\n'
          << "  path 2: " << join_vertices((*v.witness)[1]) << '\n';
    }
  }
  if (o.json_output) {
    const json doc{{"vertices", inst.graph.vertex_count()},
                   {"edges", inst.graph.edge_count()},
                   {"mode", to_string(inst.mode)},
                   {"results", results}};
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

SolverOptions solver_options(const Options& o) {
  SolverOptions s;
  s.anchored = o.anchored;
  s.with_witnesses = o.witness;
  return s;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const auto opts = solver_options(o);
  return report(o, out, [&](const UndirectedGraph& g, const Query& q) {
    return solve(g, q, opts);
  });
}

int cmd_oracle(const Options& o, std::ostream& out) {
  return report(o, out, [](const UndirectedGraph& g, const Query& q) {
    return oracle::brute_force_dspp2(g, q);
  });
}

int cmd_successors(const Options& o, std::ostream& out) {
  const Instance inst = load(o);
  std::vector<VertexPair> sources;
  if (o.s1 || o.s2) {
    if (!o.s1 || !o.s2) throw InputError("--s1 and --s2 go together");
    if (*o.s1 < 1 || *o.s2 < 1) throw InputError("vertices are numbered from 1");
    sources.push_back({static_cast<VertexId>(*o.s1 - 1),
                       static_cast<VertexId>(*o.s2 - 1)});
  } else {
    for (const auto& q : inst.queries) sources.push_back(q.s);
  }
  if (sources.empty()) throw InputError("no sources: add a 'q' line or --s1/--s2");
  SolverOptions opts = solver_options(o);
  json all = json::array();
  for (const auto& s : sources) {
    const auto ts = successors(inst.graph, s, inst.mode, opts);
    if (o.json_output) {
      json pairs = json::array();
      for (const auto& t : ts) pairs.push_back({t.first + 1, t.second + 1});
      all.push_back({{"s1", s.first + 1}, {"s2", s.second + 1}, {"sinks", pairs}});
      continue;
    }
    out << "sources " << s.first + 1 << ' ' << s.second + 1 << ": " << ts.size()
        << " sink pairs\n";
    for (const auto& t : ts) out << "  " << t.first + 1 << ' ' << t.second + 1 << '\n';
  }
  if (o.json_output) out << all.dump(2) << '\n';
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto mode = o.mode.empty() ? DisjointMode::kEdge : parse_mode(o.mode);
  out << emit_instance(random_instance(o.n, o.m, o.zero_fraction, o.max_length,
                                       o.seed, mode));
  return kExitOk;
}

int cmd_planted(const Options& o, std::ostream& out) {
  const auto mode = o.mode.empty() ? DisjointMode::kEdge : parse_mode(o.mode);
  out << emit_instance(planted_instance(o.n, o.seed, mode).instance);
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
  const auto mode = o.mode.empty() ? DisjointMode::kEdge : parse_mode(o.mode);
  if (o.max_n < 1) throw InputError("--max-n must be at least 1");
  SplitMix64 rng(o.seed);
  constexpr std::array kZeroFractions{0.0, 0.3, 1.0};
  std::vector<Instance> suite;
  for (std::size_t i = 0; i < o.instances; ++i) {
    const std::size_t n = 1 + rng.below(o.max_n);
    const std::size_t m = rng.below(n * (n - 1) / 2 + 1);
    suite.push_back(random_instance(n, m, kZeroFractions[i % 3], 5, rng.next(), mode));
  }
  SolverOptions opts;
  opts.anchored = o.anchored;
  opts.check_invariants = true;
  std::vector<std::string> problems(suite.size());
  parallel_for(suite.size(), [&](std::size_t i) {
    const auto& q = suite[i].queries.front();
    const Verdict got = solve(suite[i].graph, q, opts);
    const Verdict want = oracle::brute_force_dspp2(suite[i].graph, q);
    if (got.feasible != want.feasible) {
      problems[i] = "solver " + std::to_string(got.feasible) + " oracle " +
                    std::to_string(want.feasible) + '\n' + emit_instance(suite[i]);
    } else if (got.feasible) {
      if (auto problem = oracle::validate_solution(suite[i].graph, q, *got.witness)) {
        problems[i] = "invalid witness: " + *problem + '\n';
      }
    }
  });
  std::size_t agree = 0;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (problems[i].empty()) {
      ++agree;
    } else {
      err << "instance " << i << ": " << problems[i];
    }
  }
  out << "solver/oracle agreement " << agree << '/' << o.instances << '\n';
  return agree == o.instances ? kExitOk : kExitFailure;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto mode = o.mode.empty() ? DisjointMode::kEdge : parse_mode(o.mode);
  SolverOptions opts = solver_options(o);
  opts.with_witnesses = true;
  struct Run {
    std::size_t n;
    std::uint64_t seed;
    Instance instance;
    Verdict verdict;
  };
  std::vector<Run> runs;
  for (std::size_t n : o.sizes) {
    for (std::size_t k = 0; k < o.instances; ++k) {
      runs.push_back({n, o.seed + k, planted_instance(n, o.seed + k, mode).instance, {}});
    }
  }
  parallel_for(runs.size(), [&](std::size_t i) {
    runs[i].verdict = solve(runs[i].instance.graph, runs[i].instance.queries.front(), opts);
  });
  out << "instance,n,m,seed,feasible,component,vertices,entries,seconds\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    const auto& v = r.verdict;
    const auto prefix = std::to_string(i) + ',' + std::to_string(r.n) + ',' +
                        std::to_string(r.instance.graph.edge_count()) + ',' +
                        std::to_string(r.seed) + ',' + (v.feasible ? "1" : "0") + ',';
    for (std::size_t j = 0; j < v.stats.components.size(); ++j) {
      const auto& c = v.stats.components[j];
      out << prefix << j << ',' << c.vertices << ',' << c.entries_added << ','
          << c.seconds << '\n';
    }
    out << prefix << "all," << v.stats.expansion_vertices << ','
        << v.stats.relation_size << ',' << v.stats.seconds << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two disjoint shortest paths solver"};
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&](CLI::App* c) {
    c->add_option("--input", o.input, "instance file, '-' for stdin")->required();
    c->add_option("--mode", o.mode, "edge or vertex (overrides the file)");
    c->add_flag("--json", o.json_output, "JSON output");
  };
  auto* solve_cmd = app.add_subcommand("solve", "decide every query of an instance");
  add_input(solve_cmd);
  solve_cmd->add_flag("--witness", o.witness, "print witness paths");
  solve_cmd->add_flag("--anchored", o.anchored, "restrict relations to the query");

  auto* succ_cmd = app.add_subcommand("successors", "all sink pairs reachable from the sources");
  add_input(succ_cmd);
  succ_cmd->add_option("--s1", o.s1, "first source (default: from the queries)");
  succ_cmd->add_option("--s2", o.s2, "second source");
  succ_cmd->add_flag("--anchored", o.anchored, "restrict relations to the sources");

  auto* oracle_cmd = app.add_subcommand("oracle", "decide queries by exhaustive search");
  add_input(oracle_cmd);
  oracle_cmd->add_flag("--witness", o.witness, "print witness paths");

  auto* gen_cmd = app.add_subcommand("gen", "random instance");
  gen_cmd->add_option("--n", o.n, "vertices")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", o.m, "edges");
  gen_cmd->add_option("--zero-frac", o.zero_fraction, "share of zero-length edges")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--max-length", o.max_length, "largest positive length")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", o.seed);
  gen_cmd->add_option("--mode", o.mode, "edge or vertex");

  auto* planted_cmd = app.add_subcommand("planted", "instance with a known solution");
  planted_cmd->add_option("--n", o.n, "vertices (at least 6)");
  planted_cmd->add_option("--seed", o.seed);
  planted_cmd->add_option("--mode", o.mode, "edge or vertex");

  auto* self_cmd = app.add_subcommand("selftest", "compare solver and oracle on random instances");
  self_cmd->add_option("--max-n", o.max_n, "largest vertex count");
  self_cmd->add_option("--instances", o.instances);
  self_cmd->add_option("--seed", o.seed);
  self_cmd->add_option("--mode", o.mode, "edge or vertex");
  self_cmd->add_flag("--anchored", o.anchored);

  auto* bench_cmd = app.add_subcommand("bench", "time planted instances, CSV output");
  bench_cmd->add_option("--sizes", o.sizes, "vertex counts")->delimiter(',');
  bench_cmd->add_option("--instances", o.instances = 1, "instances per size");
  bench_cmd->add_option("--seed", o.seed);
  bench_cmd->add_option("--mode", o.mode, "edge or vertex");
  bench_cmd->add_flag("--anchored", o.anchored);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out);
    if (*succ_cmd) return cmd_successors(o, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
    if (*gen_cmd) return cmd_gen(o, out);
    if (*planted_cmd) return cmd_planted(o, out);
    if (*self_cmd) return cmd_selftest(o, out, err);
    if (*bench_cmd) return cmd_bench(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace dspp::cli
