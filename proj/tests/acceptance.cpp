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

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dspp/dpp_mixed.hpp"
#include "dspp/expansion.hpp"
#include "dspp/generator.hpp"
#include "dspp/oracle.hpp"
#include "dspp/solver.hpp"
#include "support.hpp"

namespace dspp {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Problems found while running the suites of other criteria.
struct Ledger {
  std::size_t instances = 0;
  std::size_t structure_failures = 0;
  std::size_t feasible = 0;
  std::size_t witness_failures = 0;
  std::vector<std::string> notes;

  void note(std::string text) {
    if (notes.size() < 5) notes.push_back(std::move(text));
  }

  void check_structure(const UndirectedGraph& g, const Query& q) {
    ++instances;
    const auto x = build_expansion(g, q.s, q.mode);
    auto problems = distance_violations(x);
    const auto order = ordered_components(x, false);
    const auto more = structure_violations(x, order);
    problems.insert(problems.end(), more.begin(), more.end());
    if (!problems.empty()) {
      ++structure_failures;
      note("structure: " + problems.front());
    }
  }

  void check_witness(const UndirectedGraph& g, const Query& q, const Verdict& v) {
    if (!v.feasible) return;
    ++feasible;
    if (!v.witness) {
      ++witness_failures;
      note("feasible verdict without witness");
      return;
    }
    if (auto problem = oracle::validate_solution(g, q, *v.witness)) {
      ++witness_failures;
      note("witness: " + *problem);
    }
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int criterion, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = seconds_since(start);
  failures += !out.pass;
  std::printf("criterion %d %s %s: %s (%.2f s)\n", criterion, out.pass ? "PASS" : "FAIL",
              name.c_str(), out.detail.c_str(), elapsed);
  std::fflush(stdout);
}

SolverOptions solver_options(bool anchored) {
  SolverOptions o;
  o.anchored = anchored;
  o.with_witnesses = true;
  o.check_invariants = false;
  return o;
}

Outcome worked_example(Ledger& ledger) {
  using testing::Example;
  const auto start = Clock::now();
  const auto g = Example::graph();
  const auto q = Example::query();
  const auto x = build_expansion(g, q.s, q.mode);
  const auto order = ordered_components(x);
  std::vector<std::optional<Length>> differences(order.difference);
  const std::vector<std::optional<Length>> want{-1, 0, 0, 0, 1};
  const Verdict v = solve(g, q, solver_options(false));
  const double elapsed = seconds_since(start);
  ledger.check_structure(g, q);
  ledger.check_witness(g, q, v);

  std::string detail = "gadgets=" + std::to_string(x.gadgets.size()) +
                       " |W|=" + std::to_string(x.graph.vertex_count()) +
                       " shared=" + std::to_string(x.count(ArcClass::kShared)) +
                       " first-only=" + std::to_string(x.count(ArcClass::kFirstOnly)) +
                       " second-only=" + std::to_string(x.count(ArcClass::kSecondOnly)) +
                       " zero=" + std::to_string(x.count(ArcClass::kZero)) +
                       " components=" + std::to_string(order.size()) + " differences=";
  for (const auto& d : differences) detail += d ? std::to_string(*d) + "," : "none,";
  bool pass = x.gadgets.size() == 3 && x.graph.vertex_count() == 14 &&
              x.count(ArcClass::kShared) == 11 && x.count(ArcClass::kFirstOnly) == 6 &&
              x.count(ArcClass::kSecondOnly) == 6 && x.count(ArcClass::kZero) == 2 &&
              differences == want && v.feasible && v.witness.has_value() &&
              elapsed < 1.0;
  if (v.witness) {
    const Length l1 = path_length(g, (*v.witness)[0]);
    const Length l2 = path_length(g, (*v.witness)[1]);
    detail += " feasible lengths=(" + std::to_string(l1) + "," + std::to_string(l2) + ")";
    pass = pass && l1 == 3 && l2 == 3 && !oracle::validate_solution(g, q, *v.witness);
  }
  return {pass, detail};
}

// Random instances with n <= 8, zero fractions cycling through 0, 0.3, 1.
std::vector<Instance> random_suite(std::size_t count, DisjointMode mode, std::uint64_t seed) {
  constexpr std::array kZeroFractions{0.0, 0.3, 1.0};
  SplitMix64 rng(seed);
  std::vector<Instance> suite;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng.below(8);
    const std::size_t m = rng.below(n * (n - 1) / 2 + 1);
    suite.push_back(random_instance(n, m, kZeroFractions[i % 3], 5, rng.next(), mode));
  }
  return suite;
}

Outcome oracle_equivalence(DisjointMode mode, Ledger& ledger) {
  const auto start = Clock::now();
  const auto suite = random_suite(1200, mode, mode == DisjointMode::kEdge ? 101 : 202);
  std::size_t agree = 0;
  std::size_t agree_anchored = 0;
  std::size_t feasible = 0;
  for (const auto& inst : suite) {
    const auto& q = inst.queries.front();
    const Verdict want = oracle::brute_force_dspp2(inst.graph, q);
    const Verdict full = solve(inst.graph, q, solver_options(false));
    const Verdict anchored = solve(inst.graph, q, solver_options(true));
    ledger.check_structure(inst.graph, q);
    ledger.check_witness(inst.graph, q, full);
    ledger.check_witness(inst.graph, q, anchored);
    agree += full.feasible == want.feasible;
    agree_anchored += anchored.feasible == want.feasible;
    feasible += want.feasible;
    if (full.feasible != want.feasible) ledger.note("disagreement on\n" + emit_instance(inst));
  }
  const double elapsed = seconds_since(start);
  return {agree == suite.size() && agree_anchored == suite.size() && elapsed < 60.0,
          "agreement " + std::to_string(agree) + "/" + std::to_string(suite.size()) +
              ", anchored " + std::to_string(agree_anchored) + "/" +
              std::to_string(suite.size()) + ", feasible " + std::to_string(feasible)};
}

Outcome zero_length(Ledger& ledger) {
  std::size_t agree = 0;
  std::size_t total = 0;
  for (DisjointMode mode : {DisjointMode::kEdge, DisjointMode::kVertex}) {
    SplitMix64 rng(303 + static_cast<int>(mode));
    for (int i = 0; i < 200; ++i, ++total) {
      const std::size_t n = 1 + rng.below(8);
      const std::size_t m = rng.below(n * (n - 1) / 2 + 1);
      const auto inst = random_instance(n, m, 1.0, 5, rng.next(), mode);
      const auto& q = inst.queries.front();
      const Verdict v = solve(inst.graph, q, solver_options(false));
      ledger.check_structure(inst.graph, q);
      ledger.check_witness(inst.graph, q, v);
      agree += v.feasible == oracle::brute_force_undirected_dpp(inst.graph, q.s, q.t, mode);
    }
  }
  return {agree == total, "agreement " + std::to_string(agree) + "/" + std::to_string(total) +
                              " over both modes"};
}

Outcome mixed_equivalence() {
  std::size_t agree = 0;
  std::size_t total = 0;
  SplitMix64 rng(404);
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 1 + rng.below(6);
    const std::size_t cap = std::min<std::size_t>(8, n * (n - 1) / 2);
    const auto g = random_mixed_graph(n, rng.below(cap + 1), rng.next());
    for (DisjointMode mode : {DisjointMode::kEdge, DisjointMode::kVertex}) {
      ++total;
      MixedDppOptions o;
      o.mode = mode;
      const auto got = disjoint_paths_relation(g, o);
      agree += got.same_entries(oracle::brute_force_mixed_dpp(g, mode)) &&
               !check_witnesses(g, got, mode);
    }
  }
  return {agree == total,
          "exact relation match " + std::to_string(agree) + "/" + std::to_string(total)};
}

Outcome symmetries(Ledger& ledger) {
  const auto suite = random_suite(200, DisjointMode::kEdge, 505);
  SplitMix64 rng(506);
  std::size_t unchanged[3] = {0, 0, 0};
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& inst = suite[i];
    const Query base{inst.queries.front().s, inst.queries.front().t,
                     i % 2 ? DisjointMode::kVertex : DisjointMode::kEdge};
    const auto& g = inst.graph;
    const auto opts = solver_options(false);
    const bool want = solve(g, base, opts).feasible;
    const auto run = [&](const UndirectedGraph& graph, const Query& q) {
      const Verdict v = solve(graph, q, opts);
      ledger.check_structure(graph, q);
      ledger.check_witness(graph, q, v);
      return v.feasible;
    };
    const Query swapped{{base.s.second, base.s.first}, {base.t.second, base.t.first}, base.mode};
    unchanged[0] += run(g, swapped) == want;
    const Query reverse1{{base.t.first, base.s.second}, {base.s.first, base.t.second}, base.mode};
    const Query reverse2{{base.s.first, base.t.second}, {base.t.first, base.s.second}, base.mode};
    unchanged[1] += run(g, reverse1) == want && run(g, reverse2) == want;
    const Length k = static_cast<Length>(rng.between(2, 7));
    std::vector<UndirectedEdge> scaled = g.edges();
    for (auto& e : scaled) e.length *= k;
    unchanged[2] += run(UndirectedGraph(g.vertex_count(), std::move(scaled)), base) == want;
  }
  const std::size_t n = suite.size();
  return {unchanged[0] == n && unchanged[1] == n && unchanged[2] == n,
          "pair swap " + std::to_string(unchanged[0]) + "/" + std::to_string(n) +
              ", reversal " + std::to_string(unchanged[1]) + "/" + std::to_string(n) +
              ", scaling " + std::to_string(unchanged[2]) + "/" + std::to_string(n)};
}

Outcome planted(Ledger& ledger) {
  bool pass = true;
  std::string detail;
  for (std::size_t n : {50, 100, 200}) {
    const auto p = planted_instance(n, 900 + n);
    const auto& q = p.instance.queries.front();
    const auto start = Clock::now();
    const Verdict v = solve(p.instance.graph, q, solver_options(true));
    const double elapsed = seconds_since(start);
    ledger.check_structure(p.instance.graph, q);
    ledger.check_witness(p.instance.graph, q, v);
    const bool valid =
        v.feasible && v.witness && !oracle::validate_solution(p.instance.graph, q, *v.witness);
    pass = pass && valid && elapsed < 30.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%sn=%zu m=%zu %s %.3f s relation=%zu", detail.empty() ? "" : "; ",
                  n, p.instance.graph.edge_count(), valid ? "feasible+valid" : "NOT VALID",
                  elapsed, v.stats.relation_size);
    detail += buf;
  }
  return {pass, detail};
}

}  // namespace
}  // namespace dspp

int main() {
  using namespace dspp;
  Ledger ledger;
  report(1, "worked example", [&] { return worked_example(ledger); });
  report(2, "oracle equivalence, edge mode",
         [&] { return oracle_equivalence(DisjointMode::kEdge, ledger); });
  report(3, "oracle equivalence, vertex mode",
         [&] { return oracle_equivalence(DisjointMode::kVertex, ledger); });
  report(4, "zero-length degeneration", [&] { return zero_length(ledger); });
  report(5, "mixed-graph relation equivalence", [] { return mixed_equivalence(); });
  report(8, "symmetries", [&] { return symmetries(ledger); });
  report(9, "planted instances, anchored", [&] { return planted(ledger); });
  report(6, "structural invariants", [&] {
    return Outcome{ledger.structure_failures == 0,
                   std::to_string(ledger.structure_failures) + " violations over " +
                       std::to_string(ledger.instances) + " expansions"};
  });
  report(7, "witness validity", [&] {
    return Outcome{ledger.witness_failures == 0,
                   std::to_string(ledger.feasible - ledger.witness_failures) + "/" +
                       std::to_string(ledger.feasible) + " feasible verdicts re-validate"};
  });
  for (const auto& n : ledger.notes) std::printf("note: %s\n", n.c_str());
  return failures == 0 ? 0 : 1;
}
