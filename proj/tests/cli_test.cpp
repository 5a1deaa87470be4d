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

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dspp/instance.hpp"
#include "dspp/oracle.hpp"
#include "support.hpp"

namespace dspp {
namespace {

using testing::Example;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dspp2");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    path_ = std::filesystem::temp_directory_path() /
            ("dspp_cli_" + std::to_string(counter_++) + "_" +
             std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + ".txt");
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

std::string example_text() {
  return emit_instance(Instance{Example::graph(), {Example::query()}, DisjointMode::kEdge});
}

Path path_from_json(const nlohmann::json& j) {
  Path p;
  for (std::size_t v : j.at("vertices")) p.vertices.push_back(static_cast<VertexId>(v - 1));
  for (std::size_t e : j.at("edges")) p.edges.push_back(static_cast<EdgeId>(e - 1));
  return p;
}

TEST(Cli, SolveJsonWitnessRevalidates) {
  const TempFile file(example_text());
  for (const char* mode : {"edge", "vertex"}) {
    const auto r = invoke({"solve", "--input", file.path(), "--json", "--witness",
                           "--mode", mode});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("vertices"), 8);
    EXPECT_EQ(doc.at("mode"), mode);
    const auto& result = doc.at("results").at(0);
    EXPECT_EQ(result.at("distance1"), 3);
    EXPECT_EQ(result.at("distance2"), 3);
    if (!result.at("feasible").get<bool>()) continue;
    const std::array<Path, 2> paths{path_from_json(result.at("witness")[0]),
                                    path_from_json(result.at("witness")[1])};
    const Query q = Example::query(std::string(mode) == "edge" ? DisjointMode::kEdge
                                                            : DisjointMode::kVertex);
    EXPECT_EQ(oracle::validate_solution(Example::graph(), q, paths), std::nullopt);
  }
}

TEST(Cli, SolveAndOracleAgreeOnText) {
  const TempFile file(example_text());
  const auto solved = invoke({"solve", "--input", file.path()});
  const auto brute = invoke({"oracle", "--input", file.path()});
  ASSERT_EQ(solved.code, 0);
  ASSERT_EQ(brute.code, 0);
  EXPECT_EQ(solved.out, "query 1: feasible d1=3 d2=3\n");
  EXPECT_EQ(solved.out, brute.out);
}

TEST(Cli, GenIsDeterministic) {
  const std::vector<std::string> args{"gen", "--n", "12", "--m", "20", "--zero-frac",
                                      "0.3", "--seed", "77"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto inst = parse_instance(a.out);
  EXPECT_EQ(inst.graph.vertex_count(), 12U);
  EXPECT_EQ(inst.graph.edge_count(), 20U);
  auto other = args;
  other.back() = "78";
  EXPECT_NE(invoke(other).out, a.out);
}

TEST(Cli, PlantedIsFeasible) {
  const auto gen = invoke({"planted", "--n", "30", "--seed", "5"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const TempFile file(gen.out);
  const auto r = invoke({"solve", "--input", file.path(), "--anchored"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("query 1: feasible", 0), 0U) << r.out;
}

TEST(Cli, Successors) {
  const TempFile file(emit_instance(Instance{testing::path_graph(3), {}, DisjointMode::kEdge}));
  const auto r = invoke({"successors", "--input", file.path(), "--s1", "1", "--s2", "3",
                         "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& sinks = doc.at(0).at("sinks");
  EXPECT_NE(std::find(sinks.begin(), sinks.end(), nlohmann::json({2, 2})), sinks.end());
  EXPECT_EQ(invoke({"successors", "--input", file.path()}).code, 2);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(invoke({"solve", "--input", "/nonexistent/dspp.txt"}).code, 2);
  const TempFile bad("p dspp 2 1\ne 1 1 3\n");
  const auto r = invoke({"solve", "--input", bad.path()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2: self-loop at vertex 1"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  const TempFile good(example_text());
  EXPECT_EQ(invoke({"solve", "--input", good.path(), "--mode", "both"}).code, 2);
  EXPECT_EQ(invoke({"planted", "--n", "3"}).code, 2);
}

TEST(Cli, SelftestReportsAgreement) {
  const auto r = invoke({"selftest", "--instances", "60", "--max-n", "6", "--seed", "9"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "solver/oracle agreement 60/60\n");
}

TEST(Cli, BenchWritesCsv) {
  const auto r = invoke({"bench", "--sizes", "20,30", "--anchored"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "instance,n,m,seed,feasible,component,vertices,entries,seconds");
  std::size_t totals = 0;
  while (std::getline(lines, line)) totals += line.find(",all,") != std::string::npos;
  EXPECT_EQ(totals, 2U);
}

}  // namespace
}  // namespace dspp
