// Copyright 2026 The pathalloc Authors
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

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pathalloc/json_io.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace pathalloc;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(PATHALLOC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe)) output.append(buffer, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path temp_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("pathalloc_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path fixture_file(const fs::path& dir) {
  const fs::path file = dir / "fixture.json";
  save_graph_file(file.string(), testing::fig_fixture());
  return file;
}

}  // namespace

TEST_CASE("generate is deterministic and idempotent") {
  const fs::path dir = temp_dir("generate");
  const std::string args = "generate --nodes 8,16 --attachment 1,2 --seed 7 --out " + dir.string();
  CHECK(run_cli(args).exit_code == 0);
  std::vector<std::string> first;
  for (int n : {8, 16})
    for (int m : {1, 2})
      first.push_back(read_file(dir / ("ba_n" + std::to_string(n) + "_m" + std::to_string(m) +
                                       "_s7.json")));
  CHECK(run_cli(args).exit_code == 0);
  int i = 0;
  for (int n : {8, 16})
    for (int m : {1, 2})
      CHECK(read_file(dir / ("ba_n" + std::to_string(n) + "_m" + std::to_string(m) +
                             "_s7.json")) == first[i++]);

  // golden pin for the smallest sweep point
  const std::string golden = read_file(fs::path(PATHALLOC_GOLDEN_DIR) / "ba_n8_m1_s7.json");
  CHECK(read_file(dir / "ba_n8_m1_s7.json") == golden);
}

TEST_CASE("generate rejects an oversized attachment") {
  const fs::path dir = temp_dir("generate_bad");
  const RunResult res =
      run_cli("generate --nodes 8 --attachment 32 --seed 1 --out " + dir.string());
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("attachment") != std::string::npos);
}

TEST_CASE("allocate prints the worked example") {
  const fs::path dir = temp_dir("allocate");
  AllocationGraph g = testing::fig_fixture();
  testing::raise_fixture_entry(&g);
  const fs::path file = dir / "raised.json";
  save_graph_file(file.string(), g);
  const RunResult res = run_cli("allocate --graph " + file.string() +
                                " --path B:local-0,A:1-0,A1:0-local");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("GMA: 9/20") != std::string::npos);
  CHECK(res.output.find("argmin index: 3") != std::string::npos);
  CHECK(res.output.find("recursive == direct: yes") != std::string::npos);
}

TEST_CASE("allocate on a single hop prints the pair allocation") {
  const fs::path dir = temp_dir("allocate_single");
  const fs::path file = fixture_file(dir);
  const RunResult res = run_cli("allocate --graph " + file.string() + " --path A1:local-0");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("GMA: 1/1") != std::string::npos);
}

TEST_CASE("allocate reports parse errors with a column") {
  const fs::path dir = temp_dir("allocate_bad");
  const fs::path file = fixture_file(dir);
  const RunResult res = run_cli("allocate --graph " + file.string() + " --path A1:local-0,Azz");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("column 12") != std::string::npos);
  const RunResult missing =
      run_cli("allocate --graph " + file.string() + " --path A1:local-9");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("verify passes the fixture and notes the first-cut overshoot") {
  const fs::path dir = temp_dir("verify");
  const fs::path file = fixture_file(dir);
  const RunResult res = run_cli("verify --graph " + file.string() + " --max-len 6");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("pass\tfixture.validate") != std::string::npos);
  CHECK(res.output.find("a1_over_allocates") != std::string::npos);
  CHECK(res.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify fails a graph that breaks its capacity constraint") {
  const fs::path dir = temp_dir("verify_bad");
  AllocationGraph g = testing::fig_fixture();
  g.set_pair_allocation("B", InterfaceId::external(0), InterfaceId::local(), 1000);
  const fs::path file = dir / "broken.json";
  save_graph_file(file.string(), g);
  const RunResult res = run_cli("verify --graph " + file.string());
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("FAIL") != std::string::npos);
}

TEST_CASE("verify refuses graphs over the node budget") {
  const fs::path dir = temp_dir("verify_budget");
  const fs::path file = fixture_file(dir);
  const RunResult res = run_cli("verify --graph " + file.string() + " --max-nodes 2");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("budget") != std::string::npos);
}

TEST_CASE("verify runs a small random suite clean") {
  const RunResult res = run_cli("verify --suite --graphs 6 --max-nodes 5 --max-len 5 --seed 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("cover writes the two csv reports") {
  const fs::path dir = temp_dir("cover");
  const RunResult gen = run_cli("generate --nodes 12 --attachment 2 --seed 9 --out " + dir.string());
  REQUIRE(gen.exit_code == 0);
  const fs::path graph = dir / "ba_n12_m2_s9.json";
  const RunResult res = run_cli("cover --graphs " + graph.string() +
                                " --alpha 1e-4 --k 1,2,3 --out " + dir.string());
  CHECK(res.exit_code == 0);
  const std::string nodes_csv = read_file(dir / "cover_nodes.csv");
  CHECK(nodes_csv.find("graph,node,degree,k,alpha,cover\n") == 0);
  CHECK(std::count(nodes_csv.begin(), nodes_csv.end(), '\n') == 1 + 3 * 12);
  const std::string summary_csv = read_file(dir / "cover_summary.csv");
  CHECK(summary_csv.rfind("graph,nodes,diameter,avg_degree,k,alpha,min,median,max,"
                          "improvement_vs_k1_pct\n", 0) == 0);

  // exact and float agree at this scale
  const RunResult exact = run_cli("cover --graphs " + graph.string() +
                                  " --alpha 1e-4 --k 1,2,3 --exact --out " + dir.string());
  CHECK(exact.exit_code == 0);
  CHECK(read_file(dir / "cover_nodes.csv") == nodes_csv);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("cover --alpha 1e-4").exit_code == 2);   // missing --graphs
  CHECK(run_cli("nonsense").exit_code == 2);
}
