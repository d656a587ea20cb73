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

// Batch front-end: generate topologies, compute allocations on given paths,
// run the verification suites, and produce cover reports.
//
// Exit codes: 0 success, 1 property failure, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pathalloc/allocators.hpp"
#include "pathalloc/audit.hpp"
#include "pathalloc/enumerate.hpp"
#include "pathalloc/json_io.hpp"
#include "pathalloc/metrics.hpp"
#include "pathalloc/oracle.hpp"
#include "pathalloc/random_inputs.hpp"
#include "pathalloc/path_view.hpp"
#include "pathalloc/reservation.hpp"
#include "pathalloc/rng.hpp"
#include "pathalloc/saturation.hpp"
#include "pathalloc/topology.hpp"

namespace fs = std::filesystem;
using namespace pathalloc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string default_out_dir() {
  const char* env = std::getenv("PATHALLOC_OUT");
  return env ? env : ".";
}

// Exact decimal or rational parser for thresholds: "1/10000", "0.0001",
// "1e-4" all become the same rational.
Rational parse_positive_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    Rational r = parse_resource(text);
    if (r <= 0) throw UsageError("value must be positive: " + text);
    return r;
  }
  std::string digits = text;
  long long exponent = 0;
  if (auto e = digits.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stoll(digits.substr(e + 1));
    digits = digits.substr(0, e);
  }
  if (auto dot = digits.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long long>(digits.size() - dot - 1);
    digits.erase(dot, 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("not a number: " + text);
  Rational r{BigInt(digits)};
  for (long long i = 0; i < exponent; ++i) r *= 10;
  for (long long i = 0; i > exponent; --i) r /= 10;
  if (r <= 0) throw UsageError("value must be positive: " + text);
  return r;
}

void atomic_write(const fs::path& target, const std::string& content) {
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

// ---------------------------------------------------------------------------
// generate

int cmd_generate(const std::vector<int>& nodes, const std::vector<int>& attachments,
                 std::uint64_t seed, const std::string& out_dir, int jobs) {
  struct Point {
    topo::TopologyConfig config;
    fs::path file;
  };
  std::vector<Point> points;
  for (int n : nodes) {
    for (int m : attachments) {
      topo::TopologyConfig config;
      config.node_count = n;
      config.attachment = m;
      config.seed = mix_seed(seed, (static_cast<std::uint64_t>(n) << 16) | static_cast<std::uint64_t>(m));
      try {
        config.validate();
      } catch (const std::exception& e) {
        throw UsageError("sweep point nodes=" + std::to_string(n) +
                         " attachment=" + std::to_string(m) + ": " + e.what());
      }
      std::ostringstream name;
      name << "ba_n" << n << "_m" << m << "_s" << seed << ".json";
      points.push_back({config, fs::path(out_dir) / name.str()});
    }
  }
  fs::create_directories(out_dir);

  std::atomic<int> failures{0};
  auto run_point = [&](const Point& point) {
    try {
      const topo::UndirectedGraph ba = topo::generate_ba(point.config);
      const topo::CapacitatedGraph cg = topo::assign_capacities(ba, point.config);
      AllocationGraph g = topo::proportional_sharing_matrices(cg);
      if (!g.validate().empty()) throw std::runtime_error("generated graph does not validate");
      Json meta = topo::topology_metadata(point.config, cg);
      meta["base_seed"] = seed;
      meta["seed_mixing"] = "splitmix64(base_seed, node_count << 16 | attachment)";
      atomic_write(point.file, graph_to_string(g, NumberMode::kExact, meta));
      std::cout << "wrote " << point.file.string() << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << point.file.string() << ": " << e.what() << "\n";
      ++failures;
    }
  };

  if (jobs <= 1) {
    for (const Point& p : points) run_point(p);
  } else {
    std::vector<std::future<void>> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < jobs; ++t) {
      pool.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) run_point(points[i]);
      }));
    }
    for (auto& f : pool) f.get();
  }
  return failures == 0 ? kExitOk : kExitPropertyFailure;
}

// ---------------------------------------------------------------------------
// allocate

Path parse_path_spec(const std::string& spec) {
  Path path;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t end = std::min(spec.find(',', pos), spec.size());
    const std::string hop_text = spec.substr(pos, end - pos);
    const std::size_t colon = hop_text.find(':');
    const std::size_t dash = hop_text.find('-', colon == std::string::npos ? 0 : colon + 1);
    if (hop_text.empty() || colon == std::string::npos || dash == std::string::npos)
      throw UsageError("bad hop '" + hop_text + "' at column " + std::to_string(pos + 1) +
                       " (expected node:in-out)");
    try {
      path.push_back({hop_text.substr(0, colon),
                      InterfaceId::parse(hop_text.substr(colon + 1, dash - colon - 1)),
                      InterfaceId::parse(hop_text.substr(dash + 1))});
    } catch (const std::exception& e) {
      throw UsageError(std::string(e.what()) + " at column " + std::to_string(pos + 1));
    }
    if (end == spec.size()) break;
    pos = end + 1;
  }
  if (path.empty()) throw UsageError("empty path spec");
  return path;
}

int cmd_allocate(const std::string& graph_file, const std::string& path_spec) {
  const AllocationGraph g = load_graph_file(graph_file);
  const Path path = parse_path_spec(path_spec);
  const RationalPathView view = make_path_view(g, path);

  auto show = [](const Rational& r) {
    return format_resource(r) + " (" + std::to_string(to_double(r)) + ")";
  };
  const AllocationTrace<Rational> direct = gma_direct(view);
  const AllocationTrace<Rational> recursive = gma_recursive(view);

  std::cout << "hops: " << path.size() << "\n";
  std::cout << "A1:  " << show(alloc_a1(view)) << "\n";
  std::cout << "A2:  " << show(alloc_a2(view)) << "\n";
  std::cout << "GMA: " << show(direct.value) << "\n";
  std::cout << "argmin index: " << direct.argmin_index << " (node "
            << path[direct.argmin_index - 1].node << ")\n";
  std::cout << "scaling factors:";
  for (const Rational& f : direct.scaling_factors) std::cout << ' ' << format_resource(f);
  std::cout << "\nprefix allocations:";
  for (const Rational& p : direct.prefix_allocs) std::cout << ' ' << format_resource(p);
  std::cout << "\nrecursive == direct: " << (recursive.value == direct.value ? "yes" : "NO")
            << "\n";
  return recursive.value == direct.value ? kExitOk : kExitPropertyFailure;
}

// ---------------------------------------------------------------------------
// verify

struct CheckLog {
  int failures = 0;

  void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "pass" : "FAIL") << '\t' << name;
    if (!detail.empty()) std::cout << '\t' << detail;
    std::cout << "\n";
    if (!pass) ++failures;
  }
};

void verify_one_graph(const AllocationGraph& g, const std::string& label, int max_len,
                      std::uint64_t seed, CheckLog& log) {
  using oracle::AllocatorKind;
  const auto violations = g.validate();
  log.report(label + ".validate", violations.empty(),
             violations.empty() ? "" : violations.front().describe());
  if (!violations.empty()) return;

  const auto anchored = oracle::anchored_sum_audit(g, AllocatorKind::kGma, max_len);
  bool anchored_ok = true;
  for (const auto& row : anchored) anchored_ok &= !row.over_allocated;
  log.report(label + ".gma_anchored_bound", anchored_ok);

  const auto gma_audit = oracle::audit_over_allocation(g, AllocatorKind::kGma, max_len);
  log.report(label + ".gma_no_over_allocation", !gma_audit.any_over_allocated());
  const auto a2_audit = oracle::audit_over_allocation(g, AllocatorKind::kA2, max_len);
  log.report(label + ".a2_no_over_allocation", !a2_audit.any_over_allocated());
  const auto a1_audit = oracle::audit_over_allocation(g, AllocatorKind::kA1, max_len);
  const auto a1_over = a1_audit.over_allocated_pairs();
  if (!a1_over.empty()) {
    // Informational: the first-cut allocator is expected to overshoot.
    std::cout << "info\t" << label << ".a1_over_allocates\t" << a1_over.size()
              << " pair(s), e.g. node " << a1_over.front()->node << " ("
              << a1_over.front()->in.str() << "," << a1_over.front()->out.str() << ")\n";
  }

  // Allocator route agreement on every terminated path up to a short bound.
  bool equal_routes = true;
  oracle::EnumFilters filters;
  filters.valid_only = true;
  oracle::enumerate_paths(g, std::min(max_len, 6), oracle::EnumMode::kTerminatedUpTo, filters,
                          [&](const Path& p) {
                            const RationalPathView view = make_path_view(g, p);
                            const Rational direct = gma_direct(view).value;
                            equal_routes &= direct == gma_recursive(view).value;
                            equal_routes &= direct == reference::gma_min_form(view).first;
                            const auto res = sim::run_reservation(g, p, Rational(0));
                            equal_routes &= res.granted() && res.value == direct;
                          });
  log.report(label + ".gma_route_agreement", equal_routes);

  // Saturation witness on a sampled valid terminated path, when one exists.
  Rng rng(seed);
  std::optional<Path> sat_path;
  for (int attempt = 0; attempt < 50 && !sat_path; ++attempt) {
    auto paths = oracle::collect_paths(g, 4, oracle::EnumMode::kTerminatedUpTo, filters);
    for (const Path& p : paths) {
      if (g.classify_path(p).valid && p.size() > 1) {
        sat_path = p;
        break;
      }
    }
    break;
  }
  if (sat_path) {
    bool sat_ok = false;
    std::string detail;
    try {
      const auto sg = oracle::build_saturating_graph(g, *sat_path);
      sat_ok = oracle::check_saturation(sg, 2 * sg.graph.node_count() + 2) == 1;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    log.report(label + ".saturation_exact", sat_ok, detail);
  }

  // Monotonicity trials on simple paths.
  bool mono_ok = true;
  int mono_trials = 0;
  auto paths = oracle::collect_paths(g, std::min(max_len, 5),
                                     oracle::EnumMode::kTerminatedUpTo, filters);
  for (const Path& p : paths) {
    if (mono_trials >= 25) break;
    if (!g.classify_path(p).simple) continue;
    const std::size_t hop = rng.uniform(0, p.size() - 1);
    const auto check = oracle::check_monotonicity(g, p, hop, oracle::random_rational(rng, 6, 3));
    mono_ok &= check.ok;
    ++mono_trials;
  }
  if (mono_trials > 0) log.report(label + ".monotonic_under_raises", mono_ok);
}

int cmd_verify(const std::optional<std::string>& graph_file, bool suite, int max_nodes,
               int max_len, int graph_count, std::uint64_t seed) {
  CheckLog log;
  if (graph_file) {
    const AllocationGraph g = load_graph_file(*graph_file);
    if (g.node_count() > max_nodes)
      throw UsageError("graph has " + std::to_string(g.node_count()) +
                       " nodes, over the --max-nodes budget of " + std::to_string(max_nodes) +
                       "; raise the budget explicitly to proceed");
    verify_one_graph(g, fs::path(*graph_file).stem().string(), max_len, seed, log);
  }
  if (suite) {
    Rng rng(seed);
    for (int i = 0; i < graph_count; ++i) {
      oracle::RandomGraphOptions opt;
      opt.max_nodes = max_nodes;
      AllocationGraph g = oracle::random_small_graph(rng, opt);
      verify_one_graph(g, "random" + std::to_string(i), max_len, rng.next(), log);
    }
  }
  std::cout << (log.failures == 0 ? "verify: all checks passed\n"
                                  : "verify: " + std::to_string(log.failures) + " failure(s)\n");
  return log.failures == 0 ? kExitOk : kExitPropertyFailure;
}

// ---------------------------------------------------------------------------
// cover

int cmd_cover(const std::vector<std::string>& graph_files, const std::string& alpha_text,
              std::vector<int> ks, const std::string& out_dir, bool exact, int jobs) {
  const Rational alpha = parse_positive_rational(alpha_text);
  if (ks.empty()) ks = {1, 2, 3};
  std::sort(ks.begin(), ks.end());
  for (int k : ks)
    if (k < 1 || k > 3) throw UsageError("k must be in 1..3");

  fs::create_directories(out_dir);
  std::vector<metrics::GraphCoverReport> reports;
  std::vector<std::unique_ptr<metrics::CoverContext>> contexts;
  std::vector<std::unique_ptr<AllocationGraph>> graphs;
  std::vector<const metrics::CoverContext*> context_ptrs;

  for (const std::string& file : graph_files) {
    graphs.push_back(std::make_unique<AllocationGraph>(load_graph_file(file)));
    contexts.push_back(std::make_unique<metrics::CoverContext>(*graphs.back()));
    reports.push_back(metrics::cover_report(
        fs::path(file).stem().string(), *contexts.back(), alpha, ks,
        exact ? metrics::ArithmeticMode::kExact : metrics::ArithmeticMode::kFloat, jobs));
    context_ptrs.push_back(contexts.back().get());
    std::cout << "covered " << file << "\n";
  }

  std::ostringstream nodes_csv;
  metrics::write_cover_csv(nodes_csv, reports, context_ptrs);
  atomic_write(fs::path(out_dir) / "cover_nodes.csv", nodes_csv.str());
  std::ostringstream summary_csv;
  metrics::write_summary_csv(summary_csv, reports);
  atomic_write(fs::path(out_dir) / "cover_summary.csv", summary_csv.str());
  std::cout << "wrote " << (fs::path(out_dir) / "cover_nodes.csv").string() << "\n";
  std::cout << "wrote " << (fs::path(out_dir) / "cover_summary.csv").string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gma path allocations on allocation graphs"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "generate scale-free allocation graphs");
  std::vector<int> gen_nodes{64};
  std::vector<int> gen_attachment{2};
  std::uint64_t gen_seed = 1;
  std::string gen_out = default_out_dir();
  int gen_jobs = 1;
  generate->add_option("--nodes", gen_nodes, "node counts (repeat or comma-separate)")
      ->delimiter(',');
  generate->add_option("--attachment", gen_attachment, "attachment degrees")->delimiter(',');
  generate->add_option("--seed", gen_seed, "base seed");
  generate->add_option("--out", gen_out, "output directory (default $PATHALLOC_OUT or .)");
  generate->add_option("--jobs", gen_jobs, "parallel sweep workers");

  // allocate
  auto* allocate = app.add_subcommand("allocate", "evaluate allocators on one path");
  std::string alloc_graph, alloc_path;
  allocate->add_option("--graph", alloc_graph, "graph file")->required();
  allocate->add_option("--path", alloc_path, "path spec node:in-out,node:in-out,...")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  std::string verify_graph;
  bool verify_suite = false;
  int verify_max_nodes = 8, verify_max_len = 8, verify_graphs = 20;
  std::uint64_t verify_seed = 1;
  verify->add_option("--graph", verify_graph, "graph file to verify");
  verify->add_flag("--suite", verify_suite, "run the randomized property suite");
  verify->add_option("--max-nodes", verify_max_nodes, "node budget for oracle runs");
  verify->add_option("--max-len", verify_max_len, "path length budget for oracle runs");
  verify->add_option("--graphs", verify_graphs, "number of random graphs in the suite");
  verify->add_option("--seed", verify_seed, "suite seed");

  // cover
  auto* cover = app.add_subcommand("cover", "alpha-cover reports over graph files");
  std::vector<std::string> cover_graphs;
  std::string cover_alpha = "1/10000";
  std::vector<int> cover_k{1, 2, 3};
  std::string cover_out = default_out_dir();
  bool cover_exact = false;
  int cover_jobs = 1;
  cover->add_option("--graphs", cover_graphs, "graph files")->required()->expected(-1);
  cover->add_option("--alpha", cover_alpha, "cover threshold (rational or decimal)");
  cover->add_option("--k", cover_k, "path counts to evaluate")->delimiter(',');
  cover->add_option("--out", cover_out, "output directory (default $PATHALLOC_OUT or .)");
  cover->add_flag("--exact", cover_exact, "exact arithmetic instead of float");
  cover->add_option("--jobs", cover_jobs, "parallel per-source workers");

  try {
    app.parse(argc, argv);
    if (generate->parsed())
      return cmd_generate(gen_nodes, gen_attachment, gen_seed, gen_out, gen_jobs);
    if (allocate->parsed()) return cmd_allocate(alloc_graph, alloc_path);
    if (verify->parsed()) {
      if (verify_graph.empty() && !verify_suite)
        throw UsageError("verify needs --graph and/or --suite");
      return cmd_verify(verify_graph.empty() ? std::nullopt : std::optional(verify_graph),
                        verify_suite, verify_max_nodes, verify_max_len, verify_graphs,
                        verify_seed);
    }
    if (cover->parsed())
      return cmd_cover(cover_graphs, cover_alpha, cover_k, cover_out, cover_exact, cover_jobs);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedPathError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitUsage;
}
