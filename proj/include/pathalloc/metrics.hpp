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

#ifndef PATHALLOC_METRICS_HPP
#define PATHALLOC_METRICS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pathalloc/graph.hpp"
#include "pathalloc/topology.hpp"

namespace pathalloc::metrics {

enum class ArithmeticMode { kExact, kFloat };

/// Path selection and aggregation context for one allocation graph.
class CoverContext {
 public:
  explicit CoverContext(const AllocationGraph& g);

  const AllocationGraph& graph() const { return *graph_; }
  const topo::UndirectedGraph& view() const { return view_; }
  int node_count() const { return view_.n; }

  /// Interface paths for the k shortest node paths between src and dst,
  /// resolved against the graph's actual links. The first j entries are
  /// exactly the j-shortest selection, so per-k sums are prefix sums.
  std::vector<Path> selected_paths(int src, int dst, int k) const;

  /// Aggregate gma allocation over the k shortest paths; 0 when unreachable.
  Rational pair_allocation_sum(int src, int dst, int k) const;
  double pair_allocation_sum_float(int src, int dst, int k) const;

  /// Aggregates for every k in 1..k_max from one path selection.
  std::vector<Rational> prefix_sums(int src, int dst, int k_max) const;
  std::vector<double> prefix_sums_float(int src, int dst, int k_max) const;

  /// Fraction of destinations whose aggregate allocation strictly exceeds
  /// alpha.
  double alpha_cover(int src, const Rational& alpha, int k,
                     ArithmeticMode mode = ArithmeticMode::kExact) const;

 private:
  const AllocationGraph* graph_;
  topo::UndirectedGraph view_;
};

struct CoverStats {
  std::vector<double> per_node;  // indexed by source node
  double min = 0;
  double median = 0;  // lower middle element for even counts
  double max = 0;
};

CoverStats summarize_covers(std::vector<double> covers);

/// Per-node covers plus order statistics. In float mode a handful of pairs
/// is recomputed exactly and compared at 1e-9 relative tolerance; a
/// disagreement throws.
CoverStats graph_cover_stats(const CoverContext& ctx, const Rational& alpha, int k,
                             ArithmeticMode mode = ArithmeticMode::kExact, int threads = 1);

/// Same, for several k at once; the path selection runs once per pair.
std::map<int, CoverStats> graph_cover_stats_multi(const CoverContext& ctx,
                                                  const Rational& alpha, std::vector<int> ks,
                                                  ArithmeticMode mode = ArithmeticMode::kExact,
                                                  int threads = 1);

struct GraphCoverReport {
  std::string graph_id;
  int nodes = 0;
  int diameter = 0;
  double avg_degree = 0;
  Rational alpha;
  std::map<int, CoverStats> by_k;

  /// Relative change of the median cover against single-path selection,
  /// in percent.
  double improvement_percent(int k) const;
};

GraphCoverReport cover_report(const std::string& graph_id, const CoverContext& ctx,
                              const Rational& alpha, const std::vector<int>& ks,
                              ArithmeticMode mode = ArithmeticMode::kExact, int threads = 1);

/// CSV, one row per (graph, node, k): graph, node, degree, k, alpha, cover.
void write_cover_csv(std::ostream& out, const std::vector<GraphCoverReport>& reports,
                     const std::vector<const CoverContext*>& contexts);

/// CSV, one row per (graph, k): graph, nodes, diameter, avg_degree, k,
/// alpha, min, median, max, improvement_vs_k1_pct.
void write_summary_csv(std::ostream& out, const std::vector<GraphCoverReport>& reports);

}  // namespace pathalloc::metrics

#endif  // PATHALLOC_METRICS_HPP
