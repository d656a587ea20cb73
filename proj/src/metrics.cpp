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

#include "pathalloc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>

#include "pathalloc/allocators.hpp"
#include "pathalloc/path_view.hpp"

namespace pathalloc::metrics {

CoverContext::CoverContext(const AllocationGraph& g)
    : graph_(&g), view_(topo::undirected_view(g)) {}

std::vector<Path> CoverContext::selected_paths(int src, int dst, int k) const {
  std::vector<Path> out;
  for (const std::vector<int>& nodes : topo::k_shortest_node_paths(view_, src, dst, k)) {
    Path path;
    path.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::string& id = graph_->node_id(nodes[i]);
      InterfaceId in = InterfaceId::local();
      InterfaceId out_iface = InterfaceId::local();
      if (i > 0) {
        const std::string& prev = graph_->node_id(nodes[i - 1]);
        const Link* l = graph_->find_link(id, prev);
        in = l->a.node == id ? l->a.iface : l->b.iface;
      }
      if (i + 1 < nodes.size()) {
        const std::string& next = graph_->node_id(nodes[i + 1]);
        const Link* l = graph_->find_link(id, next);
        out_iface = l->a.node == id ? l->a.iface : l->b.iface;
      }
      path.push_back({id, in, out_iface});
    }
    out.push_back(std::move(path));
  }
  return out;
}

Rational CoverContext::pair_allocation_sum(int src, int dst, int k) const {
  Rational total(0);
  for (const Path& path : selected_paths(src, dst, k))
    total += gma_value(make_path_view(*graph_, path));
  return total;
}

double CoverContext::pair_allocation_sum_float(int src, int dst, int k) const {
  double total = 0;
  for (const Path& path : selected_paths(src, dst, k))
    total += gma_value(to_float_view(make_path_view(*graph_, path)));
  return total;
}

std::vector<Rational> CoverContext::prefix_sums(int src, int dst, int k_max) const {
  std::vector<Rational> sums;
  Rational total(0);
  const auto paths = selected_paths(src, dst, k_max);
  for (int k = 1; k <= k_max; ++k) {
    if (static_cast<std::size_t>(k) <= paths.size())
      total += gma_value(make_path_view(*graph_, paths[k - 1]));
    sums.push_back(total);
  }
  return sums;
}

std::vector<double> CoverContext::prefix_sums_float(int src, int dst, int k_max) const {
  std::vector<double> sums;
  double total = 0;
  const auto paths = selected_paths(src, dst, k_max);
  for (int k = 1; k <= k_max; ++k) {
    if (static_cast<std::size_t>(k) <= paths.size())
      total += gma_value(to_float_view(make_path_view(*graph_, paths[k - 1])));
    sums.push_back(total);
  }
  return sums;
}

double CoverContext::alpha_cover(int src, const Rational& alpha, int k,
                                 ArithmeticMode mode) const {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  const int n = node_count();
  if (n < 2) throw std::invalid_argument("cover needs at least two nodes");
  const double alpha_f = to_double(alpha);
  int covered = 0;
  for (int dst = 0; dst < n; ++dst) {
    if (dst == src) continue;
    if (mode == ArithmeticMode::kExact) {
      if (pair_allocation_sum(src, dst, k) > alpha) ++covered;
    } else {
      if (pair_allocation_sum_float(src, dst, k) > alpha_f) ++covered;
    }
  }
  return static_cast<double>(covered) / (n - 1);
}

CoverStats summarize_covers(std::vector<double> covers) {
  CoverStats stats;
  stats.per_node = covers;
  std::sort(covers.begin(), covers.end());
  stats.min = covers.front();
  stats.max = covers.back();
  stats.median = covers[(covers.size() - 1) / 2];
  return stats;
}

namespace {

// Float results drifting from the exact values would silently corrupt a
// whole sweep, so a few pairs per graph are recomputed exactly.
void spot_check_float(const CoverContext& ctx, int k) {
  const int n = ctx.node_count();
  const int checks = std::min(5, n - 1);
  for (int i = 1; i <= checks; ++i) {
    const int dst = (i * 7919) % n;
    if (dst == 0) continue;
    const double exact = to_double(ctx.pair_allocation_sum(0, dst, k));
    const double approx = ctx.pair_allocation_sum_float(0, dst, k);
    if (exact == 0.0 && approx == 0.0) continue;
    if (std::abs(approx - exact) > 1e-9 * std::max(std::abs(exact), 1e-300))
      throw std::runtime_error("float cover drifted from exact arithmetic");
  }
}

}  // namespace

CoverStats graph_cover_stats(const CoverContext& ctx, const Rational& alpha, int k,
                             ArithmeticMode mode, int threads) {
  const int n = ctx.node_count();
  if (mode == ArithmeticMode::kFloat) spot_check_float(ctx, k);
  std::vector<double> covers(n);
  if (threads <= 1) {
    for (int src = 0; src < n; ++src) covers[src] = ctx.alpha_cover(src, alpha, k, mode);
  } else {
    // Per-source computations are independent; chunk them across a small
    // pool of async workers.
    std::vector<std::future<void>> work;
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      work.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (int src = lo; src < hi; ++src) covers[src] = ctx.alpha_cover(src, alpha, k, mode);
      }));
    }
    for (auto& f : work) f.get();
  }
  return summarize_covers(std::move(covers));
}

std::map<int, CoverStats> graph_cover_stats_multi(const CoverContext& ctx, const Rational& alpha,
                                                  std::vector<int> ks, ArithmeticMode mode,
                                                  int threads) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (ks.empty()) throw std::invalid_argument("need at least one k");
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  const int k_max = ks.back();
  const int n = ctx.node_count();
  if (n < 2) throw std::invalid_argument("cover needs at least two nodes");
  if (mode == ArithmeticMode::kFloat) spot_check_float(ctx, k_max);
  const double alpha_f = to_double(alpha);

  std::vector<std::vector<double>> covers(ks.size(), std::vector<double>(n, 0));
  auto one_source = [&](int src) {
    std::vector<int> covered(ks.size(), 0);
    for (int dst = 0; dst < n; ++dst) {
      if (dst == src) continue;
      if (mode == ArithmeticMode::kExact) {
        const auto sums = ctx.prefix_sums(src, dst, k_max);
        for (std::size_t i = 0; i < ks.size(); ++i)
          if (sums[ks[i] - 1] > alpha) ++covered[i];
      } else {
        const auto sums = ctx.prefix_sums_float(src, dst, k_max);
        for (std::size_t i = 0; i < ks.size(); ++i)
          if (sums[ks[i] - 1] > alpha_f) ++covered[i];
      }
    }
    for (std::size_t i = 0; i < ks.size(); ++i)
      covers[i][src] = static_cast<double>(covered[i]) / (n - 1);
  };

  if (threads <= 1) {
    for (int src = 0; src < n; ++src) one_source(src);
  } else {
    std::vector<std::future<void>> work;
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      work.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (int src = lo; src < hi; ++src) one_source(src);
      }));
    }
    for (auto& f : work) f.get();
  }

  std::map<int, CoverStats> out;
  for (std::size_t i = 0; i < ks.size(); ++i) out[ks[i]] = summarize_covers(covers[i]);
  return out;
}

double GraphCoverReport::improvement_percent(int k) const {
  const auto base = by_k.find(1);
  const auto cur = by_k.find(k);
  if (base == by_k.end() || cur == by_k.end()) throw std::invalid_argument("missing k in report");
  if (base->second.median == 0) return cur->second.median == 0 ? 0 : HUGE_VAL;
  return (cur->second.median - base->second.median) / base->second.median * 100.0;
}

GraphCoverReport cover_report(const std::string& graph_id, const CoverContext& ctx,
                              const Rational& alpha, const std::vector<int>& ks,
                              ArithmeticMode mode, int threads) {
  GraphCoverReport report;
  report.graph_id = graph_id;
  report.nodes = ctx.node_count();
  report.diameter = ctx.view().diameter();
  report.avg_degree = ctx.view().average_degree();
  report.alpha = alpha;
  report.by_k = graph_cover_stats_multi(ctx, alpha, ks, mode, threads);
  return report;
}

void write_cover_csv(std::ostream& out, const std::vector<GraphCoverReport>& reports,
                     const std::vector<const CoverContext*>& contexts) {
  out << "graph,node,degree,k,alpha,cover\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const GraphCoverReport& r = reports[i];
    for (const auto& [k, stats] : r.by_k) {
      for (std::size_t v = 0; v < stats.per_node.size(); ++v) {
        out << r.graph_id << ',' << contexts[i]->graph().node_id(static_cast<int>(v)) << ','
            << contexts[i]->view().degree(static_cast<int>(v)) << ',' << k << ','
            << to_double(r.alpha) << ',' << stats.per_node[v] << '\n';
      }
    }
  }
}

void write_summary_csv(std::ostream& out, const std::vector<GraphCoverReport>& reports) {
  out << "graph,nodes,diameter,avg_degree,k,alpha,min,median,max,improvement_vs_k1_pct\n";
  for (const GraphCoverReport& r : reports) {
    for (const auto& [k, stats] : r.by_k) {
      out << r.graph_id << ',' << r.nodes << ',' << r.diameter << ',' << r.avg_degree << ','
          << k << ',' << to_double(r.alpha) << ',' << stats.min << ',' << stats.median << ','
          << stats.max << ',' << (r.by_k.count(1) ? r.improvement_percent(k) : 0.0) << '\n';
    }
  }
}

}  // namespace pathalloc::metrics
