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

#ifndef PATHALLOC_RANDOM_INPUTS_HPP
#define PATHALLOC_RANDOM_INPUTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathalloc/graph.hpp"
#include "pathalloc/path_view.hpp"
#include "pathalloc/rng.hpp"

// Randomized inputs for the verification suites: small allocation graphs
// whose capacities dominate their matrices by construction, valid walks on
// them, and standalone path views.

namespace pathalloc::oracle {

inline Rational random_rational(Rng& rng, int max_num = 8, int max_den = 4,
                                double zero_probability = 0.0) {
  if (zero_probability > 0 && rng.chance(zero_probability)) return Rational(0);
  return Rational(rng.uniform_int(1, max_num), rng.uniform_int(1, max_den));
}

/// Hop triples sampled directly: div and conv are the pair allocation plus
/// independent non-negative slack, so every view is realizable as on-path
/// data of some allocation matrix.
inline RationalPathView random_view(Rng& rng, std::size_t length,
                                    double zero_probability = 0.0) {
  std::vector<HopView<Rational>> hops;
  hops.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    Rational pair = random_rational(rng, 8, 4, zero_probability);
    Rational div = pair + random_rational(rng, 6, 4, 0.25);
    Rational conv = pair + random_rational(rng, 6, 4, 0.25);
    hops.push_back({pair, div, conv});
  }
  return RationalPathView(std::move(hops));
}

struct RandomGraphOptions {
  int min_nodes = 2;
  int max_nodes = 8;
  int max_external = 3;           // per node
  double zero_probability = 0.2;  // per matrix entry
  double diagonal_probability = 0.15;
  double extra_edge_probability = 0.5;
};

/// Connected random allocation graph. Matrices are filled first; every link
/// capacity is then set to the larger of the two sums it must dominate plus
/// slack, so the result always validates.
inline AllocationGraph random_small_graph(Rng& rng, const RandomGraphOptions& opt = {}) {
  const int n = rng.uniform_int(opt.min_nodes, opt.max_nodes);

  // Spanning tree plus optional extra edges under the per-node degree cap.
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(n, 0);
  for (int v = 1; v < n; ++v) {
    int tries = 0;
    while (true) {
      const int u = rng.uniform_int(0, v - 1);
      if (degree[u] < opt.max_external || ++tries > 64) {
        edges.push_back({u, v});
        ++degree[u];
        ++degree[v];
        break;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (degree[u] >= opt.max_external || degree[v] >= opt.max_external) continue;
      bool present = false;
      for (auto& e : edges) present |= (e.first == u && e.second == v);
      if (present || !rng.chance(opt.extra_edge_probability * 0.3)) continue;
      edges.push_back({u, v});
      ++degree[u];
      ++degree[v];
    }
  }

  AllocationGraph g;
  std::vector<int> next_iface(n, 0);
  for (int v = 0; v < n; ++v) g.add_node("n" + std::to_string(v), degree[v]);
  std::vector<std::pair<InterfaceId, InterfaceId>> edge_ifaces;
  edge_ifaces.reserve(edges.size());
  for (auto& [u, v] : edges)
    edge_ifaces.push_back(
        {InterfaceId::external(next_iface[u]++), InterfaceId::external(next_iface[v]++)});

  for (int v = 0; v < n; ++v) {
    const std::string id = "n" + std::to_string(v);
    std::vector<InterfaceId> ifaces{InterfaceId::local()};
    for (int i = 0; i < degree[v]; ++i) ifaces.push_back(InterfaceId::external(i));
    for (InterfaceId in : ifaces) {
      for (InterfaceId out : ifaces) {
        if (in.is_local() && out.is_local()) continue;
        if (in == out && !in.is_local() && !rng.chance(opt.diagonal_probability)) continue;
        g.set_pair_allocation(id, in, out, random_rational(rng, 8, 4, opt.zero_probability));
      }
    }
  }

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string u = "n" + std::to_string(edges[e].first);
    const std::string v = "n" + std::to_string(edges[e].second);
    const auto [iu, iv] = edge_ifaces[e];
    Rational cap_uv = g.convergent(u, iu);
    if (g.divergent(v, iv) > cap_uv) cap_uv = g.divergent(v, iv);
    Rational cap_vu = g.convergent(v, iv);
    if (g.divergent(u, iu) > cap_vu) cap_vu = g.divergent(u, iu);
    cap_uv += random_rational(rng, 4, 2, 0.5) + Rational(1, 100);
    cap_vu += random_rational(rng, 4, 2, 0.5) + Rational(1, 100);
    g.add_link({u, iu}, {v, iv}, cap_uv, cap_vu);
  }
  return g;
}

/// Random walk from a local interface until it exits at a local interface,
/// following positive entries only. Empty when no valid terminated walk was
/// found within the attempt budget.
inline std::optional<Path> random_valid_terminated_path(Rng& rng, const AllocationGraph& g,
                                                        std::size_t max_length = 10,
                                                        int attempts = 200) {
  const auto local = InterfaceId::local();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const std::string start = g.node_id(rng.uniform_int(0, g.node_count() - 1));
    Path path;
    std::string node = start;
    InterfaceId in = local;
    bool ok = false;
    while (path.size() < max_length) {
      std::vector<InterfaceId> outs;
      for (int j = 0; j < g.external_interfaces(node); ++j) {
        InterfaceId cand = InterfaceId::external(j);
        if (g.pair_allocation(node, in, cand) > 0 && g.has_link_at(node, cand))
          outs.push_back(cand);
      }
      if (g.pair_allocation(node, in, local) > 0 && (outs.empty() || rng.chance(0.35))) {
        path.push_back({node, in, local});
        ok = true;
        break;
      }
      if (outs.empty()) break;
      InterfaceId out = outs[rng.uniform_int(0, static_cast<int>(outs.size()) - 1)];
      path.push_back({node, in, out});
      const LinkEnd far = g.peer(node, out);
      node = far.node;
      in = far.iface;
    }
    if (ok) {
      const PathClass cls = g.classify_path(path);
      if (cls.terminated && cls.valid) return path;
    }
  }
  return std::nullopt;
}

}  // namespace pathalloc::oracle

#endif  // PATHALLOC_RANDOM_INPUTS_HPP
