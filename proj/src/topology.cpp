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

#include "pathalloc/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pathalloc/rng.hpp"

namespace pathalloc::topo {

void TopologyConfig::validate() const {
  if (node_count < 8 || node_count > 2048)
    throw std::invalid_argument("node_count must be in 8..2048");
  if (attachment < 1 || attachment > 32)
    throw std::invalid_argument("attachment must be in 1..32");
  if (attachment >= node_count)
    throw std::invalid_argument("attachment must be smaller than node_count");
  if (k_paths < 1 || k_paths > 3) throw std::invalid_argument("k_paths must be in 1..3");
  if (capacity_levels.empty()) throw std::invalid_argument("capacity_levels must be non-empty");
  for (int level : capacity_levels)
    if (level <= 0) throw std::invalid_argument("capacity_levels must be positive");
}

void UndirectedGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-edge");
  if (u > v) std::swap(u, v);
  const int idx = static_cast<int>(edges.size());
  edges.push_back({u, v});
  if (static_cast<int>(adj.size()) < n) adj.resize(n);
  adj[u].push_back({v, idx});
  adj[v].push_back({u, idx});
}

void UndirectedGraph::sort_adjacency() {
  for (auto& list : adj) std::sort(list.begin(), list.end());
}

bool UndirectedGraph::has_edge(int u, int v) const {
  if (u >= static_cast<int>(adj.size())) return false;
  for (const auto& [w, e] : adj[u])
    if (w == v) return true;
  return false;
}

double UndirectedGraph::average_degree() const {
  return n == 0 ? 0.0 : 2.0 * static_cast<double>(edges.size()) / n;
}

int UndirectedGraph::diameter() const {
  int best = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      best = std::max(best, dist[u]);
      for (const auto& [v, e] : adj[u]) {
        if (dist[v] != -1) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return best;
}

UndirectedGraph generate_ba(const TopologyConfig& config) {
  config.validate();
  const int n = config.node_count;
  const int m = config.attachment;
  Rng rng(config.seed);

  UndirectedGraph g;
  g.n = n;
  g.adj.resize(n);

  // Degree-weighted sampling pool: one entry per incident edge end.
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(2) * m * n);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      g.add_edge(u, v);
      pool.push_back(u);
      pool.push_back(v);
    }
  }

  std::set<int> targets;
  for (int v = m; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      int t;
      if (pool.empty()) {
        t = rng.uniform_int(0, v - 1);  // only reachable for attachment 1, first step
      } else {
        t = pool[rng.uniform(0, pool.size() - 1)];
      }
      targets.insert(t);
    }
    for (int t : targets) {
      g.add_edge(t, v);
      pool.push_back(t);
      pool.push_back(v);
    }
  }
  g.sort_adjacency();
  return g;
}

CapacitatedGraph assign_capacities(const UndirectedGraph& g, const TopologyConfig& config) {
  config.validate();
  CapacitatedGraph cg{g, {}};
  cg.edge_capacity.reserve(g.edges.size());
  long long lo = 0, hi = 0;
  std::vector<long long> product(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    product[e] = static_cast<long long>(g.degree(u)) * g.degree(v);
    if (e == 0 || product[e] < lo) lo = product[e];
    if (e == 0 || product[e] > hi) hi = product[e];
  }
  const int levels = static_cast<int>(config.capacity_levels.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    int bin = 0;
    if (hi > lo) {
      bin = static_cast<int>((product[e] - lo) * levels / (hi - lo));
      if (bin >= levels) bin = levels - 1;
    }
    cg.edge_capacity.push_back(Rational(config.capacity_levels[bin]));
  }
  return cg;
}

int interface_index(const UndirectedGraph& g, int u, int v) {
  const auto& list = g.adj[u];
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].first == v) return static_cast<int>(i);
  throw std::invalid_argument("no edge between " + std::to_string(u) + " and " +
                              std::to_string(v));
}

AllocationGraph proportional_sharing_matrices(const CapacitatedGraph& cg, bool step3_strict) {
  const UndirectedGraph& g = cg.graph;
  AllocationGraph out;
  for (int v = 0; v < g.n; ++v) out.add_node(std::to_string(v), g.degree(v));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    out.add_link({std::to_string(u), InterfaceId::external(interface_index(g, u, v))},
                 {std::to_string(v), InterfaceId::external(interface_index(g, v, u))},
                 cg.edge_capacity[e], cg.edge_capacity[e]);
  }

  for (int v = 0; v < g.n; ++v) {
    const std::string id = std::to_string(v);
    const int deg = g.degree(v);
    if (deg == 0) continue;
    std::vector<Rational> cap(deg);
    for (int i = 0; i < deg; ++i) cap[i] = cg.edge_capacity[g.adj[v][i].second];
    Rational cap_max = cap[0];
    for (const Rational& c : cap)
      if (cap_max < c) cap_max = c;

    // Dense working matrix, slot 0 = local.
    const int slots = deg + 1;
    std::vector<Rational> m(static_cast<std::size_t>(slots) * slots, Rational(0));
    auto at = [&](int i, int j) -> Rational& {
      return m[static_cast<std::size_t>(i) * slots + j];
    };

    // (i) every external pair starts at the in-interface capacity; the local
    // row and column start at the largest capacity. Self pairs stay zero.
    for (int i = 1; i < slots; ++i) {
      for (int j = 1; j < slots; ++j)
        if (i != j) at(i, j) = cap[i - 1];
      at(0, i) = cap_max;
      at(i, 0) = cap_max;
    }

    // (ii) normalize every external column to its capacity.
    for (int j = 1; j < slots; ++j) {
      Rational conv(0);
      for (int i = 0; i < slots; ++i) conv += at(i, j);
      if (conv == 0) continue;
      const Rational factor = cap[j - 1] / conv;
      for (int i = 0; i < slots; ++i) at(i, j) *= factor;
    }

    // (iii) shrink external rows that still exceed their capacity; the
    // divergent is frozen per row before its entries change.
    for (int i = 1; i < slots; ++i) {
      Rational div(0);
      for (int j = 0; j < slots; ++j) div += at(i, j);
      if (div == 0) continue;
      const Rational factor = cap[i - 1] / div;
      if (step3_strict) {
        for (int j = 0; j < slots; ++j) {
          const Rational& column_cap = j == 0 ? cap_max : cap[j - 1];
          if (div > column_cap) at(i, j) *= factor;
        }
      } else if (div > cap[i - 1]) {
        for (int j = 0; j < slots; ++j) at(i, j) *= factor;
      }
    }

    for (int i = 0; i < slots; ++i) {
      for (int j = 0; j < slots; ++j) {
        if (at(i, j) == 0) continue;
        const InterfaceId in = i == 0 ? InterfaceId::local() : InterfaceId::external(i - 1);
        const InterfaceId jo = j == 0 ? InterfaceId::local() : InterfaceId::external(j - 1);
        out.set_pair_allocation(id, in, jo, at(i, j));
      }
    }
  }
  return out;
}

namespace {

// Lexicographically smallest shortest path src -> dst by hop count, avoiding
// the given nodes and edges. Empty when disconnected.
std::vector<int> lex_shortest_path(const UndirectedGraph& g, int src, int dst,
                                   const std::set<int>& banned_nodes,
                                   const std::set<std::pair<int, int>>& banned_edges) {
  auto edge_banned = [&](int u, int v) {
    return banned_edges.count({std::min(u, v), std::max(u, v)}) != 0;
  };
  std::vector<int> dist(g.n, -1);
  dist[dst] = 0;
  std::deque<int> queue{dst};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [v, e] : g.adj[u]) {
      if (dist[v] != -1 || banned_nodes.count(v) || edge_banned(u, v)) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  if (dist[src] == -1) return {};
  std::vector<int> path{src};
  int cur = src;
  while (cur != dst) {
    int next = -1;
    for (const auto& [v, e] : g.adj[cur]) {  // adjacency is sorted by node id
      if (banned_nodes.count(v) || edge_banned(cur, v)) continue;
      if (dist[v] == dist[cur] - 1) {
        next = v;
        break;
      }
    }
    if (next == -1) return {};  // src itself banned or inconsistent filters
    path.push_back(next);
    cur = next;
  }
  return path;
}

struct PathOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace

std::vector<std::vector<int>> k_shortest_node_paths(const UndirectedGraph& g, int src, int dst,
                                                    int k) {
  if (src == dst) throw std::invalid_argument("source and destination must differ");
  if (src < 0 || src >= g.n || dst < 0 || dst >= g.n)
    throw std::invalid_argument("node index out of range");
  std::vector<std::vector<int>> result;
  if (k < 1) return result;

  std::vector<int> first = lex_shortest_path(g, src, dst, {}, {});
  if (first.empty()) return result;
  result.push_back(first);

  std::set<std::vector<int>, PathOrder> candidates;
  while (static_cast<int>(result.size()) < k) {
    const std::vector<int>& prev = result.back();
    for (std::size_t spur = 0; spur + 1 < prev.size(); ++spur) {
      std::vector<int> root(prev.begin(), prev.begin() + spur + 1);
      std::set<std::pair<int, int>> banned_edges;
      for (const auto& p : result) {
        if (p.size() > spur + 1 && std::equal(root.begin(), root.end(), p.begin())) {
          banned_edges.insert({std::min(p[spur], p[spur + 1]), std::max(p[spur], p[spur + 1])});
        }
      }
      std::set<int> banned_nodes(root.begin(), root.end() - 1);
      std::vector<int> tail = lex_shortest_path(g, root.back(), dst, banned_nodes, banned_edges);
      if (tail.empty()) continue;
      std::vector<int> candidate = root;
      candidate.insert(candidate.end(), tail.begin() + 1, tail.end());
      if (std::find(result.begin(), result.end(), candidate) == result.end())
        candidates.insert(candidate);
    }
    if (candidates.empty()) break;
    result.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return result;
}

Path node_path_to_interface_path(const UndirectedGraph& g, const std::vector<int>& nodes) {
  if (nodes.size() < 2) throw std::invalid_argument("node path needs at least two nodes");
  Path path;
  path.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const InterfaceId in =
        i == 0 ? InterfaceId::local()
               : InterfaceId::external(interface_index(g, nodes[i], nodes[i - 1]));
    const InterfaceId out =
        i + 1 == nodes.size()
            ? InterfaceId::local()
            : InterfaceId::external(interface_index(g, nodes[i], nodes[i + 1]));
    path.push_back({std::to_string(nodes[i]), in, out});
  }
  return path;
}

UndirectedGraph undirected_view(const AllocationGraph& g) {
  UndirectedGraph view;
  view.n = g.node_count();
  view.adj.resize(view.n);
  for (const Link& l : g.links()) view.add_edge(g.node_index(l.a.node), g.node_index(l.b.node));
  view.sort_adjacency();
  return view;
}

Json topology_metadata(const TopologyConfig& config, const CapacitatedGraph& cg) {
  Json meta;
  meta["generator"] = kGeneratorName;
  meta["config"] = Json{{"node_count", config.node_count},
                        {"attachment", config.attachment},
                        {"seed", config.seed},
                        {"k_paths", config.k_paths},
                        {"capacity_levels", config.capacity_levels}};
  meta["edge_count"] = cg.graph.edges.size();
  meta["average_degree"] = cg.graph.average_degree();
  meta["diameter"] = cg.graph.diameter();
  return meta;
}

}  // namespace pathalloc::topo
