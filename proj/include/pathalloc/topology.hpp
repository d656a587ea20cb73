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

#ifndef PATHALLOC_TOPOLOGY_HPP
#define PATHALLOC_TOPOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pathalloc/graph.hpp"
#include "pathalloc/json_io.hpp"

namespace pathalloc::topo {

struct TopologyConfig {
  int node_count = 64;       // 8..2048
  int attachment = 2;        // 1..32, strictly less than node_count
  std::uint64_t seed = 1;
  int k_paths = 1;           // 1..3
  // Ten equidistant capacity levels; degree products are min-max normalized
  // onto these bins, a constant product field maps to the lowest level.
  std::vector<int> capacity_levels = {40, 80, 120, 160, 200, 240, 280, 320, 360, 400};

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Simple undirected graph with sorted adjacency lists (node ids 0..n-1).
struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;          // u < v
  std::vector<std::vector<std::pair<int, int>>> adj;  // per node: (neighbor, edge index)

  void add_edge(int u, int v);
  void sort_adjacency();
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  double average_degree() const;
  int diameter() const;  // hop metric; longest finite eccentricity
};

/// Preferential attachment starting from a clique of `attachment` nodes;
/// every later node attaches to `attachment` distinct nodes, drawn with
/// probability proportional to degree. Deterministic under the seed.
UndirectedGraph generate_ba(const TopologyConfig& config);

struct CapacitatedGraph {
  UndirectedGraph graph;
  std::vector<Rational> edge_capacity;  // per edge, same value in both directions
};

/// Degree-gravity capacities: each edge scores deg(u) * deg(v), scores are
/// normalized min-max and discretized onto the configured levels.
CapacitatedGraph assign_capacities(const UndirectedGraph& g, const TopologyConfig& config);

/// The proportional-sharing policy, per node: (i) seed every pair with the
/// in-interface capacity and the local row/column with the maximum capacity;
/// (ii) rescale each external column to its capacity; (iii) rescale rows
/// whose divergent still exceeds the relevant capacity. `step3_strict`
/// keeps the published per-entry condition (divergent against the column
/// capacity); the self-consistent alternative compares the divergent with
/// its own row capacity. On matrices produced by steps (i)-(ii) the two
/// coincide. Node v becomes "v"; interface i of node u is its i-th neighbor
/// in ascending order.
AllocationGraph proportional_sharing_matrices(const CapacitatedGraph& cg,
                                              bool step3_strict = true);

/// Up to k shortest simple node paths, ordered by (length, lexicographic
/// node sequence); fewer (possibly zero) when the pair is disconnected.
std::vector<std::vector<int>> k_shortest_node_paths(const UndirectedGraph& g, int src, int dst,
                                                    int k);

/// Interface index of `u` for its incident edge to `v` under the
/// sorted-neighbor convention used by proportional_sharing_matrices.
int interface_index(const UndirectedGraph& g, int u, int v);

/// Terminated interface path (local -> ... -> local) for a node path.
Path node_path_to_interface_path(const UndirectedGraph& g, const std::vector<int>& nodes);

/// Node-index view over an allocation graph's links (for path selection on
/// loaded graphs); node ids map to their positions in the document.
UndirectedGraph undirected_view(const AllocationGraph& g);

/// Reproducibility block embedded in generated graph files: configuration,
/// generator name and degree/diameter summary.
Json topology_metadata(const TopologyConfig& config, const CapacitatedGraph& cg);

}  // namespace pathalloc::topo

#endif  // PATHALLOC_TOPOLOGY_HPP
