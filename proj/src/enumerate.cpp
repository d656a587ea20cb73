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

#include "pathalloc/enumerate.hpp"

#include <deque>
#include <map>

namespace pathalloc::oracle {

namespace {

// Hop distance from every node to `target` over the link structure,
// ignoring directions; used as an admissible bound for through-pair pruning.
std::map<std::string, int> hop_distances(const AllocationGraph& g, const std::string& target) {
  std::map<std::string, int> dist;
  dist[target] = 0;
  std::deque<std::string> queue{target};
  while (!queue.empty()) {
    const std::string node = queue.front();
    queue.pop_front();
    for (int i = 0; i < g.external_interfaces(node); ++i) {
      const InterfaceId iface = InterfaceId::external(i);
      if (!g.has_link_at(node, iface)) continue;
      const LinkEnd far = g.peer(node, iface);
      if (dist.count(far.node)) continue;
      dist[far.node] = dist[node] + 1;
      queue.push_back(far.node);
    }
  }
  return dist;
}

struct Walker {
  const AllocationGraph& g;
  int bound;
  EnumMode mode;
  const EnumFilters& filters;
  const PathVisitor& visit;
  std::map<std::string, int> pair_distance;  // filled only with a through_pair filter

  Path path;

  bool matches_pair(const Hop& hop) const {
    const Hop& want = *filters.through_pair;
    return hop.node == want.node && hop.in == want.in && hop.out == want.out;
  }

  // True when a walk currently at `next_node` (about to make hop number
  // `next_len`) can still reach the through-pair hop within the bound.
  bool pair_reachable(const std::string& next_node, int next_len) const {
    auto it = pair_distance.find(next_node);
    if (it == pair_distance.end()) return false;
    return next_len + it->second <= bound;
  }

  void emit_if_requested(bool crossed) {
    if (filters.through_pair && !crossed) return;
    const bool terminated = path.front().in.is_local() && path.back().out.is_local();
    if (mode == EnumMode::kTerminatedUpTo) {
      if (terminated) visit(path);
    } else {
      if (!terminated && static_cast<int>(path.size()) == bound) visit(path);
    }
  }

  void extend(const std::string& node, InterfaceId in, bool crossed) {
    const int externals = g.external_interfaces(node);
    for (int s = -1; s < externals; ++s) {
      const InterfaceId out = s < 0 ? InterfaceId::local() : InterfaceId::external(s);
      if (filters.valid_only && g.pair_allocation(node, in, out) == 0) continue;
      const Hop hop{node, in, out};
      const bool now_crossed = crossed || (filters.through_pair && matches_pair(hop));
      path.push_back(hop);
      emit_if_requested(now_crossed);
      if (!out.is_local() && static_cast<int>(path.size()) < bound && g.has_link_at(node, out)) {
        const LinkEnd far = g.peer(node, out);
        if (!filters.through_pair || now_crossed ||
            pair_reachable(far.node, static_cast<int>(path.size()) + 1)) {
          extend(far.node, far.iface, now_crossed);
        }
      }
      path.pop_back();
    }
  }
};

}  // namespace

void enumerate_paths(const AllocationGraph& g, int bound, EnumMode mode,
                     const EnumFilters& filters, const PathVisitor& visit) {
  if (bound < 1) throw std::invalid_argument("enumeration bound must be >= 1");
  Walker walker{g, bound, mode, filters, visit, {}, {}};
  if (filters.through_pair) {
    if (!g.has_node(filters.through_pair->node))
      throw std::invalid_argument("through-pair node not in graph");
    walker.pair_distance = hop_distances(g, filters.through_pair->node);
  }

  std::vector<std::pair<std::string, InterfaceId>> starts;
  if (filters.start) {
    starts.push_back(*filters.start);
  } else if (mode == EnumMode::kTerminatedUpTo) {
    // Terminated paths begin at a local interface.
    for (int v = 0; v < g.node_count(); ++v) starts.push_back({g.node_id(v), InterfaceId::local()});
  } else {
    for (int v = 0; v < g.node_count(); ++v) {
      const std::string& id = g.node_id(v);
      starts.push_back({id, InterfaceId::local()});
      for (int i = 0; i < g.external_interfaces(id); ++i)
        starts.push_back({id, InterfaceId::external(i)});
    }
  }
  for (const auto& [node, in] : starts) {
    if (!g.has_node(node)) throw std::invalid_argument("start node not in graph: " + node);
    if (walker.filters.through_pair) {
      auto it = walker.pair_distance.find(node);
      if (it == walker.pair_distance.end() || 1 + it->second > bound) continue;
    }
    walker.extend(node, in, false);
  }
}

std::vector<Path> collect_paths(const AllocationGraph& g, int bound, EnumMode mode,
                                const EnumFilters& filters) {
  std::vector<Path> out;
  enumerate_paths(g, bound, mode, filters, [&](const Path& p) { out.push_back(p); });
  return out;
}

}  // namespace pathalloc::oracle
