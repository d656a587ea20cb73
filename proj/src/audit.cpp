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

#include "pathalloc/audit.hpp"

#include <functional>
#include <map>
#include <ostream>

#include "pathalloc/allocators.hpp"
#include "pathalloc/enumerate.hpp"
#include "pathalloc/path_view.hpp"

namespace pathalloc::oracle {

namespace {

// Allocator value of a growing walk, extended one hop at a time.
struct RunningAlloc {
  AllocatorKind kind;
  Rational value;
  Rational aprod;      // gma: running product of M/conv
  Rational conv_prev;  // a2: convergent at the previous hop's out-interface

  void start(const Rational& pair, const Rational& conv) {
    value = pair;
    if (kind == AllocatorKind::kGma) aprod = pair / conv;
    if (kind == AllocatorKind::kA2) conv_prev = conv;
  }

  void extend(const Rational& pair, const Rational& div, const Rational& conv) {
    switch (kind) {
      case AllocatorKind::kA1:
        value = value * pair / div;
        break;
      case AllocatorKind::kA2:
        value = value * pair / (conv_prev < div ? div : conv_prev);
        conv_prev = conv;
        break;
      case AllocatorKind::kGma: {
        const Rational extended = value * pair / div;
        const Rational candidate = aprod * pair;
        value = candidate < extended ? candidate : extended;
        aprod *= pair / conv;
        break;
      }
    }
  }
};

Rational allocator_value(const AllocationGraph& g, const Path& path, AllocatorKind kind) {
  const RationalPathView view = make_path_view(g, path);
  switch (kind) {
    case AllocatorKind::kA1:
      return alloc_a1(view);
    case AllocatorKind::kA2:
      return alloc_a2(view);
    case AllocatorKind::kGma:
      return gma_value(view);
  }
  return Rational(0);
}

// Dense per-node pair sums plus per-direction edge sums.
struct Sums {
  std::vector<std::vector<Rational>> pair;  // node -> slot(in) * slots + slot(out)
  std::vector<Rational> edge_ab, edge_ba;   // per link

  explicit Sums(const AllocationGraph& g) {
    pair.resize(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) {
      const int slots = g.external_interfaces(g.node_id(v)) + 1;
      pair[v].assign(static_cast<std::size_t>(slots) * slots, Rational(0));
    }
    edge_ab.assign(g.links().size(), Rational(0));
    edge_ba.assign(g.links().size(), Rational(0));
  }

  void add_path(const AllocationGraph& g, const Path& path, const Rational& value) {
    if (value == 0) return;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const Hop& hop = path[k];
      const int v = g.node_index(hop.node);
      const int slots = g.external_interfaces(hop.node) + 1;
      const int si = hop.in.is_local() ? 0 : hop.in.index() + 1;
      const int so = hop.out.is_local() ? 0 : hop.out.index() + 1;
      pair[v][static_cast<std::size_t>(si) * slots + so] += value;
      if (k + 1 < path.size()) {
        const int link = g.link_index_at(hop.node, hop.out);
        const Link& l = g.links()[link];
        if (l.a.node == hop.node && l.a.iface == hop.out)
          edge_ab[link] += value;
        else
          edge_ba[link] += value;
      }
    }
  }
};

AuditReport report_from_sums(const AllocationGraph& g, const Sums& sums) {
  AuditReport report;
  for (int v = 0; v < g.node_count(); ++v) {
    const std::string& id = g.node_id(v);
    const int ext = g.external_interfaces(id);
    std::vector<InterfaceId> ifaces{InterfaceId::local()};
    for (int i = 0; i < ext; ++i) ifaces.push_back(InterfaceId::external(i));
    const int slots = ext + 1;
    for (InterfaceId in : ifaces) {
      for (InterfaceId out : ifaces) {
        const int si = in.is_local() ? 0 : in.index() + 1;
        const int so = out.is_local() ? 0 : out.index() + 1;
        const Rational& sum = sums.pair[v][static_cast<std::size_t>(si) * slots + so];
        const Rational& limit = g.pair_allocation(id, in, out);
        report.pairs.push_back({id, in, out, limit, sum, sum > limit});
      }
    }
  }
  for (std::size_t e = 0; e < g.links().size(); ++e) {
    const Link& l = g.links()[e];
    report.edges.push_back({l.a.node, l.a.iface, l.b.node, l.b.iface, l.cap_a_to_b,
                            sums.edge_ab[e], sums.edge_ab[e] > l.cap_a_to_b});
    report.edges.push_back({l.b.node, l.b.iface, l.a.node, l.a.iface, l.cap_b_to_a,
                            sums.edge_ba[e], sums.edge_ba[e] > l.cap_b_to_a});
  }
  return report;
}

}  // namespace

std::string allocator_name(AllocatorKind kind) {
  switch (kind) {
    case AllocatorKind::kA1:
      return "A1";
    case AllocatorKind::kA2:
      return "A2";
    case AllocatorKind::kGma:
      return "GMA";
  }
  return "?";
}

bool AuditReport::any_over_allocated() const {
  for (const auto& row : pairs)
    if (row.over_allocated) return true;
  for (const auto& row : edges)
    if (row.over_allocated) return true;
  return false;
}

std::vector<const PairAuditRow*> AuditReport::over_allocated_pairs() const {
  std::vector<const PairAuditRow*> out;
  for (const auto& row : pairs)
    if (row.over_allocated) out.push_back(&row);
  return out;
}

void AuditReport::write_delimited(std::ostream& out) const {
  out << "kind\tnode\tin\tout\tlimit\tsum\tutilization\tflag\n";
  for (const auto& row : pairs) {
    out << "pair\t" << row.node << '\t' << row.in.str() << '\t' << row.out.str() << '\t'
        << format_resource(row.limit) << '\t' << format_resource(row.sum) << '\t'
        << to_double(row.utilization()) << '\t' << (row.over_allocated ? "over" : "ok") << '\n';
  }
  for (const auto& row : edges) {
    out << "edge\t" << row.from_node << "->" << row.to_node << '\t' << row.from_iface.str()
        << '\t' << row.to_iface.str() << '\t' << format_resource(row.capacity) << '\t'
        << format_resource(row.sum) << '\t' << to_double(row.utilization()) << '\t'
        << (row.over_allocated ? "over" : "ok") << '\n';
  }
}

AuditReport audit_paths(const AllocationGraph& g, const std::vector<Path>& paths,
                        AllocatorKind kind) {
  Sums sums(g);
  for (const Path& path : paths) sums.add_path(g, path, allocator_value(g, path, kind));
  return report_from_sums(g, sums);
}

AuditReport audit_over_allocation(const AllocationGraph& g, AllocatorKind kind, int bound,
                                  bool strict_lemma) {
  Sums sums(g);
  EnumFilters filters;
  filters.valid_only = true;
  enumerate_paths(g, bound, EnumMode::kTerminatedUpTo, filters,
                  [&](const Path& p) { sums.add_path(g, p, allocator_value(g, p, kind)); });
  if (strict_lemma) {
    for (int v = 0; v < g.node_count(); ++v) {
      EnumFilters anchored;
      anchored.valid_only = true;
      anchored.start = {g.node_id(v), InterfaceId::local()};
      enumerate_paths(g, bound, EnumMode::kPreliminaryExact, anchored, [&](const Path& p) {
        // Credit the preliminary value to the starting (local, j) pair; these
        // walks are still open and bound that pair inductively.
        const Rational value = allocator_value(g, p, kind);
        if (value == 0) return;
        const Hop& first = p.front();
        const int so = first.out.is_local() ? 0 : first.out.index() + 1;
        sums.pair[g.node_index(first.node)][so] += value;  // row 0 is the local row
      });
    }
  }
  return report_from_sums(g, sums);
}

std::vector<AnchorAuditRow> anchored_sum_audit(const AllocationGraph& g, AllocatorKind kind,
                                               int max_x) {
  if (max_x < 1) throw std::invalid_argument("bound must be >= 1");
  std::vector<AnchorAuditRow> rows;
  for (int v = 0; v < g.node_count(); ++v) {
    const std::string& id = g.node_id(v);
    for (int j = 0; j < g.external_interfaces(id); ++j) {
      const InterfaceId out = InterfaceId::external(j);
      std::vector<Rational> prelim(max_x + 1, Rational(0));
      std::vector<Rational> term(max_x + 1, Rational(0));

      // Depth-first accumulation over valid anchored walks; the allocator
      // state is extended in O(1) per hop.
      struct Frame {
        std::string node;
        InterfaceId in;
      };
      std::function<void(const Frame&, const RunningAlloc&, int)> descend =
          [&](const Frame& at, const RunningAlloc& alloc, int len) {
            const int externals = g.external_interfaces(at.node);
            for (int s = -1; s < externals; ++s) {
              const InterfaceId nxt = s < 0 ? InterfaceId::local() : InterfaceId::external(s);
              const Rational& pair = g.pair_allocation(at.node, at.in, nxt);
              if (pair == 0) continue;
              RunningAlloc next = alloc;
              next.extend(pair, g.divergent(at.node, at.in), g.convergent(at.node, nxt));
              if (nxt.is_local()) {
                term[len + 1] += next.value;
              } else {
                prelim[len + 1] += next.value;
                if (len + 1 < max_x && g.has_link_at(at.node, nxt)) {
                  const LinkEnd far = g.peer(at.node, nxt);
                  descend({far.node, far.iface}, next, len + 1);
                }
              }
            }
          };

      const Rational& anchor_pair = g.pair_allocation(id, InterfaceId::local(), out);
      if (anchor_pair > 0) {
        RunningAlloc alloc{kind, Rational(0), Rational(0), Rational(0)};
        alloc.start(anchor_pair, g.convergent(id, out));
        prelim[1] += alloc.value;
        if (max_x > 1 && g.has_link_at(id, out)) {
          const LinkEnd far = g.peer(id, out);
          descend({far.node, far.iface}, alloc, 1);
        }
      }

      Rational terminated_cum(0);
      for (int x = 1; x <= max_x; ++x) {
        terminated_cum += term[x];
        const Rational total = prelim[x] + terminated_cum;
        rows.push_back(
            {id, out, x, prelim[x], terminated_cum, anchor_pair, total > anchor_pair});
      }
    }
  }
  return rows;
}

}  // namespace pathalloc::oracle
