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

#include "pathalloc/saturation.hpp"

#include <functional>
#include <string>
#include <vector>

#include "pathalloc/allocators.hpp"
#include "pathalloc/path_view.hpp"

namespace pathalloc::oracle {

namespace {

Rational leaf_link_capacity(const Rational& div, const Rational& conv) {
  Rational cap = div < conv ? conv : div;
  if (cap < 1) cap = 1;
  return cap;
}

}  // namespace

SaturatingGraph build_saturating_graph(const AllocationGraph& g, const Path& path) {
  const PathClass cls = g.classify_path(path);
  if (!cls.terminated) throw std::invalid_argument("saturating construction needs a terminated path");
  if (!cls.valid) throw std::invalid_argument("saturating construction needs a valid path");

  const std::size_t len = path.size();
  const std::size_t x = gma_direct(make_path_view(g, path)).argmin_index;

  SaturatingGraph out;
  std::vector<std::string> copy_id(len);
  for (std::size_t k = 0; k < len; ++k) copy_id[k] = "s" + std::to_string(k + 1) + "_" + path[k].node;

  // One copy per occurrence, matrices carried over verbatim.
  for (std::size_t k = 0; k < len; ++k) {
    const std::string& orig = path[k].node;
    const int ext = g.external_interfaces(orig);
    out.graph.add_node(copy_id[k], ext);
    std::vector<InterfaceId> ifaces{InterfaceId::local()};
    for (int i = 0; i < ext; ++i) ifaces.push_back(InterfaceId::external(i));
    for (InterfaceId in : ifaces) {
      for (InterfaceId o : ifaces) {
        const Rational& v = g.pair_allocation(orig, in, o);
        if (v != 0) out.graph.set_pair_allocation(copy_id[k], in, o, v);
      }
    }
  }

  // Chain links between consecutive copies, original capacities kept.
  for (std::size_t k = 0; k + 1 < len; ++k) {
    out.graph.add_link({copy_id[k], path[k].out}, {copy_id[k + 1], path[k + 1].in},
                       g.capacity_out(path[k].node, path[k].out),
                       g.capacity_in(path[k].node, path[k].out));
  }

  // Leaves on every external interface the path does not use at this hop.
  for (std::size_t k = 0; k < len; ++k) {
    const std::string& orig = path[k].node;
    for (int i = 0; i < g.external_interfaces(orig); ++i) {
      const InterfaceId iface = InterfaceId::external(i);
      if (iface == path[k].in || iface == path[k].out) continue;
      const std::string leaf = copy_id[k] + "_leaf" + std::to_string(i);
      out.graph.add_node(leaf, 1);
      const Rational& div = g.divergent(orig, iface);
      const Rational& conv = g.convergent(orig, iface);
      if (k + 1 < x && div != 0)
        out.graph.set_pair_allocation(leaf, InterfaceId::local(), InterfaceId::external(0), div);
      if (k + 1 > x && conv != 0)
        out.graph.set_pair_allocation(leaf, InterfaceId::external(0), InterfaceId::local(), conv);
      const Rational cap = leaf_link_capacity(div, conv);
      out.graph.add_link({leaf, InterfaceId::external(0)}, {copy_id[k], iface}, cap, cap);
    }
  }

  out.path = path;
  for (std::size_t k = 0; k < len; ++k) out.path[k].node = copy_id[k];
  out.minimizer_pair = out.path[x - 1];
  return out;
}

Rational check_saturation(const SaturatingGraph& sg, int bound) {
  const AllocationGraph& g = sg.graph;
  if (bound <= 0) bound = g.node_count() + 1;
  const Hop& pair = sg.minimizer_pair;
  const Rational& limit = g.pair_allocation(pair.node, pair.in, pair.out);
  if (limit == 0) throw std::invalid_argument("minimizer pair has zero allocation");

  Rational total(0);
  bool frontier_active = false;

  // Valid walks from every local interface; each crossing of the minimizer
  // pair adds the walk's final gma value once.
  struct State {
    std::string node;
    InterfaceId in;
    int crossings;
  };
  std::function<void(const State&, const detail::MinFormState<Rational>&, int)> descend =
      [&](const State& at, const detail::MinFormState<Rational>& alloc, int len) {
        const int externals = g.external_interfaces(at.node);
        for (int s = -1; s < externals; ++s) {
          const InterfaceId nxt = s < 0 ? InterfaceId::local() : InterfaceId::external(s);
          const Rational& entry = g.pair_allocation(at.node, at.in, nxt);
          if (entry == 0) continue;
          detail::MinFormState<Rational> next = alloc;
          next.extend({entry, g.divergent(at.node, at.in), g.convergent(at.node, nxt)},
                      static_cast<std::size_t>(len));
          const int crossings =
              at.crossings + (at.node == pair.node && at.in == pair.in && nxt == pair.out ? 1 : 0);
          if (nxt.is_local()) {
            if (crossings > 0) total += next.value * crossings;
            continue;
          }
          if (len + 1 >= bound) {
            frontier_active = true;  // a valid walk still extends at the bound
            continue;
          }
          if (g.has_link_at(at.node, nxt)) {
            const LinkEnd far = g.peer(at.node, nxt);
            descend({far.node, far.iface, crossings}, next, len + 1);
          }
        }
      };

  for (int v = 0; v < g.node_count(); ++v) {
    const std::string& id = g.node_id(v);
    const int externals = g.external_interfaces(id);
    for (int s = -1; s < externals; ++s) {
      const InterfaceId first_out = s < 0 ? InterfaceId::local() : InterfaceId::external(s);
      const Rational& entry = g.pair_allocation(id, InterfaceId::local(), first_out);
      if (entry == 0) continue;
      detail::MinFormState<Rational> alloc;
      alloc.start({entry, g.divergent(id, InterfaceId::local()), g.convergent(id, first_out)});
      const int crossings =
          (id == pair.node && pair.in.is_local() && first_out == pair.out) ? 1 : 0;
      if (first_out.is_local()) {
        if (crossings > 0) total += alloc.value * crossings;
        continue;
      }
      if (bound < 2) {
        frontier_active = true;
        continue;
      }
      if (g.has_link_at(id, first_out)) {
        const LinkEnd far = g.peer(id, first_out);
        descend({far.node, far.iface, crossings}, alloc, 1);
      }
    }
  }

  if (frontier_active)
    throw EnumerationIncompleteError(
        "valid walks still extend at the bound; raise the enumeration bound");
  return total / limit;
}

}  // namespace pathalloc::oracle
