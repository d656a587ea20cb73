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

#include "pathalloc/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace pathalloc {

InterfaceId InterfaceId::parse(const std::string& s) {
  if (s == "local") return local();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad interface id: '" + s + "'");
  return external(std::stoi(s));
}

std::string Violation::describe() const {
  switch (kind) {
    case ViolationKind::kDivergentExceedsCapacity:
      return "node " + node + " interface " + iface.str() + ": divergent " +
             format_resource(quantity) + " exceeds incoming capacity " + format_resource(limit);
    case ViolationKind::kConvergentExceedsCapacity:
      return "node " + node + " interface " + iface.str() + ": convergent " +
             format_resource(quantity) + " exceeds outgoing capacity " + format_resource(limit);
    case ViolationKind::kUnlinkedInterface:
      return "node " + node + " interface " + iface.str() + ": not attached to any link";
  }
  return "unknown violation";
}

int AllocationGraph::add_node(const std::string& id, int external_interfaces) {
  if (index_.count(id)) throw std::invalid_argument("duplicate node id: " + id);
  if (external_interfaces < 0) throw std::invalid_argument("negative interface count");
  Node n;
  n.id = id;
  n.externals = external_interfaces;
  const int slots = external_interfaces + 1;
  n.matrix.assign(static_cast<std::size_t>(slots) * slots, Rational(0));
  n.div.assign(slots, Rational(0));
  n.conv.assign(slots, Rational(0));
  n.link_at.assign(external_interfaces, -1);
  nodes_.push_back(std::move(n));
  index_[id] = static_cast<int>(nodes_.size()) - 1;
  return index_[id];
}

void AllocationGraph::add_link(const LinkEnd& a, const LinkEnd& b, const Rational& cap_a_to_b,
                               const Rational& cap_b_to_a) {
  if (a.node == b.node) throw std::invalid_argument("self-link at node " + a.node);
  if (cap_a_to_b <= 0 || cap_b_to_a <= 0)
    throw std::invalid_argument("link capacities must be strictly positive");
  Node& na = node_mut(a.node);
  Node& nb = node_mut(b.node);
  if (a.iface.is_local() || b.iface.is_local())
    throw std::invalid_argument("links attach to external interfaces only");
  check_iface(na, a.iface);
  check_iface(nb, b.iface);
  if (na.link_at[a.iface.index()] != -1)
    throw std::invalid_argument("interface already linked: " + a.node + ":" + a.iface.str());
  if (nb.link_at[b.iface.index()] != -1)
    throw std::invalid_argument("interface already linked: " + b.node + ":" + b.iface.str());
  auto pair_key = std::minmax(a.node, b.node);
  if (link_by_pair_.count({pair_key.first, pair_key.second}))
    throw std::invalid_argument("multi-edge between " + a.node + " and " + b.node);

  const int id = static_cast<int>(links_.size());
  links_.push_back(Link{a, b, cap_a_to_b, cap_b_to_a});
  na.link_at[a.iface.index()] = id;
  nb.link_at[b.iface.index()] = id;
  link_by_pair_[{pair_key.first, pair_key.second}] = id;
}

std::vector<Violation> AllocationGraph::set_pair_allocation(const std::string& node,
                                                            InterfaceId in, InterfaceId out,
                                                            const Rational& value) {
  if (value < 0) throw std::invalid_argument("pair allocation must be non-negative");
  Node& n = node_mut(node);
  check_iface(n, in);
  check_iface(n, out);
  const int si = slot(in), so = slot(out);
  const int slots = n.externals + 1;
  Rational& entry = n.matrix[static_cast<std::size_t>(si) * slots + so];
  const Rational delta = value - entry;
  entry = value;
  n.div[si] += delta;
  n.conv[so] += delta;

  std::vector<Violation> violations;
  if (!in.is_local()) append_capacity_violations(n, in, &violations);
  if (!out.is_local() && out != in) append_capacity_violations(n, out, &violations);
  return violations;
}

const Rational& AllocationGraph::pair_allocation(const std::string& node, InterfaceId in,
                                                 InterfaceId out) const {
  const Node& n = node_at(node);
  check_iface(n, in);
  check_iface(n, out);
  return n.matrix[static_cast<std::size_t>(slot(in)) * (n.externals + 1) + slot(out)];
}

const Rational& AllocationGraph::divergent(const std::string& node, InterfaceId iface) const {
  const Node& n = node_at(node);
  check_iface(n, iface);
  return n.div[slot(iface)];
}

const Rational& AllocationGraph::convergent(const std::string& node, InterfaceId iface) const {
  const Node& n = node_at(node);
  check_iface(n, iface);
  return n.conv[slot(iface)];
}

void AllocationGraph::append_capacity_violations(const Node& n, InterfaceId iface,
                                                 std::vector<Violation>* out) const {
  if (iface.is_local()) return;  // no edge, no constraint
  const int link = n.link_at[iface.index()];
  if (link == -1) {
    out->push_back({ViolationKind::kUnlinkedInterface, n.id, iface, Rational(0), Rational(0)});
    return;
  }
  const Rational& in_cap = capacity_in(n.id, iface);
  const Rational& out_cap = capacity_out(n.id, iface);
  const Rational& d = n.div[slot(iface)];
  const Rational& c = n.conv[slot(iface)];
  if (d > in_cap)
    out->push_back({ViolationKind::kDivergentExceedsCapacity, n.id, iface, d, in_cap});
  if (c > out_cap)
    out->push_back({ViolationKind::kConvergentExceedsCapacity, n.id, iface, c, out_cap});
}

std::vector<Violation> AllocationGraph::validate() const {
  std::vector<Violation> violations;
  for (const Node& n : nodes_)
    for (int i = 0; i < n.externals; ++i)
      append_capacity_violations(n, InterfaceId::external(i), &violations);
  return violations;
}

PathClass AllocationGraph::classify_path(const Path& path) const {
  if (path.empty()) throw MalformedPathError(0, "empty hop list");
  std::set<std::string> seen;
  bool valid = true;
  bool simple = true;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Hop& hop = path[k];
    if (!has_node(hop.node)) throw MalformedPathError(k, "unknown node " + hop.node);
    const Node& n = node_at(hop.node);
    try {
      check_iface(n, hop.in);
      check_iface(n, hop.out);
    } catch (const std::exception& e) {
      throw MalformedPathError(k, e.what());
    }
    if (k > 0) {
      const Hop& prev = path[k - 1];
      if (prev.out.is_local()) throw MalformedPathError(k, "previous hop exits at local interface");
      if (hop.in.is_local()) throw MalformedPathError(k, "mid-path hop enters at local interface");
      if (!has_link_at(prev.node, prev.out))
        throw MalformedPathError(k - 1, "exit interface is unlinked");
      const LinkEnd far = peer(prev.node, prev.out);
      if (far.node != hop.node || far.iface != hop.in)
        throw MalformedPathError(k, "interfaces do not match across the link");
    }
    if (pair_allocation(hop.node, hop.in, hop.out) == 0) valid = false;
    if (!seen.insert(hop.node).second) simple = false;
  }
  const bool terminated = path.front().in.is_local() && path.back().out.is_local();
  return PathClass{terminated, valid, simple};
}

int AllocationGraph::node_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown node: " + id);
  return it->second;
}

int AllocationGraph::external_interfaces(const std::string& node) const {
  return node_at(node).externals;
}

LinkEnd AllocationGraph::peer(const std::string& node, InterfaceId iface) const {
  const Link& l = links_[link_index_at(node, iface)];
  return (l.a.node == node && l.a.iface == iface) ? l.b : l.a;
}

const Rational& AllocationGraph::capacity_in(const std::string& node, InterfaceId iface) const {
  const Link& l = links_[link_index_at(node, iface)];
  return (l.a.node == node && l.a.iface == iface) ? l.cap_b_to_a : l.cap_a_to_b;
}

const Rational& AllocationGraph::capacity_out(const std::string& node, InterfaceId iface) const {
  const Link& l = links_[link_index_at(node, iface)];
  return (l.a.node == node && l.a.iface == iface) ? l.cap_a_to_b : l.cap_b_to_a;
}

bool AllocationGraph::has_link_at(const std::string& node, InterfaceId iface) const {
  const Node& n = node_at(node);
  if (iface.is_local()) return false;
  check_iface(n, iface);
  return n.link_at[iface.index()] != -1;
}

int AllocationGraph::link_index_at(const std::string& node, InterfaceId iface) const {
  const Node& n = node_at(node);
  if (iface.is_local()) throw std::invalid_argument("local interface has no link");
  check_iface(n, iface);
  const int id = n.link_at[iface.index()];
  if (id == -1)
    throw std::invalid_argument("unlinked interface: " + node + ":" + iface.str());
  return id;
}

NodeMatrix AllocationGraph::node_matrix(const std::string& node) const {
  const Node& n = node_at(node);
  return NodeMatrix(n.id, n.externals, n.matrix, n.div, n.conv);
}

const Link* AllocationGraph::find_link(const std::string& a, const std::string& b) const {
  const auto key = std::minmax(a, b);
  auto it = link_by_pair_.find({key.first, key.second});
  return it == link_by_pair_.end() ? nullptr : &links_[it->second];
}

const AllocationGraph::Node& AllocationGraph::node_at(const std::string& id) const {
  return nodes_[node_index(id)];
}

AllocationGraph::Node& AllocationGraph::node_mut(const std::string& id) {
  return nodes_[node_index(id)];
}

void AllocationGraph::check_iface(const Node& n, InterfaceId iface) const {
  if (iface.is_local()) return;
  if (iface.index() < 0 || iface.index() >= n.externals)
    throw std::invalid_argument("unknown interface " + iface.str() + " at node " + n.id);
}

}  // namespace pathalloc
