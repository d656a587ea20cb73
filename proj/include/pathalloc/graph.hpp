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

#ifndef PATHALLOC_GRAPH_HPP
#define PATHALLOC_GRAPH_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathalloc/rational.hpp"

namespace pathalloc {

/// Node-scoped interface identifier: the distinguished local interface, or an
/// external interface index. Every external interface is attached to exactly
/// one link; the local interface represents internal sources and sinks.
class InterfaceId {
 public:
  constexpr InterfaceId() : idx_(-1) {}

  static constexpr InterfaceId local() { return InterfaceId(); }
  static constexpr InterfaceId external(int index) { return InterfaceId(index); }

  constexpr bool is_local() const { return idx_ < 0; }
  constexpr int index() const { return idx_; }

  friend constexpr bool operator==(InterfaceId a, InterfaceId b) { return a.idx_ == b.idx_; }
  friend constexpr bool operator!=(InterfaceId a, InterfaceId b) { return a.idx_ != b.idx_; }
  friend constexpr bool operator<(InterfaceId a, InterfaceId b) { return a.idx_ < b.idx_; }

  std::string str() const { return is_local() ? "local" : std::to_string(idx_); }

  /// Parses "local" or a non-negative decimal index.
  static InterfaceId parse(const std::string& s);

 private:
  explicit constexpr InterfaceId(int idx) : idx_(idx) {}
  int idx_;
};

struct LinkEnd {
  std::string node;
  InterfaceId iface;  // always external
};

/// Undirected link with one fixed positive capacity per direction.
struct Link {
  LinkEnd a;
  LinkEnd b;
  Rational cap_a_to_b;
  Rational cap_b_to_a;
};

enum class ViolationKind {
  kDivergentExceedsCapacity,
  kConvergentExceedsCapacity,
  kUnlinkedInterface,
};

/// One broken invariant, reported as data rather than as an error.
struct Violation {
  ViolationKind kind;
  std::string node;
  InterfaceId iface;
  Rational quantity;  // the offending value (0 for wiring violations)
  Rational limit;

  std::string describe() const;
};

struct Hop {
  std::string node;
  InterfaceId in;
  InterfaceId out;

  friend bool operator==(const Hop&, const Hop&) = default;
};

/// Ordered hop list; length is the hop count. Adjacent hops must sit on
/// opposite ends of one link.
using Path = std::vector<Hop>;

struct PathClass {
  bool terminated;  // first in-interface and last out-interface are local
  bool valid;       // every traversed pair allocation is > 0
  bool simple;      // contains each node at most once
};

/// Thrown when a hop list breaks adjacency or references unknown entities.
class MalformedPathError : public std::runtime_error {
 public:
  MalformedPathError(std::size_t hop, const std::string& what)
      : std::runtime_error("hop " + std::to_string(hop) + ": " + what), hop_index(hop) {}
  std::size_t hop_index;
};

/// Value snapshot of one node's allocation matrix plus its row/column sums.
/// This is the whole read surface a distributed per-node handler gets: no
/// links, no neighbors, no graph handle.
class NodeMatrix {
 public:
  NodeMatrix(std::string node_id, int externals, std::vector<Rational> matrix,
             std::vector<Rational> div, std::vector<Rational> conv)
      : id_(std::move(node_id)),
        externals_(externals),
        matrix_(std::move(matrix)),
        div_(std::move(div)),
        conv_(std::move(conv)) {}

  const std::string& node_id() const { return id_; }
  int externals() const { return externals_; }
  const Rational& pair(InterfaceId in, InterfaceId out) const {
    return matrix_[static_cast<std::size_t>(slot(in)) * (externals_ + 1) + slot(out)];
  }
  const Rational& divergent(InterfaceId iface) const { return div_[slot(iface)]; }
  const Rational& convergent(InterfaceId iface) const { return conv_[slot(iface)]; }

 private:
  int slot(InterfaceId iface) const {
    const int s = iface.is_local() ? 0 : iface.index() + 1;
    if (s > externals_ || s < 0)
      throw std::invalid_argument("unknown interface " + iface.str() + " at node " + id_);
    return s;
  }

  std::string id_;
  int externals_;
  std::vector<Rational> matrix_;
  std::vector<Rational> div_, conv_;
};

/// Allocation graph: nodes with interfaces and a non-negative allocation
/// matrix, joined by links with fixed positive directed capacities. Matrix
/// entry (i, j) is the pair allocation granted in total to paths entering at
/// i and leaving at j; divergent/convergent are the row/column sums, cached
/// and kept current by set_pair_allocation. All read operations are safe for
/// concurrent use; mutation requires exclusive access.
class AllocationGraph {
 public:
  int add_node(const std::string& id, int external_interfaces);

  /// Joins two external interfaces of distinct nodes. Self-links, multi-edges
  /// between a node pair, and re-use of an interface are rejected.
  void add_link(const LinkEnd& a, const LinkEnd& b, const Rational& cap_a_to_b,
                const Rational& cap_b_to_a);

  /// Replaces one matrix entry (value must be >= 0). Returns the capacity
  /// violations the change introduced, if any; the caller decides what to do
  /// with a now-invalid graph.
  std::vector<Violation> set_pair_allocation(const std::string& node, InterfaceId in,
                                             InterfaceId out, const Rational& value);

  const Rational& pair_allocation(const std::string& node, InterfaceId in,
                                  InterfaceId out) const;
  const Rational& divergent(const std::string& node, InterfaceId iface) const;
  const Rational& convergent(const std::string& node, InterfaceId iface) const;

  /// Empty result iff every matrix/capacity/wiring invariant holds.
  std::vector<Violation> validate() const;

  PathClass classify_path(const Path& path) const;

  // --- lookups ---
  int node_count() const { return static_cast<int>(nodes_.size()); }
  bool has_node(const std::string& id) const { return index_.count(id) != 0; }
  int node_index(const std::string& id) const;
  const std::string& node_id(int index) const { return nodes_[index].id; }
  int external_interfaces(const std::string& node) const;
  const std::vector<Link>& links() const { return links_; }

  /// The far end of the link at (node, iface); throws if iface is local or
  /// unlinked.
  LinkEnd peer(const std::string& node, InterfaceId iface) const;

  /// Directed capacity of the edge arriving at (node, iface).
  const Rational& capacity_in(const std::string& node, InterfaceId iface) const;
  /// Directed capacity of the edge leaving (node, iface).
  const Rational& capacity_out(const std::string& node, InterfaceId iface) const;

  bool has_link_at(const std::string& node, InterfaceId iface) const;
  int link_index_at(const std::string& node, InterfaceId iface) const;

  /// The unique link joining two nodes, or nullptr when they are not
  /// adjacent (multi-edges are rejected at construction).
  const Link* find_link(const std::string& a, const std::string& b) const;

  /// Copy of one node's matrix and derived sums.
  NodeMatrix node_matrix(const std::string& node) const;

 private:
  struct Node {
    std::string id;
    int externals = 0;
    std::vector<Rational> matrix;     // (externals + 1)^2, row-major, slot 0 = local
    std::vector<Rational> div, conv;  // one per slot, kept in sync with matrix
    std::vector<int> link_at;         // per external interface, -1 when unlinked
  };

  int slot(InterfaceId iface) const { return iface.is_local() ? 0 : iface.index() + 1; }
  const Node& node_at(const std::string& id) const;
  Node& node_mut(const std::string& id);
  void check_iface(const Node& n, InterfaceId iface) const;
  void append_capacity_violations(const Node& n, InterfaceId iface,
                                  std::vector<Violation>* out) const;

  std::vector<Node> nodes_;
  std::map<std::string, int> index_;
  std::vector<Link> links_;
  std::map<std::pair<std::string, std::string>, int> link_by_pair_;
};

/// Entry points used by tests and the worked examples: the divergent and
/// convergent as standalone operations (lookup errors throw).
inline const Rational& divergent(const AllocationGraph& g, const std::string& node,
                                 InterfaceId iface) {
  return g.divergent(node, iface);
}
inline const Rational& convergent(const AllocationGraph& g, const std::string& node,
                                  InterfaceId iface) {
  return g.convergent(node, iface);
}
inline std::vector<Violation> validate_graph(const AllocationGraph& g) { return g.validate(); }
inline PathClass classify_path(const AllocationGraph& g, const Path& p) {
  return g.classify_path(p);
}

}  // namespace pathalloc

#endif  // PATHALLOC_GRAPH_HPP
