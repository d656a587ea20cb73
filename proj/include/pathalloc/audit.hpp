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

#ifndef PATHALLOC_AUDIT_HPP
#define PATHALLOC_AUDIT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pathalloc/graph.hpp"

namespace pathalloc::oracle {

enum class AllocatorKind { kA1, kA2, kGma };

std::string allocator_name(AllocatorKind kind);

struct PairAuditRow {
  std::string node;
  InterfaceId in;
  InterfaceId out;
  Rational limit;  // the pair allocation
  Rational sum;    // aggregated path allocations through the pair
  bool over_allocated;

  Rational utilization() const { return limit == 0 ? Rational(0) : Rational(sum / limit); }
};

struct EdgeAuditRow {
  std::string from_node;
  InterfaceId from_iface;
  std::string to_node;
  InterfaceId to_iface;
  Rational capacity;
  Rational sum;
  bool over_allocated;

  Rational utilization() const { return capacity == 0 ? Rational(0) : Rational(sum / capacity); }
};

struct AuditReport {
  std::vector<PairAuditRow> pairs;
  std::vector<EdgeAuditRow> edges;

  bool any_over_allocated() const;
  std::vector<const PairAuditRow*> over_allocated_pairs() const;
  /// Tab-separated rows: kind, node(s), in, out, limit, sum, utilization, flag.
  void write_delimited(std::ostream& out) const;
};

/// Sums the chosen allocator over an explicit set of terminated paths,
/// counting one contribution per traversal of a pair or directed edge.
AuditReport audit_paths(const AllocationGraph& g, const std::vector<Path>& paths,
                        AllocatorKind kind);

/// Sums over all terminated paths of length <= bound. With strict_lemma the
/// preliminary paths of length exactly `bound` anchored at local interfaces
/// are added to their starting (local, j) pair, matching the inductive
/// over-allocation bound those pairs must satisfy.
AuditReport audit_over_allocation(const AllocationGraph& g, AllocatorKind kind, int bound,
                                  bool strict_lemma = false);

/// One anchored bound check: paths start at (node, local, out).
struct AnchorAuditRow {
  std::string node;
  InterfaceId out;
  int bound;               // X
  Rational preliminary;    // sum over preliminary paths of length exactly X
  Rational terminated;     // sum over terminated paths of length <= X
  Rational limit;          // the (local, out) pair allocation
  bool over_allocated;     // preliminary + terminated > limit
};

/// The anchored bound for every anchor and every X in 1..max_x, computed in
/// one walk per anchor without materializing paths.
std::vector<AnchorAuditRow> anchored_sum_audit(const AllocationGraph& g, AllocatorKind kind,
                                               int max_x);

}  // namespace pathalloc::oracle

#endif  // PATHALLOC_AUDIT_HPP
