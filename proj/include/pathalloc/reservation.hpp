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

#ifndef PATHALLOC_RESERVATION_HPP
#define PATHALLOC_RESERVATION_HPP

#include <iosfwd>
#include <vector>

#include "pathalloc/graph.hpp"

namespace pathalloc::sim {

/// The whole cross-hop state of a reservation: three scalars plus the hop
/// counter and the caller's threshold. running_product accumulates
/// prod(M) / prod(conv); scale is the current scaling factor; carried_conv
/// is scale times the convergent at the latest egress, the only quantity
/// the next node needs from its predecessor.
struct ReservationMessage {
  Rational running_product;
  Rational scale;
  Rational carried_conv;
  std::size_t hop_index = 0;  // hops processed so far
  Rational threshold;
};

struct StepOutcome {
  bool dropped;
  Rational prefix_alloc;       // preliminary allocation after this hop
  ReservationMessage message;  // updated message when forwarded
};

/// One node's handler. It sees its own matrix, the two interfaces the
/// message travels through, and the message itself; nothing else exists in
/// its signature. Nodes keep no state between reservations.
StepOutcome reservation_step(const NodeMatrix& node, InterfaceId in, InterfaceId out,
                             const ReservationMessage& incoming);

struct HopRecord {
  std::string node;
  Rational prefix_alloc;
  Rational scale;
};

struct ReservationResult {
  enum class Status { kGranted, kDropped };
  Status status;
  Rational value;            // granted allocation, or the value that fell below
  std::size_t drop_hop = 0;  // 1-based, set when dropped
  std::vector<HopRecord> trace;

  bool granted() const { return status == Status::kGranted; }
};

/// Relays the message hop by hop along a terminated path. Each node updates
/// the message from its own matrix alone; the relay only moves the message
/// across links. Dropped at the first hop whose preliminary allocation
/// falls below the threshold (prefixes are non-increasing, so the first
/// crossing is the only one).
ReservationResult run_reservation(const AllocationGraph& g, const Path& path,
                                  const Rational& threshold);

/// One line per hop: node, preliminary allocation, scale.
void write_trace(std::ostream& out, const ReservationResult& result);

}  // namespace pathalloc::sim

#endif  // PATHALLOC_RESERVATION_HPP
