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

#include "pathalloc/reservation.hpp"

#include <ostream>

namespace pathalloc::sim {

StepOutcome reservation_step(const NodeMatrix& node, InterfaceId in, InterfaceId out,
                             const ReservationMessage& incoming) {
  const Rational& pair = node.pair(in, out);
  ReservationMessage msg = incoming;
  msg.hop_index = incoming.hop_index + 1;

  const bool already_dead = incoming.hop_index > 0 && incoming.running_product == 0;
  if (pair == 0 || already_dead) {
    // Invalid hop: the preliminary allocation is 0 from here on. That is
    // below any positive threshold; a zero threshold lets it through.
    msg.running_product = 0;
    msg.scale = 1;
    msg.carried_conv = 0;
    return {Rational(0) < incoming.threshold, Rational(0), msg};
  }

  if (incoming.hop_index == 0) {
    msg.scale = 1;
    msg.running_product = pair;
  } else {
    // conv of the previous node enters the product unscaled; the message
    // carries scale * conv, so divide the scale back out.
    const Rational conv_prev = incoming.carried_conv / incoming.scale;
    Rational f = incoming.carried_conv / node.divergent(in);
    if (Rational(1) < f) f = 1;
    msg.scale = f;
    msg.running_product = incoming.running_product * pair / conv_prev;
  }
  msg.carried_conv = msg.scale * node.convergent(out);
  const Rational prefix = msg.scale * msg.running_product;
  return {prefix < incoming.threshold, prefix, msg};
}

ReservationResult run_reservation(const AllocationGraph& g, const Path& path,
                                  const Rational& threshold) {
  if (threshold < 0) throw std::invalid_argument("threshold must be non-negative");
  const PathClass cls = g.classify_path(path);  // adjacency errors surface here
  if (!cls.terminated) throw std::invalid_argument("reservations run on terminated paths");

  ReservationResult result;
  ReservationMessage msg;
  msg.threshold = threshold;

  for (std::size_t k = 0; k < path.size(); ++k) {
    const Hop& hop = path[k];
    const StepOutcome outcome = reservation_step(g.node_matrix(hop.node), hop.in, hop.out, msg);
    result.trace.push_back({hop.node, outcome.prefix_alloc, outcome.message.scale});
    if (outcome.dropped) {
      result.status = ReservationResult::Status::kDropped;
      result.value = outcome.prefix_alloc;
      result.drop_hop = k + 1;
      return result;
    }
    msg = outcome.message;
  }
  result.status = ReservationResult::Status::kGranted;
  result.value = result.trace.back().prefix_alloc;
  return result;
}

void write_trace(std::ostream& out, const ReservationResult& result) {
  for (std::size_t k = 0; k < result.trace.size(); ++k) {
    const HopRecord& rec = result.trace[k];
    out << (k + 1) << '\t' << rec.node << '\t' << format_resource(rec.prefix_alloc) << '\t'
        << format_resource(rec.scale) << '\n';
  }
  if (result.granted())
    out << "granted\t" << format_resource(result.value) << '\n';
  else
    out << "dropped\thop " << result.drop_hop << '\t' << format_resource(result.value) << '\n';
}

}  // namespace pathalloc::sim
