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

#ifndef PATHALLOC_TESTS_SUPPORT_HPP
#define PATHALLOC_TESTS_SUPPORT_HPP

#include "pathalloc/graph.hpp"
#include "pathalloc/random_inputs.hpp"
#include "pathalloc/rng.hpp"

namespace pathalloc::testing {

using oracle::random_rational;
using oracle::random_small_graph;
using oracle::random_valid_terminated_path;
using oracle::random_view;
using oracle::RandomGraphOptions;

// The four-node example graph used throughout the unit tests. Interface
// letters from the figure map to indices as follows (locals in brackets):
//   A1: [a]=local, b=0          A: [.]=local, c=0, d=1
//   B:  [r]=local, e=0, f=1     C: [h]=local, g=0
// Pair allocations are bidirectional:
//   A1: (local,b)=(b,local)=1
//   A:  (c,d)=(d,c)=1, (c,local)=(local,c)=1, (d,local)=(local,d)=1
//   B:  (local,e)=(e,local)=2, (local,f)=(f,local)=2, (e,f)=(f,e)=2
//   C:  (g,local)=(local,g)=1, (g,g)=3
// The (g,g) entry is the one free choice: row g must sum to 4 and C has no
// further interface to carry the remainder. Every link gets capacity 100 in
// both directions, roomy enough for the raised-entry variant below.
inline AllocationGraph fig_fixture() {
  AllocationGraph g;
  g.add_node("A1", 1);
  g.add_node("A", 2);
  g.add_node("B", 2);
  g.add_node("C", 1);

  const auto local = InterfaceId::local();
  const auto e0 = InterfaceId::external(0);
  const auto e1 = InterfaceId::external(1);

  g.set_pair_allocation("A1", local, e0, 1);
  g.set_pair_allocation("A1", e0, local, 1);

  g.set_pair_allocation("A", e0, e1, 1);
  g.set_pair_allocation("A", e1, e0, 1);
  g.set_pair_allocation("A", e0, local, 1);
  g.set_pair_allocation("A", local, e0, 1);
  g.set_pair_allocation("A", e1, local, 1);
  g.set_pair_allocation("A", local, e1, 1);

  g.set_pair_allocation("B", local, e0, 2);
  g.set_pair_allocation("B", e0, local, 2);
  g.set_pair_allocation("B", local, e1, 2);
  g.set_pair_allocation("B", e1, local, 2);
  g.set_pair_allocation("B", e0, e1, 2);
  g.set_pair_allocation("B", e1, e0, 2);

  g.set_pair_allocation("C", e0, local, 1);
  g.set_pair_allocation("C", local, e0, 1);
  g.set_pair_allocation("C", e0, e0, 3);

  const Rational cap(100);
  g.add_link({"A1", e0}, {"A", e0}, cap, cap);
  g.add_link({"A", e1}, {"B", e0}, cap, cap);
  g.add_link({"B", e1}, {"C", e0}, cap, cap);
  return g;
}

/// Raises the bidirectional pair allocation between A's two external
/// interfaces to 9, the variant used by the raised-entry examples.
inline void raise_fixture_entry(AllocationGraph* g) {
  g->set_pair_allocation("A", InterfaceId::external(0), InterfaceId::external(1), 9);
  g->set_pair_allocation("A", InterfaceId::external(1), InterfaceId::external(0), 9);
}

inline Path fixture_pi1() {
  const auto local = InterfaceId::local();
  return {{"A1", local, InterfaceId::external(0)},
          {"A", InterfaceId::external(0), InterfaceId::external(1)},
          {"B", InterfaceId::external(0), InterfaceId::external(1)},
          {"C", InterfaceId::external(0), local}};
}

inline Path fixture_pi2() {
  const auto local = InterfaceId::local();
  return {{"B", local, InterfaceId::external(0)},
          {"A", InterfaceId::external(1), InterfaceId::external(0)},
          {"A1", InterfaceId::external(0), local}};
}

inline Path fixture_pi3() {
  const auto local = InterfaceId::local();
  return {{"C", local, InterfaceId::external(0)},
          {"B", InterfaceId::external(1), InterfaceId::external(0)},
          {"A", InterfaceId::external(1), InterfaceId::external(0)},
          {"A1", InterfaceId::external(0), local}};
}

}  // namespace pathalloc::testing

#endif  // PATHALLOC_TESTS_SUPPORT_HPP
