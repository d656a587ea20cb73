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

#include <doctest.h>

#include "pathalloc/allocators.hpp"
#include "pathalloc/path_view.hpp"
#include "support.hpp"

using namespace pathalloc;
using namespace pathalloc::oracle;
using namespace pathalloc::testing;

TEST_CASE("construction preserves the matrix sequence and the gma value") {
  AllocationGraph g = fig_fixture();
  const Path pi1 = fixture_pi1();
  const SaturatingGraph sg = build_saturating_graph(g, pi1);

  CHECK(sg.path.size() == pi1.size());
  const RationalPathView original = make_path_view(g, pi1);
  const RationalPathView image = make_path_view(sg.graph, sg.path);
  for (std::size_t k = 0; k < pi1.size(); ++k) {
    CHECK(image.hop(k).pair_alloc == original.hop(k).pair_alloc);
    CHECK(image.hop(k).div_in == original.hop(k).div_in);
    CHECK(image.hop(k).conv_out == original.hop(k).conv_out);
  }
  CHECK(gma_direct(image).value == gma_direct(original).value);
  CHECK(gma_direct(image).argmin_index == gma_direct(original).argmin_index);
}

TEST_CASE("constructed graph validates") {
  AllocationGraph g = fig_fixture();
  CHECK(build_saturating_graph(g, fixture_pi1()).graph.validate().empty());
  CHECK(build_saturating_graph(g, fixture_pi2()).graph.validate().empty());
  Rng rng(404);
  int built = 0;
  while (built < 10) {
    AllocationGraph h = random_small_graph(rng);
    const auto path = random_valid_terminated_path(rng, h);
    if (!path) continue;
    CHECK(build_saturating_graph(h, *path).graph.validate().empty());
    ++built;
  }
}

TEST_CASE("the fixture's long path saturates its minimizer pair exactly") {
  AllocationGraph g = fig_fixture();
  const SaturatingGraph sg = build_saturating_graph(g, fixture_pi1());
  // The C copy keeps its U-turn entry, so walks can bounce back once; a
  // bound of twice the chain length covers every valid walk.
  CHECK(check_saturation(sg, 2 * sg.graph.node_count()) == Rational(1));
}

TEST_CASE("single-hop path saturates trivially") {
  AllocationGraph g;
  g.add_node("solo", 1);
  g.add_node("peer", 1);
  g.set_pair_allocation("solo", InterfaceId::local(), InterfaceId::local(), Rational(3, 7));
  g.set_pair_allocation("solo", InterfaceId::local(), InterfaceId::external(0), 1);
  g.set_pair_allocation("peer", InterfaceId::external(0), InterfaceId::local(), 1);
  g.add_link({"solo", InterfaceId::external(0)}, {"peer", InterfaceId::external(0)}, 5, 5);
  const Path path{{"solo", InterfaceId::local(), InterfaceId::local()}};
  const SaturatingGraph sg = build_saturating_graph(g, path);
  CHECK(check_saturation(sg) == Rational(1));
}

TEST_CASE("random zero-diagonal instances saturate exactly") {
  Rng rng(505);
  RandomGraphOptions opt;
  opt.max_nodes = 6;
  opt.diagonal_probability = 0;  // no U-turn entries: walks in the image stay simple
  opt.zero_probability = 0.1;
  int done = 0;
  while (done < 8) {
    AllocationGraph g = random_small_graph(rng, opt);
    const auto path = random_valid_terminated_path(rng, g, 6);
    if (!path) continue;
    const SaturatingGraph sg = build_saturating_graph(g, *path);
    CHECK(check_saturation(sg) == Rational(1));
    ++done;
  }
}

TEST_CASE("preconditions and incomplete enumeration are reported") {
  AllocationGraph g = fig_fixture();
  // preliminary path
  CHECK_THROWS_AS(build_saturating_graph(g, {fixture_pi1()[0]}), std::invalid_argument);
  // invalid path
  AllocationGraph broken = fig_fixture();
  broken.set_pair_allocation("B", InterfaceId::external(0), InterfaceId::external(1), 0);
  CHECK_THROWS_AS(build_saturating_graph(broken, fixture_pi1()), std::invalid_argument);
  // bound too small to cover the bouncing walks
  const SaturatingGraph sg = build_saturating_graph(g, fixture_pi1());
  CHECK_THROWS_AS(check_saturation(sg, 3), EnumerationIncompleteError);
}
