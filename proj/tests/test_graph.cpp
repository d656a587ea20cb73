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

#include <doctest.h>

#include "pathalloc/json_io.hpp"
#include "support.hpp"

using namespace pathalloc;
using namespace pathalloc::testing;

namespace {
const InterfaceId kLocal = InterfaceId::local();
const InterfaceId kE0 = InterfaceId::external(0);
const InterfaceId kE1 = InterfaceId::external(1);
}  // namespace

TEST_CASE("divergent and convergent on the fixture") {
  AllocationGraph g = fig_fixture();
  CHECK(divergent(g, "B", kE0) == Rational(4));
  CHECK(divergent(g, "B", kE1) == Rational(4));
  CHECK(convergent(g, "B", kE0) == Rational(4));
  CHECK(divergent(g, "A", kE0) == Rational(2));
  CHECK(convergent(g, "A", kE0) == Rational(2));
  CHECK(divergent(g, "A1", kE0) == Rational(1));
  CHECK(divergent(g, "C", kE0) == Rational(4));
  CHECK(convergent(g, "C", kE0) == Rational(4));
  CHECK_THROWS_AS(divergent(g, "Z", kE0), std::invalid_argument);
  CHECK_THROWS_AS(divergent(g, "A1", kE1), std::invalid_argument);
}

TEST_CASE("all-zero row and column sum to zero") {
  AllocationGraph g;
  g.add_node("n", 2);
  CHECK(g.divergent("n", kE0) == 0);
  CHECK(g.convergent("n", kE1) == 0);
}

TEST_CASE("derived sums match independent row/column summation") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    AllocationGraph g;
    g.add_node("n", 3);
    std::vector<InterfaceId> ifaces{kLocal, kE0, kE1, InterfaceId::external(2)};
    for (InterfaceId in : ifaces)
      for (InterfaceId out : ifaces)
        g.set_pair_allocation("n", in, out, random_rational(rng, 9, 5, 0.3));
    for (InterfaceId iface : ifaces) {
      Rational row(0), col(0);
      for (InterfaceId other : ifaces) {
        row += g.pair_allocation("n", iface, other);
        col += g.pair_allocation("n", other, iface);
      }
      CHECK(g.divergent("n", iface) == row);
      CHECK(g.convergent("n", iface) == col);
    }
  }
}

TEST_CASE("validate_graph") {
  AllocationGraph g = fig_fixture();
  CHECK(validate_graph(g).empty());

  SUBCASE("divergent pushed one above the incoming capacity") {
    // Row e0 of B currently sums to 4 against capacity 100; the local column
    // carries no constraint of its own, so exactly one violation appears.
    g.set_pair_allocation("B", kE0, kLocal, 99);
    auto violations = validate_graph(g);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::kDivergentExceedsCapacity);
    CHECK(violations[0].node == "B");
    CHECK(violations[0].iface == kE0);
    CHECK(violations[0].quantity == Rational(101));
    CHECK(violations[0].limit == Rational(100));
  }

  SUBCASE("unlinked external interface is reported") {
    AllocationGraph h;
    h.add_node("x", 1);
    auto violations = validate_graph(h);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::kUnlinkedInterface);
  }
}

TEST_CASE("construction rejects self-links, multi-edges and interface reuse") {
  AllocationGraph g;
  g.add_node("u", 2);
  g.add_node("v", 2);
  CHECK_THROWS_AS(g.add_link({"u", kE0}, {"u", kE1}, 1, 1), std::invalid_argument);
  g.add_link({"u", kE0}, {"v", kE0}, 1, 1);
  CHECK_THROWS_AS(g.add_link({"u", kE1}, {"v", kE1}, 1, 1), std::invalid_argument);  // multi-edge
  AllocationGraph h;
  h.add_node("u", 1);
  h.add_node("v", 1);
  h.add_node("w", 1);
  h.add_link({"u", kE0}, {"v", kE0}, 1, 1);
  CHECK_THROWS_AS(h.add_link({"u", kE0}, {"w", kE0}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(h.add_link({"w", kE0}, {"w", kE0}, 1, 1), std::invalid_argument);
  AllocationGraph z;
  z.add_node("u", 1);
  z.add_node("v", 1);
  CHECK_THROWS_AS(z.add_link({"u", kE0}, {"v", kE0}, 0, 1), std::invalid_argument);
}

TEST_CASE("classify_path") {
  AllocationGraph g = fig_fixture();

  PathClass c1 = classify_path(g, fixture_pi1());
  CHECK(c1.terminated);
  CHECK(c1.valid);
  CHECK(c1.simple);

  PathClass single = classify_path(g, {{"A1", kLocal, kE0}});
  CHECK_FALSE(single.terminated);
  CHECK(single.valid);
  CHECK(single.simple);

  SUBCASE("zero pair allocation makes a path invalid") {
    g.set_pair_allocation("B", kE0, kE1, 0);
    PathClass c = classify_path(g, fixture_pi1());
    CHECK(c.terminated);
    CHECK_FALSE(c.valid);
  }

  SUBCASE("looping path is classified, not rejected") {
    Path loop = {{"A1", kLocal, kE0},
                 {"A", kE0, kE1},
                 {"B", kE0, kE0},
                 {"A", kE1, kE0},
                 {"A1", kE0, kLocal}};
    PathClass c = classify_path(g, loop);
    CHECK(c.terminated);
    CHECK_FALSE(c.simple);
    CHECK_FALSE(c.valid);  // B has no (e0, e0) entry
  }

  SUBCASE("interface mismatch raises a malformed-path error") {
    Path bad = {{"A1", kLocal, kE0}, {"B", kE0, kE1}};  // A1 links to A, not B
    CHECK_THROWS_AS(classify_path(g, bad), MalformedPathError);
    Path empty;
    CHECK_THROWS_AS(classify_path(g, empty), MalformedPathError);
    Path midlocal = {{"A1", kLocal, kE0}, {"A", kLocal, kE1}};
    CHECK_THROWS_AS(classify_path(g, midlocal), MalformedPathError);
  }
}

TEST_CASE("set_pair_allocation") {
  AllocationGraph g = fig_fixture();

  SUBCASE("raising the A entry to 9 moves the derived sums to 10") {
    raise_fixture_entry(&g);
    CHECK(divergent(g, "A", kE1) == Rational(10));
    CHECK(convergent(g, "A", kE0) == Rational(10));
    CHECK(divergent(g, "A", kE0) == Rational(10));
    CHECK(convergent(g, "A", kE1) == Rational(10));
    CHECK(validate_graph(g).empty());  // capacities are 100
  }

  SUBCASE("writing the current value changes nothing") {
    const std::string before = graph_to_string(g);
    g.set_pair_allocation("A", kE0, kE1, g.pair_allocation("A", kE0, kE1));
    CHECK(graph_to_string(g) == before);
  }

  SUBCASE("random increase moves divergent and convergent by exactly delta") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      AllocationGraph h = random_small_graph(rng);
      const std::string node = h.node_id(rng.uniform_int(0, h.node_count() - 1));
      const int ext = h.external_interfaces(node);
      auto pick = [&](int lo) {
        const int s = rng.uniform_int(lo, ext);
        return s == 0 ? kLocal : InterfaceId::external(s - 1);
      };
      InterfaceId in = pick(0), out = pick(in.is_local() ? 1 : 0);
      const Rational delta = random_rational(rng, 5, 3);
      const Rational div_before = h.divergent(node, in);
      const Rational conv_before = h.convergent(node, out);
      h.set_pair_allocation(node, in, out, h.pair_allocation(node, in, out) + delta);
      CHECK(h.divergent(node, in) == div_before + delta);
      CHECK(h.convergent(node, out) == conv_before + delta);
    }
  }

  SUBCASE("violations are returned but the write still happens") {
    auto violations = g.set_pair_allocation("A1", kE0, kLocal, 1000);
    REQUIRE_FALSE(violations.empty());
    CHECK(g.pair_allocation("A1", kE0, kLocal) == Rational(1000));
  }

  CHECK_THROWS_AS(g.set_pair_allocation("A1", kE0, kLocal, -1), std::invalid_argument);
  CHECK_THROWS_AS(g.set_pair_allocation("zz", kE0, kLocal, 1), std::invalid_argument);
}

TEST_CASE("json round trip is lossless in exact mode") {
  AllocationGraph g = fig_fixture();
  const std::string text = graph_to_string(g);
  AllocationGraph back = graph_from_json(Json::parse(text));
  CHECK(graph_to_string(back) == text);

  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    AllocationGraph h = random_small_graph(rng);
    const std::string doc = graph_to_string(h);
    CHECK(graph_to_string(graph_from_json(Json::parse(doc))) == doc);
  }
}

TEST_CASE("json rejects malformed documents") {
  CHECK_THROWS(graph_from_json(Json::parse(R"({"nodes": [], "links": [{}]})")));
  // two local interfaces
  CHECK_THROWS(graph_from_json(Json::parse(
      R"({"nodes": [{"id": "x", "interfaces": ["local", "local"], "matrix": []}], "links": []})")));
  // negative allocation
  CHECK_THROWS(graph_from_json(Json::parse(
      R"({"nodes": [{"id": "x", "interfaces": ["local", "0"],
          "matrix": [{"in": "local", "out": "0", "alloc": "-1/2"}]}], "links": []})")));
}

TEST_CASE("float mode serializes resources as numbers") {
  AllocationGraph g = fig_fixture();
  Json doc = graph_to_json(g, NumberMode::kFloat);
  CHECK(doc["mode"] == "float");
  CHECK(doc["nodes"][0]["matrix"][0]["alloc"].is_number());
  AllocationGraph back = graph_from_json(doc);  // doubles convert exactly
  CHECK(back.pair_allocation("A1", kLocal, kE0) == Rational(1));
}
