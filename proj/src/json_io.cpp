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

#include "pathalloc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pathalloc {

namespace {

Json resource_to_json(const Rational& r, NumberMode mode) {
  if (mode == NumberMode::kExact) return format_resource(r);
  return to_double(r);
}

Rational resource_from_json(const Json& v) {
  if (v.is_string()) return parse_resource(v.get<std::string>());
  if (v.is_number_integer()) {
    auto n = v.get<long long>();
    if (n < 0) throw std::invalid_argument("negative resource in document");
    return Rational(n);
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d < 0) throw std::invalid_argument("negative resource in document");
    return Rational(d);  // exact binary expansion of the double
  }
  throw std::invalid_argument("resource must be a \"p/q\" string or a number");
}

std::vector<InterfaceId> all_interfaces(const AllocationGraph& g, const std::string& node) {
  std::vector<InterfaceId> out{InterfaceId::local()};
  for (int i = 0; i < g.external_interfaces(node); ++i) out.push_back(InterfaceId::external(i));
  return out;
}

}  // namespace

Json graph_to_json(const AllocationGraph& g, NumberMode mode, const Json& metadata) {
  Json doc;
  doc["mode"] = mode == NumberMode::kExact ? "exact" : "float";
  doc["nodes"] = Json::array();
  for (int ni = 0; ni < g.node_count(); ++ni) {
    const std::string& id = g.node_id(ni);
    Json node;
    node["id"] = id;
    Json ifaces = Json::array();
    for (InterfaceId iface : all_interfaces(g, id)) ifaces.push_back(iface.str());
    node["interfaces"] = ifaces;
    Json matrix = Json::array();
    for (InterfaceId in : all_interfaces(g, id)) {
      for (InterfaceId out : all_interfaces(g, id)) {
        const Rational& v = g.pair_allocation(id, in, out);
        if (v == 0) continue;
        Json entry;
        entry["in"] = in.str();
        entry["out"] = out.str();
        entry["alloc"] = resource_to_json(v, mode);
        matrix.push_back(entry);
      }
    }
    node["matrix"] = matrix;
    doc["nodes"].push_back(node);
  }
  doc["links"] = Json::array();
  for (const Link& l : g.links()) {
    Json link;
    link["a"] = Json{{"node", l.a.node}, {"interface", l.a.iface.str()}};
    link["b"] = Json{{"node", l.b.node}, {"interface", l.b.iface.str()}};
    link["cap_a_to_b"] = resource_to_json(l.cap_a_to_b, mode);
    link["cap_b_to_a"] = resource_to_json(l.cap_b_to_a, mode);
    doc["links"].push_back(link);
  }
  if (!metadata.is_null()) doc["metadata"] = metadata;
  return doc;
}

AllocationGraph graph_from_json(const Json& doc) {
  AllocationGraph g;
  for (const Json& node : doc.at("nodes")) {
    const auto id = node.at("id").get<std::string>();
    int externals = 0;
    int locals = 0;
    for (const Json& iface : node.at("interfaces")) {
      if (InterfaceId::parse(iface.get<std::string>()).is_local())
        ++locals;
      else
        ++externals;
    }
    if (locals != 1)
      throw std::invalid_argument("node " + id + " must list exactly one local interface");
    g.add_node(id, externals);
    for (const Json& entry : node.at("matrix")) {
      g.set_pair_allocation(id, InterfaceId::parse(entry.at("in").get<std::string>()),
                            InterfaceId::parse(entry.at("out").get<std::string>()),
                            resource_from_json(entry.at("alloc")));
    }
  }
  for (const Json& link : doc.at("links")) {
    auto end = [](const Json& j) {
      return LinkEnd{j.at("node").get<std::string>(),
                     InterfaceId::parse(j.at("interface").get<std::string>())};
    };
    g.add_link(end(link.at("a")), end(link.at("b")), resource_from_json(link.at("cap_a_to_b")),
               resource_from_json(link.at("cap_b_to_a")));
  }
  return g;
}

std::string graph_to_string(const AllocationGraph& g, NumberMode mode, const Json& metadata) {
  return graph_to_json(g, mode, metadata).dump(2) + "\n";
}

AllocationGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  Json doc = Json::parse(in);
  return graph_from_json(doc);
}

void save_graph_file(const std::string& path, const AllocationGraph& g, NumberMode mode,
                     const Json& metadata) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << graph_to_string(g, mode, metadata);
}

}  // namespace pathalloc
