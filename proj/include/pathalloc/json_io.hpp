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

#ifndef PATHALLOC_JSON_IO_HPP
#define PATHALLOC_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pathalloc/graph.hpp"

namespace pathalloc {

using Json = nlohmann::ordered_json;

/// Serialization mode for resource values: exact emits lowest-terms "p/q"
/// strings and round-trips losslessly; float emits decimal numbers.
enum class NumberMode { kExact, kFloat };

/// Graph document: top-level `mode`, `nodes` (id, interface list, matrix as
/// an array of {in, out, alloc}, zero entries omitted) and `links` (both
/// endpoints plus the two directed capacities). An optional `metadata`
/// object is carried through verbatim.
Json graph_to_json(const AllocationGraph& g, NumberMode mode = NumberMode::kExact,
                   const Json& metadata = Json());

AllocationGraph graph_from_json(const Json& doc);

std::string graph_to_string(const AllocationGraph& g, NumberMode mode = NumberMode::kExact,
                            const Json& metadata = Json());

AllocationGraph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const AllocationGraph& g,
                     NumberMode mode = NumberMode::kExact, const Json& metadata = Json());

}  // namespace pathalloc

#endif  // PATHALLOC_JSON_IO_HPP
