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

#ifndef PATHALLOC_SATURATION_HPP
#define PATHALLOC_SATURATION_HPP

#include <stdexcept>

#include "pathalloc/graph.hpp"

namespace pathalloc::oracle {

struct SaturatingGraph {
  AllocationGraph graph;
  Path path;           // image of the input path, same matrix sequence
  Hop minimizer_pair;  // the pair whose allocation the path set saturates
};

/// The tightness witness: duplicates the on-path nodes per occurrence, drops
/// everything off-path, and attaches two-interface leaf nodes to the unused
/// external interfaces. Leaves before the minimizer feed it with a single
/// (local -> external) pair allocation equal to the adjacent divergent;
/// leaves after it drain through (external -> local) pair allocations equal
/// to the adjacent convergent; leaves at the minimizer hop stay zero-filled.
/// The image path has the same matrix sequence, hence the same gma value.
SaturatingGraph build_saturating_graph(const AllocationGraph& g, const Path& path);

class EnumerationIncompleteError : public std::runtime_error {
 public:
  explicit EnumerationIncompleteError(const std::string& what) : std::runtime_error(what) {}
};

/// Sums gma over all valid terminated paths through the minimizer pair
/// (multiplicity counted) and divides by its pair allocation. `bound` 0
/// picks node count + 1, enough whenever no matrix lets a walk turn back on
/// itself; if any valid walk still extends at the bound, the enumeration is
/// incomplete and an error is thrown instead of a silently low result.
Rational check_saturation(const SaturatingGraph& sg, int bound = 0);

}  // namespace pathalloc::oracle

#endif  // PATHALLOC_SATURATION_HPP
