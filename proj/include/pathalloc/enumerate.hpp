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

#ifndef PATHALLOC_ENUMERATE_HPP
#define PATHALLOC_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "pathalloc/graph.hpp"

namespace pathalloc::oracle {

/// Terminated mode yields every terminated path of length <= bound (looping
/// and invalid paths included); preliminary mode yields the preliminary
/// paths of length exactly bound.
enum class EnumMode { kTerminatedUpTo, kPreliminaryExact };

struct EnumFilters {
  /// Restrict to paths whose first hop enters at this (node, interface).
  std::optional<std::pair<std::string, InterfaceId>> start;
  /// Restrict to paths traversing this exact (node, in, out) hop. Pruned
  /// during the walk using hop distances, not post-hoc.
  std::optional<Hop> through_pair;
  /// Drop paths that traverse a zero pair allocation.
  bool valid_only = false;
};

using PathVisitor = std::function<void(const Path&)>;

/// Exhaustive, duplicate-free walk of the requested path set.
void enumerate_paths(const AllocationGraph& g, int bound, EnumMode mode,
                     const EnumFilters& filters, const PathVisitor& visit);

std::vector<Path> collect_paths(const AllocationGraph& g, int bound, EnumMode mode,
                                const EnumFilters& filters = {});

}  // namespace pathalloc::oracle

#endif  // PATHALLOC_ENUMERATE_HPP
