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

#ifndef PATHALLOC_ORACLE_HPP
#define PATHALLOC_ORACLE_HPP

#include <vector>

#include "pathalloc/graph.hpp"

namespace pathalloc::oracle {

/// Evaluates prod(a) + sum_k (1 - a_k) * prod_{i>k} a_i, which telescopes to
/// exactly 1 for any positive inputs. Non-positive inputs are rejected.
Rational telescoping_identity(const std::vector<Rational>& values);

struct MonotonicityCheck {
  Rational before;
  Rational after;
  bool ok;  // after >= before
};

/// Raises the pair allocation traversed by `path` at `hop` (0-based) by
/// `delta` on a copy of the graph and compares the gma values. The path must
/// be simple; a raised entry on a looping path would also touch other hops
/// of the same node.
MonotonicityCheck check_monotonicity(const AllocationGraph& g, const Path& path, std::size_t hop,
                                     const Rational& delta);

}  // namespace pathalloc::oracle

#endif  // PATHALLOC_ORACLE_HPP
