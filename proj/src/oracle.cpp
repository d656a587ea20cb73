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

#include "pathalloc/oracle.hpp"

#include "pathalloc/allocators.hpp"
#include "pathalloc/path_view.hpp"

namespace pathalloc::oracle {

Rational telescoping_identity(const std::vector<Rational>& values) {
  if (values.empty()) throw std::invalid_argument("need at least one value");
  for (const Rational& a : values)
    if (a <= 0) throw std::invalid_argument("values must be strictly positive");
  Rational product(1);
  for (const Rational& a : values) product *= a;
  Rational result = product;
  for (std::size_t k = 0; k < values.size(); ++k) {
    Rational tail(1);
    for (std::size_t i = k + 1; i < values.size(); ++i) tail *= values[i];
    result += (Rational(1) - values[k]) * tail;
  }
  return result;
}

MonotonicityCheck check_monotonicity(const AllocationGraph& g, const Path& path, std::size_t hop,
                                     const Rational& delta) {
  if (hop >= path.size()) throw std::out_of_range("hop index out of range");
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  if (!g.classify_path(path).simple)
    throw std::invalid_argument("monotonicity is only meaningful for simple paths");

  const Rational before = gma_value(make_path_view(g, path));
  AllocationGraph raised = g;
  const Hop& h = path[hop];
  raised.set_pair_allocation(h.node, h.in, h.out,
                             raised.pair_allocation(h.node, h.in, h.out) + delta);
  const Rational after = gma_value(make_path_view(raised, path));
  return {before, after, after >= before};
}

}  // namespace pathalloc::oracle
