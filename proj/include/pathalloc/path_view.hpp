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

#ifndef PATHALLOC_PATH_VIEW_HPP
#define PATHALLOC_PATH_VIEW_HPP

#include <stdexcept>
#include <vector>

#include "pathalloc/graph.hpp"
#include "pathalloc/rational.hpp"

namespace pathalloc {

/// On-path data for one hop: the traversed pair allocation, the divergent at
/// the hop's in-interface and the convergent at its out-interface.
template <class Number>
struct HopView {
  Number pair_alloc;
  Number div_in;
  Number conv_out;
};

/// The locality capsule: exactly the per-hop triples an allocator may read.
/// Construction rejects triples where the pair allocation exceeds its own
/// row or column sum — such a view cannot come from any allocation matrix.
template <class Number>
class PathView {
 public:
  PathView() = default;

  explicit PathView(std::vector<HopView<Number>> hops) : hops_(std::move(hops)) {
    for (std::size_t k = 0; k < hops_.size(); ++k) {
      const HopView<Number>& h = hops_[k];
      if (h.pair_alloc < Number(0) || h.div_in < Number(0) || h.conv_out < Number(0))
        throw std::invalid_argument("negative value in path view hop " + std::to_string(k));
      if (h.pair_alloc > h.div_in || h.pair_alloc > h.conv_out)
        throw std::invalid_argument("pair allocation exceeds row/column sum at hop " +
                                    std::to_string(k));
    }
  }

  std::size_t length() const { return hops_.size(); }
  bool empty() const { return hops_.empty(); }
  const HopView<Number>& hop(std::size_t k) const { return hops_[k]; }
  const std::vector<HopView<Number>>& hops() const { return hops_; }

  bool valid() const {
    for (const auto& h : hops_)
      if (h.pair_alloc == Number(0)) return false;
    return true;
  }

  PathView prefix(std::size_t k) const {
    if (k < 1 || k > hops_.size()) throw std::out_of_range("prefix length out of range");
    return PathView(std::vector<HopView<Number>>(hops_.begin(), hops_.begin() + k));
  }

 private:
  std::vector<HopView<Number>> hops_;
};

using RationalPathView = PathView<Rational>;
using FloatPathView = PathView<double>;

/// Extracts the on-path triples of `path` from the graph. Adjacency is
/// checked the same way classify_path does.
inline RationalPathView make_path_view(const AllocationGraph& g, const Path& path) {
  g.classify_path(path);  // throws MalformedPathError on bad hop lists
  std::vector<HopView<Rational>> hops;
  hops.reserve(path.size());
  for (const Hop& h : path)
    hops.push_back({g.pair_allocation(h.node, h.in, h.out), g.divergent(h.node, h.in),
                    g.convergent(h.node, h.out)});
  return RationalPathView(std::move(hops));
}

inline FloatPathView to_float_view(const RationalPathView& view) {
  std::vector<HopView<double>> hops;
  hops.reserve(view.length());
  for (const auto& h : view.hops())
    hops.push_back({to_double(h.pair_alloc), to_double(h.div_in), to_double(h.conv_out)});
  return FloatPathView(std::move(hops));
}

}  // namespace pathalloc

#endif  // PATHALLOC_PATH_VIEW_HPP
