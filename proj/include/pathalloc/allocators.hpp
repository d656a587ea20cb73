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

#ifndef PATHALLOC_ALLOCATORS_HPP
#define PATHALLOC_ALLOCATORS_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pathalloc/path_view.hpp"

// Path allocators. Every function in this header is a pure function of a
// PathView: allocators never see the graph, only the on-path triples. Paths
// traversing a zero pair allocation get allocation 0 (no division is ever
// reached for them); the argmin of a zero allocation is reported as 1.

namespace pathalloc {

namespace detail {
template <class Number>
const Number& min_of(const Number& a, const Number& b) {
  return b < a ? b : a;
}
template <class Number>
const Number& max_of(const Number& a, const Number& b) {
  return a < b ? b : a;
}
template <class Number>
void require_nonempty(const PathView<Number>& view) {
  if (view.empty()) throw std::invalid_argument("empty path view");
}
}  // namespace detail

/// First-cut allocator: splits the first pair allocation proportionally at
/// every subsequent node,  M1 * prod_{k>=2} Mk / div_k.
template <class Number>
Number alloc_a1(const PathView<Number>& view) {
  detail::require_nonempty(view);
  if (!view.valid()) return Number(0);
  Number value = view.hop(0).pair_alloc;
  for (std::size_t k = 1; k < view.length(); ++k)
    value = value * view.hop(k).pair_alloc / view.hop(k).div_in;
  return value;
}

/// Disparity-compensated allocator: M1 * prod_{k>=2} Mk / max(conv_{k-1}, div_k).
template <class Number>
Number alloc_a2(const PathView<Number>& view) {
  detail::require_nonempty(view);
  if (!view.valid()) return Number(0);
  Number value = view.hop(0).pair_alloc;
  for (std::size_t k = 1; k < view.length(); ++k)
    value = value * view.hop(k).pair_alloc /
            detail::max_of(view.hop(k - 1).conv_out, view.hop(k).div_in);
  return value;
}

/// Full result of a gma run over one view.
template <class Number>
struct AllocationTrace {
  Number value;
  std::size_t argmin_index;             // 1-based; smallest minimizer; 1 for zero allocations
  std::vector<Number> scaling_factors;  // f(1)..f(l), f(1) = 1, each in (0, 1]
  std::vector<Number> prefix_allocs;    // gma of every prefix, non-increasing
};

/// gma via the scaling-factor recursion:
///   f(1) = 1,  f(k) = min(1, conv_{k-1} * f(k-1) / div_k),
///   value(z) = f(z) * prod_{k<=z} Mk / prod_{k<z} conv_k.
/// The minimizer moves to hop k exactly when the recursion clamps f(k) to 1
/// from above (conv_{k-1} * f(k-1) > div_k); ties keep the smaller index.
template <class Number>
AllocationTrace<Number> gma_recursive(const PathView<Number>& view) {
  detail::require_nonempty(view);
  const std::size_t len = view.length();
  AllocationTrace<Number> trace;
  trace.scaling_factors.reserve(len);
  trace.prefix_allocs.reserve(len);

  bool dead = view.hop(0).pair_alloc == Number(0);
  Number f = Number(1);
  Number pair_product = view.hop(0).pair_alloc;
  Number conv_product = Number(1);
  std::size_t argmin = 1;
  trace.scaling_factors.push_back(f);
  trace.prefix_allocs.push_back(dead ? Number(0) : pair_product);

  for (std::size_t k = 1; k < len; ++k) {
    const HopView<Number>& hop = view.hop(k);
    if (dead || hop.pair_alloc == Number(0)) {
      dead = true;
      trace.scaling_factors.push_back(Number(1));
      trace.prefix_allocs.push_back(Number(0));
      continue;
    }
    const Number& conv_prev = view.hop(k - 1).conv_out;
    const Number scaled_conv = conv_prev * f;
    if (scaled_conv > hop.div_in) {
      f = Number(1);
      argmin = k + 1;
    } else {
      f = scaled_conv / hop.div_in;
    }
    pair_product *= hop.pair_alloc;
    conv_product *= conv_prev;
    trace.scaling_factors.push_back(f);
    trace.prefix_allocs.push_back(f * pair_product / conv_product);
  }
  trace.value = trace.prefix_allocs.back();
  trace.argmin_index = dead ? 1 : argmin;
  return trace;
}

namespace detail {

// One step of the min-form recursion:
//   value(k) = min(value(k-1) * Mk / div_k,  aprod(k-1) * Mk)
// with aprod(k) = prod_{j<=k} Mj / conv_j. Ties keep the previous minimizer.
template <class Number>
struct MinFormState {
  Number value;
  Number aprod;
  std::size_t argmin = 1;
  bool dead = false;

  void start(const HopView<Number>& hop) {
    dead = hop.pair_alloc == Number(0);
    value = dead ? Number(0) : hop.pair_alloc;
    if (!dead) aprod = hop.pair_alloc / hop.conv_out;
  }

  // k is the 0-based index of the hop being appended.
  void extend(const HopView<Number>& hop, std::size_t k) {
    if (dead || hop.pair_alloc == Number(0)) {
      dead = true;
      value = Number(0);
      return;
    }
    const Number extended = value * hop.pair_alloc / hop.div_in;
    const Number candidate = aprod * hop.pair_alloc;
    if (candidate < extended) {
      value = candidate;
      argmin = k + 1;
    } else {
      value = extended;
    }
    aprod *= hop.pair_alloc / hop.conv_out;
  }
};

}  // namespace detail

/// gma in the direct min-over-x form,
///   min_x ( prod_{k<x} Mk/conv_k * Mx * prod_{k>x} Mk/div_k ),
/// evaluated in one pass by carrying the running minimum and the running
/// prefix product of Mk/conv_k.
template <class Number>
AllocationTrace<Number> gma_direct(const PathView<Number>& view) {
  detail::require_nonempty(view);
  const std::size_t len = view.length();
  AllocationTrace<Number> trace;
  trace.prefix_allocs.reserve(len);
  trace.scaling_factors.reserve(len);

  detail::MinFormState<Number> state;
  state.start(view.hop(0));
  trace.prefix_allocs.push_back(state.value);
  trace.scaling_factors.push_back(Number(1));

  Number f = Number(1);
  for (std::size_t k = 1; k < len; ++k) {
    state.extend(view.hop(k), k);
    trace.prefix_allocs.push_back(state.value);
    if (state.dead) {
      trace.scaling_factors.push_back(Number(1));
    } else {
      Number scaled = view.hop(k - 1).conv_out * f / view.hop(k).div_in;
      if (Number(1) < scaled) scaled = Number(1);
      f = scaled;
      trace.scaling_factors.push_back(f);
    }
  }
  trace.value = state.value;
  trace.argmin_index = state.dead ? 1 : state.argmin;
  return trace;
}

/// Value-only fast path of gma_direct (no per-hop allocations).
template <class Number>
Number gma_value(const PathView<Number>& view) {
  detail::require_nonempty(view);
  detail::MinFormState<Number> state;
  state.start(view.hop(0));
  for (std::size_t k = 1; k < view.length() && !state.dead; ++k)
    state.extend(view.hop(k), k);
  return state.dead ? Number(0) : state.value;
}

/// gma of the k-hop prefix (1 <= k <= length); equals prefix_allocs[k-1].
template <class Number>
Number gma_prefix(const PathView<Number>& view, std::size_t k) {
  detail::require_nonempty(view);
  if (k < 1 || k > view.length()) throw std::out_of_range("prefix length out of range");
  detail::MinFormState<Number> state;
  state.start(view.hop(0));
  for (std::size_t j = 1; j < k && !state.dead; ++j)
    state.extend(view.hop(j), j);
  return state.dead ? Number(0) : state.value;
}

namespace reference {

/// Quadratic evaluation of the min-over-x product form, term by term.
/// Used as the independent check against the one-pass implementations.
template <class Number>
std::pair<Number, std::size_t> gma_min_form(const PathView<Number>& view) {
  detail::require_nonempty(view);
  if (!view.valid()) return {Number(0), 1};
  const std::size_t len = view.length();
  Number best{};
  std::size_t best_x = 0;
  for (std::size_t x = 1; x <= len; ++x) {
    Number term = Number(1);
    for (std::size_t k = 1; k < x; ++k)
      term *= view.hop(k - 1).pair_alloc / view.hop(k - 1).conv_out;
    term *= view.hop(x - 1).pair_alloc;
    for (std::size_t k = x + 1; k <= len; ++k)
      term *= view.hop(k - 1).pair_alloc / view.hop(k - 1).div_in;
    if (best_x == 0 || term < best) {
      best = term;
      best_x = x;
    }
  }
  return {best, best_x};
}

}  // namespace reference

}  // namespace pathalloc

#endif  // PATHALLOC_ALLOCATORS_HPP
