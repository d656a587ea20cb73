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

#ifndef PATHALLOC_RATIONAL_HPP
#define PATHALLOC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pathalloc {

/// Exact arbitrary-precision rational. All core resource arithmetic runs on
/// this type; `double` is the opt-in inexact mode for large simulations.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical "p/q" form, denominator always present ("3/4", "100/1").
inline std::string format_resource(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "p/q" or a bare integer "p". Rejects negative values and q == 0.
inline Rational parse_resource(const std::string& text) {
  Rational r;
  try {
    r = Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (r < 0) throw std::invalid_argument("resource must be non-negative: '" + text + "'");
  return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

}  // namespace pathalloc

#endif  // PATHALLOC_RATIONAL_HPP
