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

#ifndef PATHALLOC_RNG_HPP
#define PATHALLOC_RNG_HPP

#include <cstdint>
#include <random>
#include <string>

namespace pathalloc {

// std::uniform_int_distribution is not bit-stable across standard libraries,
// so sampling is done by hand on top of mt19937_64. Every generated artifact
// records kGeneratorName in its metadata.
inline constexpr const char* kGeneratorName = "mt19937_64";

/// splitmix64 step; used to derive independent per-sweep-point seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], unbiased via rejection sampling.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;  // hi >= lo; span == 0 means full range
    if (span == 0) return engine_();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return lo + v % span;
  }

  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return uniform_real() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pathalloc

#endif  // PATHALLOC_RNG_HPP
