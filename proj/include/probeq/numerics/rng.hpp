// Copyright 2026 The probeq Authors.
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

#pragma once

#include <cstdint>
#include <random>

namespace probeq {

/// Seedable generator with derived per-trial streams. Bounded draws use
/// rejection sampling on the raw 64-bit output so results do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream for (seed, stream, index); used so that trial t of a
  /// run is reproducible without replaying trials 0..t-1.
  static Rng derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// True with probability numerator/denominator.
  bool bernoulli(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Stream identifiers keep different randomized procedures that share a user
// seed from drawing correlated values.
namespace streams {
inline constexpr std::uint64_t kIsolating = 1;
inline constexpr std::uint64_t kCostPoint = 2;
inline constexpr std::uint64_t kPrime = 3;
inline constexpr std::uint64_t kTesting = 99;
}  // namespace streams

}  // namespace probeq
