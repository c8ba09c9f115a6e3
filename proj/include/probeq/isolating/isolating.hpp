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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "probeq/numerics/rng.hpp"
#include "probeq/numerics/unipoly.hpp"
#include "probeq/weighted/automaton.hpp"

namespace probeq {

/// Position weights w_{i,σ} for positions 1..n and alphabet indices.
class WeightAssignment {
 public:
  WeightAssignment() = default;
  WeightAssignment(std::size_t positions, std::size_t symbols, std::vector<std::uint64_t> weights);

  std::size_t positions() const { return positions_; }
  std::size_t symbols() const { return symbols_; }
  /// Weight for 1-based position `i` and symbol index `s`.
  std::uint64_t at(std::size_t i, std::size_t s) const { return weights_[(i - 1) * symbols_ + s]; }
  void set(std::size_t i, std::size_t s, std::uint64_t w) { weights_[(i - 1) * symbols_ + s] = w; }
  const std::vector<std::uint64_t>& values() const { return weights_; }
  /// Largest value a weight may take, 2|Σ|n.
  std::uint64_t range() const { return 2 * symbols_ * positions_; }

  /// wt(u) = Σ_i w_{i,u_i}; `u` given as symbol indices.
  std::uint64_t word_weight(const std::vector<std::size_t>& u) const;

 private:
  std::size_t positions_ = 0;
  std::size_t symbols_ = 0;
  std::vector<std::uint64_t> weights_;
};

WeightAssignment sample_weights(const WeightedAutomaton& a, Rng& rng);

/// P(x) = Σ_{k≤n} Σ_{|u|=k} A(u) x^{wt(u)}.
UniPoly iso_polynomial(const WeightedAutomaton& a, const WeightAssignment& wa);

struct Extraction {
  std::optional<Word> word;  // nullopt means the caller should resample
};

Extraction extract_counterexample(const WeightedAutomaton& a, const WeightAssignment& wa,
                                  const UniPoly& p);

struct IsoResult {
  UniPoly polynomial;
  std::optional<std::size_t> min_degree;
  WeightAssignment assignment;
  std::uint64_t seed = 0;
};

/// One sampled assignment and its polynomial.
IsoResult iso_trial(const WeightedAutomaton& a, std::uint64_t seed, std::uint64_t index);

struct RandomizedZeroness {
  bool probably_zero = true;
  std::optional<Word> witness;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t trials_run = 0;
  std::size_t resamples = 0;
};

/// One-sided test: a non-zero verdict carries a verified witness, except in
/// the (reported) case where P ≠ 0 was observed but extraction never isolated
/// a word within the resampling cap.
RandomizedZeroness randomized_zeroness(const WeightedAutomaton& a, std::size_t trials,
                                       std::uint64_t seed);

struct RandomizedEquivalence {
  bool probably_equivalent = true;
  std::optional<Word> witness;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
};

RandomizedEquivalence randomized_equivalence(const WeightedAutomaton& b,
                                             const WeightedAutomaton& c, std::size_t trials,
                                             std::uint64_t seed);

}  // namespace probeq
