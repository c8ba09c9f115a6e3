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
#include <optional>
#include <vector>

#include "probeq/cost/cost_automaton.hpp"

namespace probeq {

/// Degree bound d = 2n(s+1)·n and sample range {1,…,4d}.
struct SubstitutionPlan {
  std::uint64_t degree_bound = 0;
  std::uint64_t range_max = 0;
  std::vector<Rational> point;
};

SubstitutionPlan substitution_plan(const CostAutomaton& a);

struct CostZeroness {
  bool zero = true;
  std::optional<Word> witness;
  std::optional<std::vector<Rational>> point;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t points_checked = 0;
  std::size_t singular_points = 0;
};

/// Samples r uniformly from {1,…,4d}^s per trial. Singular points count as
/// failed trials.
CostZeroness randomized_zeroness(const CostAutomaton& a, std::size_t trials, std::uint64_t seed);

/// Checks every point of {1,…,4d}^s. Throws kBudget if the grid exceeds
/// `budget` points.
CostZeroness deterministic_zeroness(const CostAutomaton& a, std::uint64_t budget = 1'000'000);

enum class Mode { kRandomized, kDeterministic };

struct CostEquivalenceOptions {
  Mode mode = Mode::kRandomized;
  std::size_t trials = 40;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
};

struct CostEquivalence {
  bool equivalent = true;
  std::optional<Word> witness;
  std::optional<std::vector<Rational>> point;
  CostZeroness detail;
};

CostEquivalence cost_equivalence(const CostAutomaton& b, const CostAutomaton& c,
                                 const CostEquivalenceOptions& options);

}  // namespace probeq
