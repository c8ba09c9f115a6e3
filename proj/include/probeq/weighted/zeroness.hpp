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

#include "probeq/weighted/automaton.hpp"

namespace probeq {

struct ZeronessResult {
  bool zero = true;
  std::optional<Word> witness;
};

struct EquivalenceResult {
  bool equivalent = true;
  std::optional<Word> witness;
};

/// Breadth-first search over prefixes keeping a basis of the reachable
/// forward vectors α·M(u). Returns the length-lexicographically least word of
/// non-zero weight, which has length at most n−1.
ZeronessResult tzeng_zeroness(const WeightedAutomaton& a);

/// Exhaustive check of every word of length ≤ n−1. Throws kBudget when more
/// than `budget` words would be enumerated.
ZeronessResult brute_force_zeroness(const WeightedAutomaton& a,
                                    std::uint64_t budget = 1'000'000);

EquivalenceResult equivalence(const WeightedAutomaton& b, const WeightedAutomaton& c);

}  // namespace probeq
