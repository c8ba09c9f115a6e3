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

#include "probeq/vpa/acit.hpp"
#include "probeq/vpa/circuit_transform.hpp"
#include "probeq/vpa/vpa.hpp"
#include "probeq/vpa/well_matched.hpp"

namespace probeq {

struct CircuitVpa {
  WeightedVPA vpa;
  Word canonical;     // w_d
  mpz_class scale;    // M_d
  std::size_t d = 0;
};

/// One state per gate plus a return hub; the VPA gives weight N/M_d to w_d,
/// where N is the circuit value, and 0 to every other well-matched word.
/// Throws kNotNormalized unless the circuit is layered.
CircuitVpa circuit_to_vpa(const LayeredCircuit& c);

struct AcitReduction {
  LayeredCircuit c1, c2;
  CircuitVpa v1, v2;
  std::size_t d = 0;
  /// L-index of w_d; comparing the sums over L_k for any k at or above it
  /// decides equivalence of v1 and v2, since no other word has weight.
  std::size_t sufficient_k = 0;
};

/// Normalizes both circuits to a common depth and converts them.
AcitReduction acit_to_vpa_equivalence(const ArithmeticCircuit& c1, const ArithmeticCircuit& c2);

struct VpaEquivalenceOptions {
  std::size_t trials = 40;
  std::uint64_t seed = 0;
  std::optional<std::size_t> k_override;
  /// Build gate-level circuits with sum_circuit and run acit_test on them
  /// instead of evaluating the recurrence directly modulo each prime.
  bool materialize = false;
};

struct VpaEquivalence {
  bool probably_equivalent = true;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  ModularTrials detail;
};

/// Compares Σ_{L_k} (A×A)(w) + (B×B)(w) with 2·Σ_{L_k} (A×B)(w), k = n² for
/// n = n_A + n_B unless overridden. "Inequivalent" is always correct.
VpaEquivalence vpa_equivalence(const WeightedVPA& a, const WeightedVPA& b,
                               const VpaEquivalenceOptions& options = {});

}  // namespace probeq
