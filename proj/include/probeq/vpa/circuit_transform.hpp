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
#include <utility>
#include <vector>

#include "probeq/vpa/circuit.hpp"
#include "probeq/weighted/automaton.hpp"

namespace probeq {

/// Circuit in layered normal form: children sit exactly one level below
/// their parent, + gates at even levels, ∗ gates at odd levels, all inputs
/// (constants 0 and 1) at level d, and d odd.
struct LayeredCircuit {
  ArithmeticCircuit circuit;
  std::vector<std::size_t> level;  // per gate; unreachable gates are absent
  std::size_t d = 0;
};

/// Levelizes a {+,∗} circuit with 0/1 constants, padding with 1∗1, g∗1 and
/// g+0 gadgets. The result has odd depth, at least `min_depth`.
/// Throws kNeedsSubElimination if a − gate is present and kInvalidArgument
/// for constants other than 0 and 1.
LayeredCircuit normalize_circuit(const ArithmeticCircuit& c, std::size_t min_depth = 0);

/// Verifies the layered shape; throws kNotNormalized with the reason.
void check_layered(const LayeredCircuit& c);

/// (P, Q) over {+,∗} with value(c) = value(P) − value(Q). Integer constants
/// only; negative constants move to Q.
std::pair<ArithmeticCircuit, ArithmeticCircuit> eliminate_sub(const ArithmeticCircuit& c);

/// w_0 = ι, w_{n+1} = ι w_n (n even), c w_n r w_n (n odd).
Word canonical_word(std::size_t d, const Symbol& call = "c", const Symbol& ret = "r",
                    const Symbol& internal = "i");
/// M_0 = 1, M_{n+1} = 2 M_n (n even), M_n² (n odd).
mpz_class canonical_scale(std::size_t d);

}  // namespace probeq
