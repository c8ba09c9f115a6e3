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
#include <string>

#include "probeq/vpa/circuit.hpp"
#include "probeq/vpa/prime_field.hpp"

namespace probeq {

/// Bottom-up evaluation in the given field. Throws kBadPrime if the prime
/// divides a constant's denominator.
template <class F>
typename F::Elem circuit_eval_field(const ArithmeticCircuit& c, const F& field) {
  std::vector<typename F::Elem> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::kConst: v[i] = field.from_rational(g.value); break;
      case GateKind::kAdd: v[i] = field.add(v[g.left], v[g.right]); break;
      case GateKind::kSub: v[i] = field.sub(v[g.left], v[g.right]); break;
      case GateKind::kMul: v[i] = field.mul(v[g.left], v[g.right]); break;
    }
  }
  return v[c.output()];
}

std::uint64_t circuit_eval_mod(const ArithmeticCircuit& c, std::uint64_t p);
mpz_class circuit_eval_mod(const ArithmeticCircuit& c, const mpz_class& p);

struct AcitResult {
  bool probably_equal = true;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  ModularTrials detail;
};

/// Bits of the numerator of value(c1) − value(c2) written over a power of the
/// common denominator lcm.
long double difference_numerator_bits(const ArithmeticCircuit& c1, const ArithmeticCircuit& c2);

/// Randomized identity test: compares both circuits modulo random primes.
/// An "unequal" verdict is always correct.
AcitResult acit_test(const ArithmeticCircuit& c1, const ArithmeticCircuit& c2, std::size_t trials,
                     std::uint64_t seed);

}  // namespace probeq
