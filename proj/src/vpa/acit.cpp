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

#include "probeq/vpa/acit.hpp"

#include <cmath>

namespace probeq {

std::uint64_t circuit_eval_mod(const ArithmeticCircuit& c, std::uint64_t p) {
  c.validate();
  if (p >= (std::uint64_t{1} << 63)) {
    return circuit_eval_mod(c, mpz_class(static_cast<unsigned long>(p))).get_ui();
  }
  return circuit_eval_field(c, Field64(p));
}

mpz_class circuit_eval_mod(const ArithmeticCircuit& c, const mpz_class& p) {
  c.validate();
  return circuit_eval_field(c, FieldBig(p));
}

long double difference_numerator_bits(const ArithmeticCircuit& c1, const ArithmeticCircuit& c2) {
  const CircuitBounds b1 = circuit_bounds(c1), b2 = circuit_bounds(c2);
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), b1.denominator_lcm.get_mpz_t(), b2.denominator_lcm.get_mpz_t());
  const GateBound &g1 = b1.gates[c1.output()], &g2 = b2.gates[c2.output()];
  const long double log_d = d == 1 ? 0.0L : static_cast<long double>(mpz_sizeinbase(d.get_mpz_t(), 2));
  const std::uint64_t e = std::max(g1.den_exponent, g2.den_exponent);
  return std::max(g1.log2_magnitude, g2.log2_magnitude) + 1 + static_cast<long double>(e) * log_d;
}

AcitResult acit_test(const ArithmeticCircuit& c1, const ArithmeticCircuit& c2, std::size_t trials,
                     std::uint64_t seed) {
  c1.validate();
  c2.validate();
  long double bits = difference_numerator_bits(c1, c2);
  std::size_t b;
  if (std::isfinite(static_cast<double>(bits))) {
    b = prime_bits_for(bits);
  } else {
    // Magnitudes beyond long double range: fall back to |value| ≤ 2^(2^m).
    b = std::max<std::size_t>(kField64MaxBits, c1.size() + c2.size() + 6);
  }
  AcitResult out;
  out.seed = seed;
  out.trials = trials;
  out.detail = run_prime_trials(b, trials, seed, [&](const auto& field) {
    return circuit_eval_field(c1, field) == circuit_eval_field(c2, field);
  });
  out.probably_equal = out.detail.equal;
  return out;
}

}  // namespace probeq
