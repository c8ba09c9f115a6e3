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
#include <vector>

#include <gmpxx.h>

#include "probeq/numerics/rational.hpp"

namespace probeq {

enum class GateKind { kConst, kAdd, kMul, kSub };

struct Gate {
  GateKind kind = GateKind::kConst;
  Rational value;  // for kConst
  std::size_t left = 0;
  std::size_t right = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Variable-free arithmetic circuit. Every gate only references gates with a
/// smaller id, so the gate list is a topological order.
class ArithmeticCircuit {
 public:
  std::size_t constant(const Rational& v);
  std::size_t add(std::size_t l, std::size_t r) { return binary(GateKind::kAdd, l, r); }
  std::size_t mul(std::size_t l, std::size_t r) { return binary(GateKind::kMul, l, r); }
  std::size_t sub(std::size_t l, std::size_t r) { return binary(GateKind::kSub, l, r); }
  std::size_t push(const Gate& g);

  void set_output(std::size_t id);
  std::size_t output() const { return output_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::size_t id) const { return gates_[id]; }
  std::size_t size() const { return gates_.size(); }
  bool has_sub() const;

  /// Throws kValidation for forward references or a missing output.
  void validate() const;

  /// Length of the longest path from the output to an input (inputs: 0).
  std::size_t depth() const;

  friend bool operator==(const ArithmeticCircuit&, const ArithmeticCircuit&) = default;

 private:
  std::size_t binary(GateKind k, std::size_t l, std::size_t r);

  std::vector<Gate> gates_;
  std::size_t output_ = 0;
};

/// Upper bounds for the value of a gate: |value| ≤ 2^log2_magnitude and
/// value·D^den_exponent is an integer, where D is the lcm of the constant
/// denominators.
struct GateBound {
  long double log2_magnitude = 0;
  std::uint64_t den_exponent = 0;
};

struct CircuitBounds {
  std::vector<GateBound> gates;
  mpz_class denominator_lcm = 1;
};

CircuitBounds circuit_bounds(const ArithmeticCircuit& c);

/// Exact bottom-up evaluation. Throws kBudget if the estimated numerator size
/// of some gate exceeds `bit_budget`.
Rational circuit_eval_exact(const ArithmeticCircuit& c, std::uint64_t bit_budget = 1u << 24);

}  // namespace probeq
