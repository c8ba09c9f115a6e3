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

#include "probeq/vpa/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "probeq/error.hpp"

namespace probeq {

std::size_t ArithmeticCircuit::constant(const Rational& v) {
  Gate g;
  g.kind = GateKind::kConst;
  g.value = v;
  gates_.push_back(g);
  output_ = gates_.size() - 1;
  return output_;
}

std::size_t ArithmeticCircuit::binary(GateKind k, std::size_t l, std::size_t r) {
  Gate g;
  g.kind = k;
  g.left = l;
  g.right = r;
  return push(g);
}

std::size_t ArithmeticCircuit::push(const Gate& g) {
  if (g.kind != GateKind::kConst && (g.left >= gates_.size() || g.right >= gates_.size())) {
    throw Error(ErrorCode::kValidation, "gate " + std::to_string(gates_.size()) +
                                            " references a gate that does not precede it");
  }
  gates_.push_back(g);
  output_ = gates_.size() - 1;
  return output_;
}

void ArithmeticCircuit::set_output(std::size_t id) {
  if (id >= gates_.size()) throw Error(ErrorCode::kValidation, "output gate out of range");
  output_ = id;
}

bool ArithmeticCircuit::has_sub() const {
  return std::any_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.kind == GateKind::kSub; });
}

void ArithmeticCircuit::validate() const {
  if (gates_.empty()) throw Error(ErrorCode::kValidation, "circuit has no gates");
  if (output_ >= gates_.size()) throw Error(ErrorCode::kValidation, "output gate out of range");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.kind != GateKind::kConst && (g.left >= i || g.right >= i)) {
      throw Error(ErrorCode::kValidation,
                  "gate " + std::to_string(i) + " references a gate that does not precede it");
    }
  }
}

std::size_t ArithmeticCircuit::depth() const {
  std::vector<std::size_t> d(gates_.size(), 0);
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.kind != GateKind::kConst) d[i] = std::max(d[g.left], d[g.right]) + 1;
  }
  return gates_.empty() ? 0 : d[output_];
}

CircuitBounds circuit_bounds(const ArithmeticCircuit& c) {
  CircuitBounds out;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::kConst) {
      mpz_lcm(out.denominator_lcm.get_mpz_t(), out.denominator_lcm.get_mpz_t(),
              g.value.denominator().get_mpz_t());
    }
  }
  out.gates.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gate(i);
    GateBound& b = out.gates[i];
    switch (g.kind) {
      case GateKind::kConst: {
        // ceil(log2 |p/q|) ≤ bits(p) − bits(q) + 1
        long double bits = static_cast<long double>(mpz_sizeinbase(g.value.numerator().get_mpz_t(), 2)) -
                           static_cast<long double>(mpz_sizeinbase(g.value.denominator().get_mpz_t(), 2)) + 1;
        b.log2_magnitude = std::max<long double>(bits, 0);
        b.den_exponent = g.value.is_integer() ? 0 : 1;
        break;
      }
      case GateKind::kAdd:
      case GateKind::kSub: {
        const GateBound &l = out.gates[g.left], &r = out.gates[g.right];
        b.log2_magnitude = std::max(l.log2_magnitude, r.log2_magnitude) + 1;
        b.den_exponent = std::max(l.den_exponent, r.den_exponent);
        break;
      }
      case GateKind::kMul: {
        const GateBound &l = out.gates[g.left], &r = out.gates[g.right];
        b.log2_magnitude = l.log2_magnitude + r.log2_magnitude;
        b.den_exponent = l.den_exponent + r.den_exponent;
        break;
      }
    }
  }
  return out;
}

Rational circuit_eval_exact(const ArithmeticCircuit& c, std::uint64_t bit_budget) {
  c.validate();
  const CircuitBounds bounds = circuit_bounds(c);
  const long double log_d = static_cast<long double>(mpz_sizeinbase(bounds.denominator_lcm.get_mpz_t(), 2));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& b = bounds.gates[i];
    const long double bits = b.log2_magnitude + b.den_exponent * log_d;
    if (!std::isfinite(static_cast<double>(bits)) || bits > static_cast<long double>(bit_budget)) {
      throw Error(ErrorCode::kBudget, "gate " + std::to_string(i) +
                                          " may exceed the exact-evaluation bit budget");
    }
  }
  std::vector<Rational> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::kConst: v[i] = g.value; break;
      case GateKind::kAdd: v[i] = v[g.left] + v[g.right]; break;
      case GateKind::kSub: v[i] = v[g.left] - v[g.right]; break;
      case GateKind::kMul: v[i] = v[g.left] * v[g.right]; break;
    }
  }
  return v[c.output()];
}

}  // namespace probeq
