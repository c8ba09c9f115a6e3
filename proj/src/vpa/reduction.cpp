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

#include "probeq/vpa/reduction.hpp"

#include <cmath>

#include "probeq/error.hpp"
#include "probeq/vpa/sum_circuit.hpp"

namespace probeq {

CircuitVpa circuit_to_vpa(const LayeredCircuit& lc) {
  check_layered(lc);
  const ArithmeticCircuit& c = lc.circuit;
  const std::size_t gates = c.size(), hub = gates, n = gates + 1;
  VisiblyAlphabet al{{"c"}, {"r"}, {"i"}};
  std::vector<Symbol> stack;
  for (std::size_t g = 0; g < gates; ++g) stack.push_back("g" + std::to_string(g));
  WeightedVPA v = WeightedVPA::zero(al, stack, n);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < gates; ++i) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::kAdd:
        v.internal(0)(i, g.left) += half;
        v.internal(0)(i, g.right) += half;
        break;
      case GateKind::kMul:
        v.call(0, g.right)(i, g.left) += Rational(1);
        break;
      case GateKind::kConst:
        if (g.value.is_one()) v.internal(0)(i, hub) = Rational(1);
        break;
      case GateKind::kSub:
        throw Error(ErrorCode::kNotNormalized, "subtraction gate");
    }
    v.ret(0, i)(hub, i) = Rational(1);
  }
  v.initial()(0, c.output()) = Rational(1);
  v.final_weights()(hub, 0) = Rational(1);
  return CircuitVpa{std::move(v), canonical_word(lc.d), canonical_scale(lc.d), lc.d};
}

AcitReduction acit_to_vpa_equivalence(const ArithmeticCircuit& c1, const ArithmeticCircuit& c2) {
  const std::size_t d = std::max(normalize_circuit(c1).d, normalize_circuit(c2).d);
  AcitReduction r;
  r.c1 = normalize_circuit(c1, d);
  r.c2 = normalize_circuit(c2, d);
  r.d = d;
  r.v1 = circuit_to_vpa(r.c1);
  r.v2 = circuit_to_vpa(r.c2);
  r.sufficient_k = l_index(parse_well_matched(r.v1.canonical, r.v1.vpa.alphabet()));
  return r;
}

VpaEquivalence vpa_equivalence(const WeightedVPA& a, const WeightedVPA& b,
                               const VpaEquivalenceOptions& options) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorCode::kAlphabet, "automata have different visibly alphabets");
  }
  const std::size_t n = a.states() + b.states();
  VpaEquivalence out;
  out.k = options.k_override ? *options.k_override : n * n;
  out.seed = options.seed;
  out.trials = options.trials;

  const SparseVpa sa = sparse_vpa(a), sb = sparse_vpa(b);
  const SumModel maa = sum_model(sparse_product(sa, sa));
  const SumModel mbb = sum_model(sparse_product(sb, sb));
  const SumModel mab = sum_model(sparse_product(sa, sb));

  if (options.materialize) {
    ArithmeticCircuit c1;
    const std::size_t aa = append_circuit(c1, sum_circuit(maa, out.k));
    const std::size_t bb = append_circuit(c1, sum_circuit(mbb, out.k));
    c1.add(aa, bb);
    ArithmeticCircuit c2;
    const std::size_t ab = append_circuit(c2, sum_circuit(mab, out.k));
    c2.mul(c2.constant(Rational(2)), ab);
    AcitResult r = acit_test(c1, c2, options.trials, options.seed);
    out.probably_equivalent = r.probably_equal;
    out.detail = r.detail;
    return out;
  }

  long double base = 1;
  for (const SumModel* m : {&maa, &mbb, &mab}) base = std::max(base, sum_bound(*m).base);
  const long double log2_bits = static_cast<long double>(out.k) + std::log2(base);
  const std::size_t bits =
      std::max<std::size_t>(kField64MaxBits, static_cast<std::size_t>(std::ceil(log2_bits)) + 6);

  out.detail = run_prime_trials(bits, options.trials, options.seed, [&](const auto& field) {
    const auto lhs = field.add(sum_value_field(maa, out.k, field), sum_value_field(mbb, out.k, field));
    const auto ab = sum_value_field(mab, out.k, field);
    return lhs == field.add(ab, ab);
  });
  out.probably_equivalent = out.detail.equal;
  return out;
}

}  // namespace probeq
