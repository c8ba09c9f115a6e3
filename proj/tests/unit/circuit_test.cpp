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

#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "generators.hpp"
#include "probeq/error.hpp"
#include "probeq/vpa/acit.hpp"
#include "probeq/vpa/circuit.hpp"
#include "probeq/vpa/circuit_transform.hpp"
#include "probeq/vpa/reduction.hpp"
#include "probeq/vpa/well_matched.hpp"

namespace probeq {
namespace {

// Top-down recursion with memoization.
mpq_class oracle_value(const ArithmeticCircuit& c) {
  std::map<std::size_t, mpq_class> memo;
  std::function<mpq_class(std::size_t)> val = [&](std::size_t id) -> mpq_class {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    const Gate& g = c.gate(id);
    mpq_class v;
    switch (g.kind) {
      case GateKind::kConst: v = g.value.value(); break;
      case GateKind::kAdd: v = val(g.left) + val(g.right); break;
      case GateKind::kSub: v = val(g.left) - val(g.right); break;
      case GateKind::kMul: v = val(g.left) * val(g.right); break;
    }
    return memo[id] = v;
  };
  return val(c.output());
}

ArithmeticCircuit random_circuit(Rng& rng, std::size_t gates, bool with_sub, long max_den = 3) {
  ArithmeticCircuit c;
  c.constant(testing::small_rational(rng, 3, max_den));
  c.constant(testing::small_rational(rng, 3, max_den));
  for (std::size_t i = 0; i < gates; ++i) {
    const std::size_t l = rng.uniform(0, c.size() - 1), r = rng.uniform(0, c.size() - 1);
    switch (rng.uniform(0, with_sub ? 3 : 2)) {
      case 0: c.add(l, r); break;
      case 1: c.mul(l, r); break;
      case 2: c.constant(testing::small_rational(rng, 3, max_den)); break;
      default: c.sub(l, r); break;
    }
  }
  return c;
}

ArithmeticCircuit squaring_chain(std::size_t n, bool plus_one) {
  ArithmeticCircuit c;
  const std::size_t one = c.constant(1);
  std::size_t x = c.add(one, one);
  for (std::size_t i = 0; i < n; ++i) x = c.mul(x, x);
  if (plus_one) c.add(x, one);
  return c;
}

TEST(Circuit, ExactEvaluationMatchesRecursion) {
  Rng rng(61);
  for (int iter = 0; iter < 60; ++iter) {
    ArithmeticCircuit c = random_circuit(rng, rng.uniform(1, 12), true);
    EXPECT_EQ(circuit_eval_exact(c).value(), oracle_value(c));
  }
}

TEST(Circuit, ExactEvaluationBudget) {
  ArithmeticCircuit c = squaring_chain(40, false);
  try {
    circuit_eval_exact(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudget);
  }
  EXPECT_EQ(circuit_eval_exact(squaring_chain(3, false)), Rational(256));
}

TEST(Circuit, RejectsForwardReferences) {
  ArithmeticCircuit c;
  c.constant(1);
  EXPECT_THROW(c.add(0, 3), Error);
  EXPECT_THROW(c.set_output(4), Error);
}

TEST(Circuit, ModularEvaluationIsReductionOfExact) {
  Rng rng(62);
  const std::uint64_t p = 1000000007ULL;
  const mpz_class big("170141183460469231731687303715884105727");
  for (int iter = 0; iter < 40; ++iter) {
    ArithmeticCircuit c = random_circuit(rng, rng.uniform(1, 10), true);
    mpq_class v = oracle_value(c);
    try {
      mpz_class den_inv;
      mpz_class den = v.get_den();
      mpz_class pp(static_cast<unsigned long>(p));
      ASSERT_NE(mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()), 0);
      mpz_class expected = v.get_num() * den_inv;
      mpz_mod(expected.get_mpz_t(), expected.get_mpz_t(), pp.get_mpz_t());
      EXPECT_EQ(circuit_eval_mod(c, p), expected.get_ui());
      mpz_class inv_big;
      mpz_invert(inv_big.get_mpz_t(), den.get_mpz_t(), big.get_mpz_t());
      mpz_class eb = v.get_num() * inv_big;
      mpz_mod(eb.get_mpz_t(), eb.get_mpz_t(), big.get_mpz_t());
      EXPECT_EQ(circuit_eval_mod(c, big), eb);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadPrime);
    }
  }
}

TEST(Circuit, BadPrimeOnDenominator) {
  ArithmeticCircuit c;
  c.constant(Rational(1, 7));
  try {
    circuit_eval_mod(c, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadPrime);
  }
}

TEST(Acit, ClassifiesRandomPairs) {
  Rng rng(63);
  for (int iter = 0; iter < 40; ++iter) {
    ArithmeticCircuit a = random_circuit(rng, rng.uniform(1, 10), true);
    ArithmeticCircuit b = random_circuit(rng, rng.uniform(1, 10), true);
    const bool equal = oracle_value(a) == oracle_value(b);
    EXPECT_EQ(acit_test(a, b, 40, iter).probably_equal, equal);
    EXPECT_TRUE(acit_test(a, a, 5, iter).probably_equal);
  }
}

TEST(Acit, NumeratorBoundCoversTheDifference) {
  Rng rng(64);
  for (int iter = 0; iter < 40; ++iter) {
    ArithmeticCircuit a = random_circuit(rng, rng.uniform(1, 8), true);
    ArithmeticCircuit b = random_circuit(rng, rng.uniform(1, 8), true);
    mpq_class diff = oracle_value(a) - oracle_value(b);
    if (diff == 0) continue;
    EXPECT_GE(difference_numerator_bits(a, b) + 1,
              static_cast<long double>(mpz_sizeinbase(diff.get_num_mpz_t(), 2)));
  }
}

TEST(Acit, HugeSquaringChains) {
  ArithmeticCircuit a = squaring_chain(10, false), b = squaring_chain(10, true);
  AcitResult r = acit_test(a, b, 40, 1);
  EXPECT_FALSE(r.probably_equal);
  EXPECT_FALSE(r.detail.distinguishing_prime.empty());
  EXPECT_TRUE(acit_test(a, squaring_chain(10, false), 40, 1).probably_equal);
}

TEST(Transform, CanonicalScaleRecurrence) {
  mpz_class m = 1;
  for (std::size_t n = 0; n < 9; ++n) {
    EXPECT_EQ(canonical_scale(n), m) << n;
    m = n % 2 == 0 ? mpz_class(2 * m) : mpz_class(m * m);
  }
  EXPECT_EQ(canonical_word(0), (Word{"i"}));
  EXPECT_EQ(canonical_word(1), (Word{"i", "i"}));
  EXPECT_EQ(canonical_word(2), (Word{"c", "i", "i", "r", "i", "i"}));
}

TEST(Transform, NormalizationPreservesValue) {
  Rng rng(65);
  for (int iter = 0; iter < 40; ++iter) {
    ArithmeticCircuit c = testing::random_plus_times(rng, rng.uniform(1, 8));
    LayeredCircuit l = normalize_circuit(c, iter % 4);
    EXPECT_NO_THROW(check_layered(l));
    EXPECT_EQ(l.d % 2, 1u);
    EXPECT_GE(l.d, static_cast<std::size_t>(iter % 4));
    EXPECT_EQ(circuit_eval_exact(l.circuit).value(), oracle_value(c));
  }
}

TEST(Transform, CheckLayeredRejectsUnlevelledCircuits) {
  LayeredCircuit l;
  l.circuit.constant(1);
  l.circuit.add(0, 0);
  l.level = {1, 0};
  l.d = 3;
  try {
    check_layered(l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotNormalized);
  }
}

TEST(Transform, SubtractionElimination) {
  Rng rng(66);
  for (int iter = 0; iter < 40; ++iter) {
    ArithmeticCircuit c = random_circuit(rng, rng.uniform(1, 10), true, 1);
    auto [pos, neg] = eliminate_sub(c);
    EXPECT_FALSE(pos.has_sub());
    EXPECT_FALSE(neg.has_sub());
    EXPECT_EQ(oracle_value(pos) - oracle_value(neg), oracle_value(c));
  }
}

TEST(Reduction, CanonicalWordCarriesTheValue) {
  Rng rng(67);
  VisiblyAlphabet al{{"c"}, {"r"}, {"i"}};
  for (int iter = 0; iter < 15; ++iter) {
    ArithmeticCircuit c = testing::random_plus_times(rng, rng.uniform(1, 6));
    CircuitVpa v = circuit_to_vpa(normalize_circuit(c));
    EXPECT_EQ(v.canonical, canonical_word(v.d));
    EXPECT_EQ(v.scale, canonical_scale(v.d));
    const Rational expected = Rational(mpq_class(oracle_value(c) / mpq_class(v.scale)));
    EXPECT_EQ(vpa_weight(v.vpa, v.canonical), expected);
    Rng wr = Rng::derive(67, streams::kTesting, iter);
    for (int k = 0; k < 10; ++k) {
      WellMatchedWord w = sample_well_matched(al, 4, wr);
      if (w.symbols == v.canonical) continue;
      EXPECT_TRUE(vpa_weight(v.vpa, w).is_zero()) << word_str(w.symbols);
    }
  }
}

TEST(Reduction, RejectsSubtraction) {
  ArithmeticCircuit c;
  c.constant(1);
  c.sub(0, 0);
  EXPECT_THROW(circuit_to_vpa(normalize_circuit(c)), Error);
}

TEST(Reduction, VpaEquivalenceOnReducedPairs) {
  Rng rng(68);
  for (int iter = 0; iter < 12; ++iter) {
    ArithmeticCircuit a = testing::random_plus_times(rng, rng.uniform(2, 5));
    ArithmeticCircuit b = testing::random_plus_times(rng, rng.uniform(2, 5));
    AcitReduction red = acit_to_vpa_equivalence(a, b);
    EXPECT_EQ(red.v1.d, red.v2.d);
    EXPECT_EQ(red.sufficient_k, l_index(parse_well_matched(red.v1.canonical,
                                                           red.v1.vpa.alphabet())));
    VpaEquivalenceOptions o;
    o.seed = iter;
    o.k_override = red.sufficient_k;
    const bool equal = oracle_value(a) == oracle_value(b);
    EXPECT_EQ(vpa_equivalence(red.v1.vpa, red.v2.vpa, o).probably_equivalent, equal);
    o.materialize = true;
    EXPECT_EQ(vpa_equivalence(red.v1.vpa, red.v2.vpa, o).probably_equivalent, equal);
  }
}

}  // namespace
}  // namespace probeq
