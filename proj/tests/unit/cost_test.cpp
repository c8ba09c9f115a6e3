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

#include "generators.hpp"
#include "probeq/cost/cost_zeroness.hpp"
#include "probeq/cost/distribution.hpp"
#include "probeq/error.hpp"
#include "probeq/io/document.hpp"

namespace probeq {
namespace {

CostAutomaton fixture(const std::string& name) {
  Document d = parse_document(read_input(std::string(PROBEQ_FIXTURES) + "/" + name + ".json"));
  return std::get<CostAutomaton>(d.payload);
}

// Generating function of the fixture B series, summed by hand:
// sum_k 2^-(k+2) x^k + sum_{m>=1} (1/4)(2/3)^m x^-m.
Rational fig2_closed_form(const Rational& x) {
  return Rational(1) / (Rational(4) - Rational(2) * x) +
         Rational(1) / (Rational(2) * (Rational(3) * x - Rational(2)));
}

TEST(CostAutomaton, FixturesAreValid) {
  EXPECT_TRUE(validate(fixture("fig2-B")).ok);
  EXPECT_TRUE(validate(fixture("fig2-C")).ok);
}

TEST(CostAutomaton, SubstitutionMatchesClosedForm) {
  CostAutomaton b = fixture("fig2-B"), c = fixture("fig2-C");
  EXPECT_EQ(weight(substitute(b, {Rational(3)}), {}), Rational(-3, 7));
  for (long num : {3L, 5L, 7L, 11L, -1L}) {
    for (long den : {1L, 2L, 5L}) {
      Rational x(num, den);
      if (x == Rational(2) || x == Rational(2, 3)) continue;
      auto sb = try_substitute(b, {x});
      auto sc = try_substitute(c, {x});
      ASSERT_TRUE(sb && sc);
      EXPECT_EQ(weight(*sb, {}), fig2_closed_form(x));
      EXPECT_EQ(weight(*sc, {}), fig2_closed_form(x));
    }
  }
}

TEST(CostAutomaton, SingularPoint) {
  CostAutomaton b = fixture("fig2-B");
  // 1 - x/2 vanishes at x = 2.
  EXPECT_FALSE(try_substitute(b, {Rational(2)}).has_value());
  try {
    substitute(b, {Rational(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingular);
  }
  EXPECT_THROW(substitute(b, {Rational(3), Rational(1)}), Error);
}

TEST(Distribution, FixtureSeriesCoefficients) {
  CostAutomaton b = fixture("fig2-B");
  SeriesWindow s = distribution(b, {}, {{-6, 6}}, Rational(1, 1000000));
  EXPECT_LE(s.tail_bound, Rational(1, 1000000));
  for (int k = -6; k <= 6; ++k) {
    Rational exact = k >= 0 ? Rational(1, 4) * Rational(1, 2).pow(k)
                            : Rational(1, 4) * Rational(2, 3).pow(-k);
    auto it = s.coefficients.find({k});
    Rational got = it == s.coefficients.end() ? Rational() : it->second;
    EXPECT_LE((got - exact).abs(), s.tail_bound) << "k=" << k;
    EXPECT_LE(got, exact);
  }
  // Total mass: 1/2 on the non-negative side, 1/2 on the negative side.
  Rational inside;
  for (const auto& [e, c] : s.coefficients) inside += c;
  EXPECT_LE((inside + s.outside_mass - Rational(1)).abs(), s.tail_bound);
}

TEST(Distribution, WindowPlusTailBracketsTheSubstitutedWeight) {
  Rng rng(41);
  int checked = 0;
  for (int iter = 0; iter < 30; ++iter) {
    CostAutomaton a = testing::random_cost(rng, rng.uniform(1, 3), 1, 2);
    Word w;
    for (std::size_t i = 0, len = rng.uniform(0, 2); i < len; ++i) w.push_back(iter % 2 ? "a" : "b");
    std::vector<Rational> r{Rational(static_cast<long>(rng.uniform(7, 9)), 8)};
    SeriesWindow s = distribution(a, w, {{-4, 4}}, Rational(1, 1000), r);
    Rational exact = weight(substitute(a, r), w);
    Rational approx = evaluate_window(s, r);
    EXPECT_LE((exact - approx).abs(), s.tail_bound + s.outside_mass);
    ++checked;
  }
  EXPECT_EQ(checked, 30);
}

TEST(Distribution, ArityErrors) {
  CostAutomaton b = fixture("fig2-B");
  EXPECT_THROW(distribution(b, {}, {{-1, 1}, {0, 0}}, Rational(1, 10)), Error);
}

TEST(Validation, EpsilonRowSumOne) {
  std::vector<CostEdge> eps{{0, 0, {1}, Rational(1, 2)}, {0, 0, {-1}, Rational(1, 2)}};
  CostAutomaton a = CostAutomaton::from_edges(1, 1, {}, {}, eps, QMatrix(1, 1, {1}),
                                              QMatrix(1, 1, {1}));
  ValidationReport r = validate(a);
  ASSERT_FALSE(r.ok);
  EXPECT_NE(r.violations.front().find("epsilon row 0"), std::string::npos);
  try {
    require_valid(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidation);
  }
}

TEST(Validation, CostOutsideSupportAndArity) {
  std::vector<CostEdge> eps{{0, 0, {2}, Rational(1, 4)}};
  CostAutomaton a = CostAutomaton::from_edges(1, 1, {}, {}, eps, QMatrix(1, 1, {1}),
                                              QMatrix(1, 1, {1}));
  EXPECT_FALSE(validate(a).ok);
  std::vector<CostEdge> bad{{0, 0, {1, 0}, Rational(1, 4)}};
  try {
    CostAutomaton::from_edges(1, 1, {}, {}, bad, QMatrix(1, 1, {1}), QMatrix(1, 1, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCounterArity);
  }
}

TEST(CostZeroness, PlanFollowsTheDegreeBound) {
  CostAutomaton b = fixture("fig2-B");
  SubstitutionPlan p = substitution_plan(b);
  EXPECT_EQ(p.degree_bound, 2u * 2u * 2u * 2u);
  EXPECT_EQ(p.range_max, 4 * p.degree_bound);
}

TEST(CostZeroness, FixtureDifferenceIsZero) {
  CostAutomaton d = difference(fixture("fig2-B"), fixture("fig2-C"));
  EXPECT_TRUE(deterministic_zeroness(d).zero);
  EXPECT_TRUE(randomized_zeroness(d, 40, 1).zero);
}

TEST(CostZeroness, ModesAgreeAndWitnessesVerify) {
  Rng rng(42);
  int nonzero = 0;
  for (int iter = 0; iter < 25; ++iter) {
    CostAutomaton a = testing::random_cost(rng, rng.uniform(1, 3), 1, 1);
    if (iter % 4 == 0) a = difference(a, a);
    CostZeroness det = deterministic_zeroness(a);
    CostZeroness ran = randomized_zeroness(a, 40, iter);
    EXPECT_EQ(det.zero, ran.zero);
    for (const CostZeroness* z : {&det, &ran}) {
      if (z->zero) continue;
      ASSERT_TRUE(z->witness && z->point);
      EXPECT_FALSE(weight(substitute(a, *z->point), *z->witness).is_zero());
    }
    nonzero += !det.zero;
  }
  EXPECT_GT(nonzero, 5);
}

TEST(CostZeroness, BudgetIsEnforced) {
  Rng rng(43);
  CostAutomaton a = testing::random_cost(rng, 3, 2, 1);
  try {
    deterministic_zeroness(a, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudget);
  }
}

TEST(CostEquivalence, PerturbedFixtureIsDistinguished) {
  CostAutomaton b = fixture("fig2-B");
  std::vector<CostEdge> eps{{0, 0, {1}, Rational(1, 2)}, {0, 1, {-1}, Rational(1, 3)},
                            {1, 1, {-1}, Rational(1, 2)}};
  CostAutomaton c = CostAutomaton::from_edges(2, 1, {}, {}, eps, b.initial(), b.final_weights());
  for (Mode m : {Mode::kRandomized, Mode::kDeterministic}) {
    CostEquivalenceOptions o;
    o.mode = m;
    o.seed = 5;
    CostEquivalence e = cost_equivalence(b, c, o);
    EXPECT_FALSE(e.equivalent);
    ASSERT_TRUE(e.point && e.witness);
    EXPECT_NE(weight(substitute(b, *e.point), *e.witness),
              weight(substitute(c, *e.point), *e.witness));
  }
  CostEquivalenceOptions o;
  EXPECT_TRUE(cost_equivalence(b, fixture("fig2-C"), o).equivalent);
}

}  // namespace
}  // namespace probeq
