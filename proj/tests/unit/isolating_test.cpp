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
#include "probeq/isolating/isolating.hpp"
#include "probeq/weighted/zeroness.hpp"

namespace probeq {
namespace {

// P(x) by listing every word of length at most n.
UniPoly oracle_polynomial(const WeightedAutomaton& a, const WeightAssignment& wa) {
  UniPoly p;
  for (std::size_t len = 0; len <= a.states(); ++len)
    for (const auto& w : testing::words_of_length(a.alphabet(), len)) {
      std::uint64_t wt = 0;
      for (std::size_t i = 0; i < w.size(); ++i) wt += wa.at(i + 1, a.symbol_index(w[i]));
      p.add_term(wt, weight(a, w));
    }
  return p;
}

TEST(Isolating, WeightsLieInRange) {
  Rng rng(31);
  auto a = testing::random_weighted(rng, 4, 3);
  Rng draw(1);
  WeightAssignment wa = sample_weights(a, draw);
  EXPECT_EQ(wa.range(), 2u * 3u * 4u);
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t s = 0; s < 3; ++s) {
      EXPECT_GE(wa.at(i, s), 1u);
      EXPECT_LE(wa.at(i, s), wa.range());
    }
}

TEST(Isolating, PolynomialMatchesEnumeration) {
  Rng rng(32);
  for (int iter = 0; iter < 40; ++iter) {
    auto a = testing::random_weighted(rng, rng.uniform(1, 4), rng.uniform(1, 3), 40);
    Rng draw = Rng::derive(iter, 0, 0);
    WeightAssignment wa = sample_weights(a, draw);
    EXPECT_EQ(iso_polynomial(a, wa), oracle_polynomial(a, wa));
  }
}

TEST(Isolating, ZeroAutomatonGivesZeroPolynomial) {
  Rng rng(33);
  for (int iter = 0; iter < 15; ++iter) {
    auto a = testing::zero_weighted(rng, rng.uniform(2, 5), 2);
    IsoResult r = iso_trial(a, 7, iter);
    EXPECT_TRUE(r.polynomial.is_zero());
    EXPECT_FALSE(r.min_degree.has_value());
    RandomizedZeroness z = randomized_zeroness(a, 10, 7);
    EXPECT_TRUE(z.probably_zero);
    EXPECT_EQ(z.trials_run, 10u);
  }
}

TEST(Isolating, ExtractedWordsAreGenuine) {
  Rng rng(34);
  int extracted = 0;
  for (int iter = 0; iter < 60; ++iter) {
    auto a = testing::random_weighted(rng, rng.uniform(1, 4), rng.uniform(1, 3), 40);
    IsoResult r = iso_trial(a, 3, iter);
    if (r.polynomial.is_zero()) continue;
    Extraction x = extract_counterexample(a, r.assignment, r.polynomial);
    if (!x.word) continue;
    ++extracted;
    EXPECT_FALSE(weight(a, *x.word).is_zero());
    EXPECT_LE(x.word->size(), a.states());
    EXPECT_EQ(r.polynomial.coefficient(*r.min_degree), weight(a, *x.word));
  }
  EXPECT_GT(extracted, 10);
}

TEST(Isolating, RandomizedAgreesWithTzengOnNonZero) {
  Rng rng(35);
  for (int iter = 0; iter < 40; ++iter) {
    auto a = testing::random_weighted(rng, rng.uniform(1, 4), 2, 40);
    const bool zero = tzeng_zeroness(a).zero;
    RandomizedZeroness z = randomized_zeroness(a, 40, iter);
    EXPECT_EQ(z.probably_zero, zero);
    if (!zero && z.witness) {
      EXPECT_FALSE(weight(a, *z.witness).is_zero());
    }
  }
}

TEST(Isolating, SeedDeterminesTheRun) {
  Rng rng(36);
  auto a = testing::random_weighted(rng, 4, 2, 50);
  RandomizedZeroness x = randomized_zeroness(a, 40, 99), y = randomized_zeroness(a, 40, 99);
  EXPECT_EQ(x.probably_zero, y.probably_zero);
  EXPECT_EQ(x.witness, y.witness);
  EXPECT_EQ(x.trials_run, y.trials_run);
  IsoResult p = iso_trial(a, 5, 2), q = iso_trial(a, 5, 2);
  EXPECT_EQ(p.assignment.values(), q.assignment.values());
}

TEST(Isolating, RandomizedEquivalenceWitness) {
  Rng rng(37);
  for (int iter = 0; iter < 20; ++iter) {
    auto b = testing::random_weighted(rng, 2, 2), c = testing::random_weighted(rng, 2, 2);
    RandomizedEquivalence e = randomized_equivalence(b, c, 40, iter);
    EXPECT_EQ(e.probably_equivalent, equivalence(b, c).equivalent);
    if (e.witness) {
      EXPECT_NE(weight(b, *e.witness), weight(c, *e.witness));
    }
    EXPECT_TRUE(randomized_equivalence(b, b, 5, iter).probably_equivalent);
  }
}

}  // namespace
}  // namespace probeq
