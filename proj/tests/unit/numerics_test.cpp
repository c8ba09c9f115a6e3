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

#include <map>

#include "generators.hpp"
#include "probeq/error.hpp"
#include "probeq/numerics/laurent.hpp"
#include "probeq/numerics/matrix.hpp"
#include "probeq/numerics/rational.hpp"
#include "probeq/numerics/rng.hpp"
#include "probeq/numerics/row_basis.hpp"
#include "probeq/numerics/unipoly.hpp"

namespace probeq {
namespace {

using Table = std::vector<std::vector<mpq_class>>;

Table table(const QMatrix& m) {
  Table t(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = m(i, j).value();
  return t;
}

// Plain Gauss-Jordan on raw mpq values.
std::size_t oracle_rank(Table t) {
  std::size_t r = 0;
  const std::size_t cols = t.empty() ? 0 : t[0].size();
  for (std::size_t c = 0; c < cols && r < t.size(); ++c) {
    std::size_t p = r;
    while (p < t.size() && t[p][c] == 0) ++p;
    if (p == t.size()) continue;
    std::swap(t[p], t[r]);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      mpq_class f = t[i][c] / t[r][c];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[r][j];
    }
    ++r;
  }
  return r;
}

TEST(Rational, ParseAndPrintReduced) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-0/7").str(), "0");
  EXPECT_EQ(Rational::parse("5").str(), "5");
  EXPECT_EQ(Rational::parse("-2/4").str(), "-1/2");
  EXPECT_THROW(Rational::parse("2/-4"), Error);
}

TEST(Rational, RejectsFloatsAndZeroDenominator) {
  EXPECT_THROW(Rational::parse("0.5"), Error);
  EXPECT_THROW(Rational::parse("1e3"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
  try {
    Rational::parse("1/0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

TEST(Rational, ArithmeticAndPow) {
  Rational a(2, 3), b(-1, 4);
  EXPECT_EQ(a + b, Rational(5, 12));
  EXPECT_EQ(a * b, Rational(-1, 6));
  EXPECT_EQ(a / b, Rational(-8, 3));
  EXPECT_EQ(a.pow(-2), Rational(9, 4));
  EXPECT_EQ(b.pow(0), Rational(1));
  EXPECT_THROW(Rational().inverse(), Error);
  EXPECT_THROW(Rational(1) / Rational(), Error);
}

TEST(QMatrix, ProductMatchesNaiveOracle) {
  Rng rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t r = rng.uniform(1, 4), k = rng.uniform(1, 4), c = rng.uniform(1, 4);
    QMatrix a = testing::random_matrix(rng, r, k), b = testing::random_matrix(rng, k, c);
    Table ta = table(a), tb = table(b);
    QMatrix p = a * b;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        mpq_class s = 0;
        for (std::size_t l = 0; l < k; ++l) s += ta[i][l] * tb[l][j];
        EXPECT_EQ(p(i, j).value(), s);
      }
  }
}

TEST(QMatrix, DimensionErrors) {
  QMatrix a(2, 3), b(2, 3);
  try {
    (void)(a * b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimension);
  }
  EXPECT_THROW((void)(a + QMatrix(3, 2)), Error);
}

TEST(QMatrix, InverseRoundTrip) {
  Rng rng(12);
  int inverted = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = rng.uniform(1, 5);
    QMatrix a = testing::random_matrix(rng, n, n, 70);
    auto inv = try_inverse(a);
    EXPECT_EQ(inv.has_value(), oracle_rank(table(a)) == n);
    if (!inv) {
      EXPECT_THROW(inverse(a), Error);
      continue;
    }
    ++inverted;
    EXPECT_EQ(a * *inv, QMatrix::identity(n));
    EXPECT_EQ(*inv * a, QMatrix::identity(n));
  }
  EXPECT_GT(inverted, 10);
}

TEST(QMatrix, RankMatchesOracle) {
  Rng rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t r = rng.uniform(1, 5), c = rng.uniform(1, 5);
    QMatrix a = testing::random_matrix(rng, r, c, 35);
    EXPECT_EQ(rank(a), oracle_rank(table(a)));
  }
}

TEST(QMatrix, KroneckerMixedProduct) {
  Rng rng(14);
  for (int iter = 0; iter < 20; ++iter) {
    QMatrix a = testing::random_matrix(rng, 2, 3), b = testing::random_matrix(rng, 3, 2);
    QMatrix c = testing::random_matrix(rng, 3, 2), d = testing::random_matrix(rng, 2, 2);
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
  }
  QMatrix a(1, 2, {Rational(1), Rational(2)}), b(2, 1, {Rational(3), Rational(4)});
  EXPECT_EQ(kronecker(a, b), QMatrix(2, 2, {3, 6, 4, 8}));
}

TEST(QMatrix, BlockHelpers) {
  QMatrix a(1, 1, {Rational(2)}), b(2, 2, {1, 2, 3, 4});
  QMatrix d = block_diagonal(a, b);
  EXPECT_EQ(d.rows(), 3u);
  EXPECT_EQ(d(0, 0), Rational(2));
  EXPECT_EQ(d(2, 1), Rational(3));
  EXPECT_TRUE(d(0, 1).is_zero());
  EXPECT_EQ(hconcat(QMatrix(1, 1, {1}), QMatrix(1, 2, {2, 3})), QMatrix(1, 3, {1, 2, 3}));
  EXPECT_EQ(vconcat(QMatrix(1, 1, {1}), QMatrix(1, 1, {2})), QMatrix(2, 1, {1, 2}));
  EXPECT_EQ(dot(QMatrix(1, 2, {1, 2}), QMatrix(2, 1, {3, 4})), Rational(11));
}

TEST(RowBasis, SpanMembershipAgreesWithRank) {
  Rng rng(15);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t w = rng.uniform(2, 5);
    RowBasis basis(w);
    QMatrix stacked(0, w);
    for (int k = 0; k < 6; ++k) {
      QMatrix v = testing::random_matrix(rng, 1, w, 40);
      const bool before = basis.contains(v);
      QMatrix next = vconcat(stacked, v);
      EXPECT_EQ(before, oracle_rank(table(next)) == oracle_rank(table(stacked)) || v.is_zero());
      const bool added = basis.insert(v, k);
      EXPECT_EQ(added, !before);
      stacked = next;
      EXPECT_EQ(basis.size(), oracle_rank(table(stacked)));
    }
  }
}

TEST(RowBasis, SelectsFirstIndependentRows) {
  std::vector<QMatrix> rows{QMatrix(1, 2, {1, 0}), QMatrix(1, 2, {2, 0}), QMatrix(1, 2, {0, 1}),
                            QMatrix(1, 2, {1, 1})};
  BasisSelection s = row_space_basis(rows);
  EXPECT_EQ(s.indices, (std::vector<std::size_t>{0, 2}));
}

TEST(UniPoly, ProductAndDegrees) {
  UniPoly p = UniPoly::monomial(1, 2) + UniPoly::monomial(3, -1);
  UniPoly q = UniPoly::monomial(0, 1) + UniPoly::monomial(1, 1);
  UniPoly r = p * q;
  EXPECT_EQ(r.coefficient(1), Rational(2));
  EXPECT_EQ(r.coefficient(2), Rational(2));
  EXPECT_EQ(r.coefficient(3), Rational(-1));
  EXPECT_EQ(r.coefficient(4), Rational(-1));
  EXPECT_EQ(*r.min_degree(), 1u);
  EXPECT_EQ(*r.degree(), 4u);
  EXPECT_FALSE(UniPoly().degree().has_value());
}

LaurentPoly random_laurent(Rng& rng, std::size_t arity) {
  LaurentPoly p(arity);
  const std::size_t terms = rng.uniform(0, 4);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e;
    for (std::size_t i = 0; i < arity; ++i) e.push_back(static_cast<int>(rng.uniform(0, 6)) - 3);
    p.add_term(e, testing::small_rational(rng));
  }
  return p;
}

TEST(Laurent, ProductIsConvolution) {
  Rng rng(16);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t s = rng.uniform(1, 3);
    LaurentPoly p = random_laurent(rng, s), q = random_laurent(rng, s);
    std::map<Exponent, mpq_class> expected;
    for (const auto& [ea, ca] : p.terms())
      for (const auto& [eb, cb] : q.terms()) {
        Exponent e(s);
        for (std::size_t i = 0; i < s; ++i) e[i] = ea[i] + eb[i];
        expected[e] += ca.value() * cb.value();
      }
    LaurentPoly r = p * q;
    std::size_t nonzero = 0;
    for (const auto& [e, c] : expected) {
      EXPECT_EQ(r.coefficient(e).value(), c);
      nonzero += c != 0;
    }
    EXPECT_EQ(r.term_count(), nonzero);
  }
}

TEST(Laurent, EvaluationIsAHomomorphism) {
  Rng rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    LaurentPoly p = random_laurent(rng, 2), q = random_laurent(rng, 2);
    std::vector<Rational> x{Rational(static_cast<long>(rng.uniform(1, 5)), 2),
                            Rational(-static_cast<long>(rng.uniform(1, 5)), 3)};
    EXPECT_EQ((p * q).evaluate(x), p.evaluate(x) * q.evaluate(x));
    EXPECT_EQ((p + q).evaluate(x), p.evaluate(x) + q.evaluate(x));
    EXPECT_EQ((p - p).is_zero(), true);
  }
}

TEST(Laurent, NormsAndErrors) {
  LaurentPoly p = LaurentPoly::monomial({-1}, Rational(1, 2)) + LaurentPoly::monomial({2}, -3);
  EXPECT_EQ(p.l1_norm(), Rational(7, 2));
  std::vector<Rational> two{Rational(2)};
  EXPECT_EQ(p.weighted_l1_norm(two), Rational(1, 4) + Rational(12));
  std::vector<Rational> zero{Rational()};
  try {
    p.evaluate(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEval);
  }
  EXPECT_THROW(p += LaurentPoly(2), Error);
  EXPECT_THROW(p.add_term({1, 1}, 1), Error);
}

TEST(Rng, DerivedStreamsAreReproducibleAndDistinct) {
  Rng a = Rng::derive(5, 1, 3), b = Rng::derive(5, 1, 3), c = Rng::derive(5, 1, 4);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.uniform(3, 7);
    EXPECT_GE(v, 3u);
    EXPECT_LE(v, 7u);
  }
}

}  // namespace
}  // namespace probeq
