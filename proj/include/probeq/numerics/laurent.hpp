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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "probeq/numerics/rational.hpp"

namespace probeq {

using Exponent = std::vector<int>;

/// Finitely supported map Z^s -> Q, read as a Laurent polynomial in s
/// variables. Arity zero is allowed and behaves as a plain scalar.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t arity = 0) : arity_(arity) {}

  static LaurentPoly constant(std::size_t arity, const Rational& value);
  static LaurentPoly monomial(Exponent exponent, const Rational& coefficient);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& exponent) const;

  void add_term(const Exponent& exponent, const Rational& coefficient);

  /// Sum of |coefficient|, the l1 norm.
  Rational l1_norm() const;
  /// Sum of |coefficient|·|point^exponent|; equals l1_norm() at (1,…,1).
  Rational weighted_l1_norm(std::span<const Rational> point) const;

  /// Value at `point`. Throws ErrorCode::kEval when a coordinate is zero and
  /// carries a negative exponent, ErrorCode::kDimension on arity mismatch.
  Rational evaluate(std::span<const Rational> point) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string str() const;

 private:
  void check_arity(const LaurentPoly& other) const;

  std::size_t arity_;
  std::map<Exponent, Rational> terms_;
};

/// Monomial value point^exponent (same zero-coordinate rules as evaluate).
Rational monomial_value(const Exponent& exponent, std::span<const Rational> point);

}  // namespace probeq
