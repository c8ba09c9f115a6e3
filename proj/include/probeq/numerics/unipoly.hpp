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
#include <optional>
#include <string>

#include "probeq/numerics/rational.hpp"

namespace probeq {

/// Sparse univariate polynomial over Q. Zero coefficients are never stored.
class UniPoly {
 public:
  UniPoly() = default;
  static UniPoly monomial(std::size_t degree, const Rational& coefficient);

  bool is_zero() const { return terms_.empty(); }
  /// Highest degree with a non-zero coefficient; nullopt stands for the
  /// degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const;
  /// Lowest degree with a non-zero coefficient; nullopt for zero.
  std::optional<std::size_t> min_degree() const;
  Rational coefficient(std::size_t degree) const;
  const std::map<std::size_t, Rational>& terms() const { return terms_; }

  void add_term(std::size_t degree, const Rational& coefficient);

  UniPoly& operator+=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string str() const;

 private:
  std::map<std::size_t, Rational> terms_;
};

}  // namespace probeq
