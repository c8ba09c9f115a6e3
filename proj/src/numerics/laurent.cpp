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

#include "probeq/numerics/laurent.hpp"

#include <sstream>

#include "probeq/error.hpp"

namespace probeq {

LaurentPoly LaurentPoly::constant(std::size_t arity, const Rational& value) {
  LaurentPoly p(arity);
  p.add_term(Exponent(arity, 0), value);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponent exponent, const Rational& coefficient) {
  LaurentPoly p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

Rational LaurentPoly::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentPoly::add_term(const Exponent& exponent, const Rational& coefficient) {
  if (exponent.size() != arity_) {
    throw Error(ErrorCode::kDimension, "exponent of length " + std::to_string(exponent.size()) +
                                           " in a polynomial of arity " +
                                           std::to_string(arity_));
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational LaurentPoly::l1_norm() const {
  Rational total;
  for (const auto& [e, c] : terms_) total += c.abs();
  return total;
}

Rational LaurentPoly::weighted_l1_norm(std::span<const Rational> point) const {
  Rational total;
  for (const auto& [e, c] : terms_) total += c.abs() * monomial_value(e, point).abs();
  return total;
}

Rational monomial_value(const Exponent& exponent, std::span<const Rational> point) {
  if (exponent.size() != point.size()) {
    throw Error(ErrorCode::kDimension, "point of dimension " + std::to_string(point.size()) +
                                           " for arity " + std::to_string(exponent.size()));
  }
  Rational value = 1;
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    if (exponent[i] == 0) continue;
    if (point[i].is_zero()) {
      if (exponent[i] < 0) {
        throw Error(ErrorCode::kEval,
                    "coordinate " + std::to_string(i) + " is zero under a negative exponent");
      }
      return Rational();
    }
    value *= point[i].pow(exponent[i]);
  }
  return value;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) {
    throw Error(ErrorCode::kDimension, "point of dimension " + std::to_string(point.size()) +
                                           " for arity " + std::to_string(arity_));
  }
  Rational total;
  for (const auto& [e, c] : terms_) total += c * monomial_value(e, point);
  return total;
}

void LaurentPoly::check_arity(const LaurentPoly& other) const {
  if (other.arity_ != arity_) {
    throw Error(ErrorCode::kDimension, "arity mismatch " + std::to_string(arity_) + " vs " +
                                           std::to_string(other.arity_));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_arity(b);
  LaurentPoly out(a.arity_);
  Exponent sum(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

LaurentPoly operator*(const Rational& s, const LaurentPoly& a) {
  LaurentPoly out(a.arity_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) os << "*x" << (i + 1) << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace probeq
