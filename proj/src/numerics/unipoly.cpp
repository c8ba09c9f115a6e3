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

#include "probeq/numerics/unipoly.hpp"

#include <sstream>

namespace probeq {

UniPoly UniPoly::monomial(std::size_t degree, const Rational& coefficient) {
  UniPoly p;
  p.add_term(degree, coefficient);
  return p;
}

std::optional<std::size_t> UniPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<std::size_t> UniPoly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational UniPoly::coefficient(std::size_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational() : it->second;
}

void UniPoly::add_term(std::size_t degree, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
  return out;
}

std::string UniPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (d > 0) os << "*x^" << d;
  }
  return os.str();
}

}  // namespace probeq
