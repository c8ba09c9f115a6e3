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

#include "probeq/cost/distribution.hpp"

#include "probeq/error.hpp"

namespace probeq {
namespace {

using LaurentRow = std::vector<LaurentPoly>;

LaurentRow times(const LaurentRow& v, const LaurentMatrix& m) {
  const std::size_t n = m.size();
  LaurentRow out(n, LaurentPoly(m.arity()));
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(i, j).is_zero()) out[j] += v[i] * m(i, j);
    }
  }
  return out;
}

// v · Σ_{k≤K} E^k
LaurentRow star(const LaurentRow& v, const LaurentMatrix& e, std::size_t k_max) {
  LaurentRow acc = v, term = v;
  if (e.is_zero()) return acc;
  for (std::size_t k = 0; k < k_max; ++k) {
    term = times(term, e);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
  }
  return acc;
}

bool inside(const Exponent& e, const Box& box) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < box[i].first || e[i] > box[i].second) return false;
  }
  return true;
}

Rational row_l1(const QMatrix& v) {
  Rational t;
  for (const auto& x : v.entries()) t += x.abs();
  return t;
}

Rational col_max(const QMatrix& v) {
  Rational t;
  for (const auto& x : v.entries()) {
    if (x.abs() > t) t = x.abs();
  }
  return t;
}

}  // namespace

SeriesWindow distribution(const CostAutomaton& a, const Word& w, const Box& box,
                          const Rational& tol, const std::optional<std::vector<Rational>>& point,
                          std::size_t max_truncation) {
  require_valid(a);
  const std::size_t s = a.counters(), n = a.states();
  if (box.size() != s) throw Error(ErrorCode::kCounterArity, "window has the wrong arity");
  if (tol.sign() <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  if (point && point->size() != s) {
    throw Error(ErrorCode::kCounterArity, "weighting point has the wrong arity");
  }
  const std::vector<Rational>* r = point ? &*point : nullptr;

  std::vector<std::size_t> symbols;
  for (const auto& sym : w) symbols.push_back(a.symbol_index(sym));

  const Rational q = a.epsilon().norm(r);
  if (q >= Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "weighted epsilon norm " + q.str() + " is not below 1");
  }
  Rational factors = row_l1(a.initial()) * col_max(a.final_weights());
  for (auto i : symbols) factors *= a.transition(i).norm(r);

  // Truncation error for K: factors·((a_K + T_K)^{m+1} − a_K^{m+1}) with
  // a_K = Σ_{k≤K} q^k and T_K = q^{K+1}/(1−q).
  const long m1 = static_cast<long>(symbols.size()) + 1;
  std::size_t k = 0;
  Rational qk = 1, partial = 1, bound;
  for (;; ++k) {
    const Rational tail = qk * q / (Rational(1) - q);
    bound = factors * ((partial + tail).pow(m1) - partial.pow(m1));
    if (bound < tol) break;
    if (k >= max_truncation) throw Error(ErrorCode::kBudget, "truncation depth exceeds budget");
    qk *= q;
    partial += qk;
  }

  LaurentRow v(n, LaurentPoly(s));
  for (std::size_t i = 0; i < n; ++i) v[i] = LaurentPoly::constant(s, a.initial()(0, i));
  v = star(v, a.epsilon(), k);
  for (auto i : symbols) v = star(times(v, a.transition(i)), a.epsilon(), k);
  LaurentPoly series(s);
  for (std::size_t i = 0; i < n; ++i) {
    series += a.final_weights()(i, 0) * v[i];
  }

  SeriesWindow out;
  out.box = box;
  out.tail_bound = bound;
  out.truncation = k;
  for (const auto& [e, c] : series.terms()) {
    if (inside(e, box)) {
      out.coefficients.emplace(e, c);
    } else {
      out.outside_mass += r ? c.abs() * monomial_value(e, *r).abs() : c.abs();
    }
  }
  return out;
}

Rational evaluate_window(const SeriesWindow& window, const std::vector<Rational>& point) {
  Rational total;
  for (const auto& [e, c] : window.coefficients) total += c * monomial_value(e, point);
  return total;
}

}  // namespace probeq
