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

#include "probeq/cost/cost_automaton.hpp"

#include <algorithm>
#include <set>

#include "probeq/error.hpp"

namespace probeq {
namespace {

std::string exponent_str(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

LaurentMatrix block(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix m(a.size() + b.size(), a.arity());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(a.size() + i, a.size() + j) = b(i, j);
  return m;
}

}  // namespace

LaurentMatrix::LaurentMatrix(std::size_t n, std::size_t arity)
    : n_(n), arity_(arity), entries_(n * n, LaurentPoly(arity)) {}

QMatrix LaurentMatrix::evaluate(const std::vector<Rational>& point) const {
  QMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  return m;
}

Rational LaurentMatrix::norm(const std::vector<Rational>* point) const {
  Rational best;
  for (std::size_t i = 0; i < n_; ++i) {
    Rational row;
    for (std::size_t j = 0; j < n_; ++j) {
      row += point ? (*this)(i, j).weighted_l1_norm(*point) : (*this)(i, j).l1_norm();
    }
    if (row > best) best = row;
  }
  return best;
}

bool LaurentMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const LaurentPoly& p) { return p.is_zero(); });
}

CostAutomaton::CostAutomaton(std::size_t counters, std::vector<Symbol> alphabet,
                             std::vector<LaurentMatrix> transitions, LaurentMatrix epsilon,
                             QMatrix initial, QMatrix final_weights)
    : counters_(counters),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      epsilon_(std::move(epsilon)),
      initial_(std::move(initial)),
      final_(std::move(final_weights)) {
  const std::size_t n = initial_.cols();
  if (initial_.rows() != 1) throw Error(ErrorCode::kDimension, "initial vector must be 1×n");
  if (final_.rows() != n || final_.cols() != 1) {
    throw Error(ErrorCode::kDimension, "final vector must be " + std::to_string(n) + "×1");
  }
  if (transitions_.size() != alphabet_.size()) {
    throw Error(ErrorCode::kDimension, "one transition matrix per symbol expected");
  }
  auto check = [&](const LaurentMatrix& m, const std::string& name) {
    if (m.size() != n) throw Error(ErrorCode::kDimension, "M(" + name + ") has the wrong size");
    if (m.arity() != counters_) {
      throw Error(ErrorCode::kCounterArity, "M(" + name + ") has the wrong counter arity");
    }
  };
  std::set<Symbol> seen;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i].empty()) throw Error(ErrorCode::kAlphabet, "empty symbol name");
    if (!seen.insert(alphabet_[i]).second) {
      throw Error(ErrorCode::kAlphabet, "duplicate symbol '" + alphabet_[i] + "'");
    }
    check(transitions_[i], alphabet_[i]);
  }
  check(epsilon_, "ε");
}

CostAutomaton CostAutomaton::from_edges(std::size_t states, std::size_t counters,
                                        std::vector<Symbol> alphabet,
                                        const std::map<Symbol, std::vector<CostEdge>>& edges,
                                        const std::vector<CostEdge>& epsilon, QMatrix initial,
                                        QMatrix final_weights) {
  auto fill = [&](LaurentMatrix& m, const std::vector<CostEdge>& list) {
    for (const auto& e : list) {
      if (e.from >= states || e.to >= states) {
        throw Error(ErrorCode::kDimension, "edge state out of range");
      }
      if (e.cost.size() != counters) {
        throw Error(ErrorCode::kCounterArity, "cost vector of the wrong length");
      }
      m(e.from, e.to).add_term(e.cost, e.weight);
    }
  };
  std::vector<LaurentMatrix> mats(alphabet.size(), LaurentMatrix(states, counters));
  for (const auto& [sym, list] : edges) {
    auto it = std::find(alphabet.begin(), alphabet.end(), sym);
    if (it == alphabet.end()) throw Error(ErrorCode::kSymbol, "unknown symbol '" + sym + "'");
    fill(mats[it - alphabet.begin()], list);
  }
  LaurentMatrix eps(states, counters);
  fill(eps, epsilon);
  return CostAutomaton(counters, std::move(alphabet), std::move(mats), std::move(eps),
                       std::move(initial), std::move(final_weights));
}

std::size_t CostAutomaton::symbol_index(const Symbol& symbol) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), symbol);
  if (it == alphabet_.end()) throw Error(ErrorCode::kSymbol, "unknown symbol '" + symbol + "'");
  return it - alphabet_.begin();
}

CostAutomaton CostAutomaton::reorder_alphabet(const std::vector<Symbol>& order) const {
  require_same_alphabet(alphabet_, order);
  std::vector<LaurentMatrix> m;
  for (const auto& s : order) m.push_back(transitions_[symbol_index(s)]);
  return CostAutomaton(counters_, order, std::move(m), epsilon_, initial_, final_);
}

ValidationReport validate(const CostAutomaton& a) {
  ValidationReport r;
  const std::size_t n = a.states();
  auto support = [&](const LaurentMatrix& m, const std::string& name) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [e, c] : m(i, j).terms()) {
          for (int x : e) {
            if (x < -1 || x > 1) {
              r.violations.push_back("M(" + name + ")[" + std::to_string(i) + "][" +
                                     std::to_string(j) + "] has cost vector " +
                                     exponent_str(e) + " outside {-1,0,1}^s");
              break;
            }
          }
        }
  };
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) support(a.transition(s), a.alphabet()[s]);
  support(a.epsilon(), "epsilon");
  for (std::size_t i = 0; i < n; ++i) {
    Rational row;
    for (std::size_t j = 0; j < n; ++j) row += a.epsilon()(i, j).l1_norm();
    if (row >= Rational(1)) {
      r.violations.push_back("epsilon row " + std::to_string(i) + " has total weight " +
                             row.str() + ", which is not below 1");
    }
  }
  r.ok = r.violations.empty();
  return r;
}

void require_valid(const CostAutomaton& a) {
  ValidationReport r = validate(a);
  if (!r.ok) throw Error(ErrorCode::kValidation, r.violations.front());
}

std::optional<WeightedAutomaton> try_substitute(const CostAutomaton& a,
                                                const std::vector<Rational>& point) {
  if (point.size() != a.counters()) {
    throw Error(ErrorCode::kCounterArity, "point has the wrong number of coordinates");
  }
  const std::size_t n = a.states();
  auto e = try_inverse(QMatrix::identity(n) - a.epsilon().evaluate(point));
  if (!e) return std::nullopt;
  std::vector<QMatrix> m;
  for (const auto& t : a.transitions()) m.push_back(t.evaluate(point) * *e);
  return WeightedAutomaton(a.alphabet(), std::move(m), a.initial() * *e, a.final_weights());
}

WeightedAutomaton substitute(const CostAutomaton& a, const std::vector<Rational>& point) {
  auto b = try_substitute(a, point);
  if (!b) throw Error(ErrorCode::kSingular, "I - M(epsilon) is singular at the sample point");
  return *std::move(b);
}

CostAutomaton difference(const CostAutomaton& b, const CostAutomaton& c_in) {
  if (b.counters() != c_in.counters()) {
    throw Error(ErrorCode::kCounterArity, "automata have different counter counts");
  }
  const CostAutomaton c = c_in.reorder_alphabet(b.alphabet());
  std::vector<LaurentMatrix> m;
  for (std::size_t i = 0; i < b.alphabet().size(); ++i) {
    m.push_back(block(b.transition(i), c.transition(i)));
  }
  return CostAutomaton(b.counters(), b.alphabet(), std::move(m), block(b.epsilon(), c.epsilon()),
                       hconcat(b.initial(), -c.initial()),
                       vconcat(b.final_weights(), c.final_weights()));
}

}  // namespace probeq
