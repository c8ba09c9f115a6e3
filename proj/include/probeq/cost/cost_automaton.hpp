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
#include <vector>

#include "probeq/numerics/laurent.hpp"
#include "probeq/numerics/matrix.hpp"
#include "probeq/weighted/automaton.hpp"

namespace probeq {

/// n×n matrix of Laurent polynomials, row-major.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t n, std::size_t arity);

  std::size_t size() const { return n_; }
  std::size_t arity() const { return arity_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  /// Numeric matrix Σ_v M(v) r^v.
  QMatrix evaluate(const std::vector<Rational>& point) const;
  /// max_i Σ_j ||M_ij||, with coefficients weighted by |r^v| when a point is given.
  Rational norm(const std::vector<Rational>* point = nullptr) const;
  bool is_zero() const;

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t arity_ = 0;
  std::vector<LaurentPoly> entries_;
};

struct CostEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Exponent cost;
  Rational weight;
};

/// Weighted automaton with ε-transitions whose transitions carry cost vectors
/// in {−1,0,1}^s.
class CostAutomaton {
 public:
  CostAutomaton() = default;
  /// Checks shapes and arities (kDimension, kAlphabet); the support and
  /// ε-norm conditions are left to validate().
  CostAutomaton(std::size_t counters, std::vector<Symbol> alphabet,
                std::vector<LaurentMatrix> transitions, LaurentMatrix epsilon, QMatrix initial,
                QMatrix final_weights);

  static CostAutomaton from_edges(std::size_t states, std::size_t counters,
                                  std::vector<Symbol> alphabet,
                                  const std::map<Symbol, std::vector<CostEdge>>& edges,
                                  const std::vector<CostEdge>& epsilon, QMatrix initial,
                                  QMatrix final_weights);

  std::size_t states() const { return initial_.cols(); }
  std::size_t counters() const { return counters_; }
  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  const std::vector<LaurentMatrix>& transitions() const { return transitions_; }
  const LaurentMatrix& transition(std::size_t symbol_index) const {
    return transitions_[symbol_index];
  }
  std::size_t symbol_index(const Symbol& symbol) const;
  const LaurentMatrix& epsilon() const { return epsilon_; }
  const QMatrix& initial() const { return initial_; }
  const QMatrix& final_weights() const { return final_; }

  CostAutomaton reorder_alphabet(const std::vector<Symbol>& order) const;

  friend bool operator==(const CostAutomaton&, const CostAutomaton&) = default;

 private:
  std::size_t counters_ = 0;
  std::vector<Symbol> alphabet_;
  std::vector<LaurentMatrix> transitions_;
  LaurentMatrix epsilon_;
  QMatrix initial_;
  QMatrix final_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Support ⊆ {−1,0,1}^s and ||M(ε)|| < 1, checked exactly.
ValidationReport validate(const CostAutomaton& a);

/// Throws kValidation with the first violation when the automaton is invalid.
void require_valid(const CostAutomaton& a);

/// B with α_B = α·E, M_B(σ) = M_r(σ)·E, η_B = η and E = (I − M_r(ε))^{-1},
/// so that B(w) is the value of A(w) at r. Throws kSingular when I − M_r(ε)
/// is singular and kEval on a zero coordinate.
WeightedAutomaton substitute(const CostAutomaton& a, const std::vector<Rational>& point);
std::optional<WeightedAutomaton> try_substitute(const CostAutomaton& a,
                                                const std::vector<Rational>& point);

/// Block difference over Σ ∪ {ε}; kAlphabet / kCounterArity on mismatch.
CostAutomaton difference(const CostAutomaton& b, const CostAutomaton& c);

}  // namespace probeq
