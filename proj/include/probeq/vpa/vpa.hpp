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
#include <optional>
#include <vector>

#include "probeq/numerics/matrix.hpp"
#include "probeq/weighted/automaton.hpp"

namespace probeq {

enum class SymbolKind { kCall, kReturn, kInternal };

/// Σ = Σ_c ∪ Σ_r ∪ Σ_int, pairwise disjoint.
struct VisiblyAlphabet {
  std::vector<Symbol> calls;
  std::vector<Symbol> returns;
  std::vector<Symbol> internals;

  /// Throws kAlphabet on overlap, duplicates or an empty union.
  void validate() const;
  /// Kind and index within its class; kSymbol if unknown.
  std::pair<SymbolKind, std::size_t> classify(const Symbol& s) const;
  std::optional<std::pair<SymbolKind, std::size_t>> find(const Symbol& s) const;

  friend bool operator==(const VisiblyAlphabet&, const VisiblyAlphabet&) = default;
};

/// Weighted visibly pushdown automaton (n, α, η, Γ, M_c, M_r, M_int).
class WeightedVPA {
 public:
  WeightedVPA() = default;
  /// `calls[a][g]` is M_c(a, γ_g), `returns[b][g]` is M_r(b, γ_g).
  WeightedVPA(VisiblyAlphabet alphabet, std::vector<Symbol> stack,
              std::vector<std::vector<QMatrix>> calls, std::vector<std::vector<QMatrix>> returns,
              std::vector<QMatrix> internals, QMatrix initial, QMatrix final_weights);

  /// All-zero matrices of the right shape, to be filled in.
  static WeightedVPA zero(VisiblyAlphabet alphabet, std::vector<Symbol> stack, std::size_t n);

  std::size_t states() const { return initial_.cols(); }
  const VisiblyAlphabet& alphabet() const { return alphabet_; }
  const std::vector<Symbol>& stack() const { return stack_; }
  const QMatrix& call(std::size_t a, std::size_t g) const { return calls_[a][g]; }
  const QMatrix& ret(std::size_t b, std::size_t g) const { return returns_[b][g]; }
  const QMatrix& internal(std::size_t i) const { return internals_[i]; }
  QMatrix& call(std::size_t a, std::size_t g) { return calls_[a][g]; }
  QMatrix& ret(std::size_t b, std::size_t g) { return returns_[b][g]; }
  QMatrix& internal(std::size_t i) { return internals_[i]; }
  const QMatrix& initial() const { return initial_; }
  const QMatrix& final_weights() const { return final_; }
  QMatrix& initial() { return initial_; }
  QMatrix& final_weights() { return final_; }

  friend bool operator==(const WeightedVPA&, const WeightedVPA&) = default;

 private:
  VisiblyAlphabet alphabet_;
  std::vector<Symbol> stack_;
  std::vector<std::vector<QMatrix>> calls_;
  std::vector<std::vector<QMatrix>> returns_;
  std::vector<QMatrix> internals_;
  QMatrix initial_;
  QMatrix final_;
};

/// n_A·n_B states over Γ_A × Γ_B (pair (g, h) has index g·|Γ_B| + h) with
/// Kronecker-product transitions; (A×B)(w) = A(w)·B(w).
WeightedVPA product(const WeightedVPA& a, const WeightedVPA& b);

}  // namespace probeq
