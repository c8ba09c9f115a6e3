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
#include <string>
#include <vector>

#include "probeq/numerics/matrix.hpp"

namespace probeq {

using Symbol = std::string;
using Word = std::vector<Symbol>;

/// Space-separated rendering of a word; the empty word renders as "".
std::string word_str(const Word& w);

/// A Q-weighted automaton (n, Σ, M, α, η). Transition matrices are stored in
/// alphabet order.
class WeightedAutomaton {
 public:
  WeightedAutomaton() = default;
  /// Validates dimensions and symbol distinctness (kDimension / kAlphabet).
  WeightedAutomaton(std::vector<Symbol> alphabet, std::vector<QMatrix> transitions,
                    QMatrix initial, QMatrix final_weights);

  std::size_t states() const { return initial_.cols(); }
  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  const std::vector<QMatrix>& transitions() const { return transitions_; }
  const QMatrix& transition(std::size_t symbol_index) const { return transitions_[symbol_index]; }
  const QMatrix& transition(const Symbol& symbol) const;
  const QMatrix& initial() const { return initial_; }
  const QMatrix& final_weights() const { return final_; }

  /// Index of `symbol` in the alphabet; kSymbol if absent.
  std::size_t symbol_index(const Symbol& symbol) const;
  std::optional<std::size_t> find_symbol(const Symbol& symbol) const;

  /// Same automaton with the alphabet listed in `order` (a permutation).
  WeightedAutomaton reorder_alphabet(const std::vector<Symbol>& order) const;

  friend bool operator==(const WeightedAutomaton&, const WeightedAutomaton&) = default;

 private:
  std::vector<Symbol> alphabet_;
  std::vector<QMatrix> transitions_;
  QMatrix initial_;
  QMatrix final_;
};

/// α·M(w) as a 1×n row.
QMatrix forward(const WeightedAutomaton& a, const Word& w);
/// A(w) = α·M(w)·η.
Rational weight(const WeightedAutomaton& a, const Word& w);

/// Block construction with α = (α_B, −α_C); weight is B(w) − C(w). C's
/// alphabet may be a permutation of B's.
WeightedAutomaton difference(const WeightedAutomaton& b, const WeightedAutomaton& c);

/// Throws kAlphabet unless the two alphabets hold the same symbols.
void require_same_alphabet(const std::vector<Symbol>& a, const std::vector<Symbol>& b);

}  // namespace probeq
