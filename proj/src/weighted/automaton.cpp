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

#include "probeq/weighted/automaton.hpp"

#include <algorithm>
#include <set>

#include "probeq/error.hpp"

namespace probeq {

std::string word_str(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

WeightedAutomaton::WeightedAutomaton(std::vector<Symbol> alphabet,
                                     std::vector<QMatrix> transitions, QMatrix initial,
                                     QMatrix final_weights)
    : alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
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
  std::set<Symbol> seen;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i].empty()) throw Error(ErrorCode::kAlphabet, "empty symbol name");
    if (!seen.insert(alphabet_[i]).second) {
      throw Error(ErrorCode::kAlphabet, "duplicate symbol '" + alphabet_[i] + "'");
    }
    if (transitions_[i].rows() != n || transitions_[i].cols() != n) {
      throw Error(ErrorCode::kDimension, "M(" + alphabet_[i] + ") is not " +
                                             std::to_string(n) + "×" + std::to_string(n));
    }
  }
}

std::optional<std::size_t> WeightedAutomaton::find_symbol(const Symbol& symbol) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), symbol);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::size_t WeightedAutomaton::symbol_index(const Symbol& symbol) const {
  auto i = find_symbol(symbol);
  if (!i) throw Error(ErrorCode::kSymbol, "unknown symbol '" + symbol + "'");
  return *i;
}

const QMatrix& WeightedAutomaton::transition(const Symbol& symbol) const {
  return transitions_[symbol_index(symbol)];
}

WeightedAutomaton WeightedAutomaton::reorder_alphabet(const std::vector<Symbol>& order) const {
  require_same_alphabet(alphabet_, order);
  std::vector<QMatrix> m;
  m.reserve(order.size());
  for (const auto& s : order) m.push_back(transition(s));
  return WeightedAutomaton(order, std::move(m), initial_, final_);
}

void require_same_alphabet(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  std::set<Symbol> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  if (sa != sb) throw Error(ErrorCode::kAlphabet, "automata have different alphabets");
}

QMatrix forward(const WeightedAutomaton& a, const Word& w) {
  QMatrix v = a.initial();
  for (const auto& s : w) v = v * a.transition(s);
  return v;
}

Rational weight(const WeightedAutomaton& a, const Word& w) {
  return dot(forward(a, w), a.final_weights());
}

WeightedAutomaton difference(const WeightedAutomaton& b, const WeightedAutomaton& c_in) {
  const WeightedAutomaton c = c_in.reorder_alphabet(b.alphabet());
  std::vector<QMatrix> m;
  for (std::size_t i = 0; i < b.alphabet().size(); ++i) {
    m.push_back(block_diagonal(b.transition(i), c.transition(i)));
  }
  return WeightedAutomaton(b.alphabet(), std::move(m), hconcat(b.initial(), -c.initial()),
                           vconcat(b.final_weights(), c.final_weights()));
}

}  // namespace probeq
