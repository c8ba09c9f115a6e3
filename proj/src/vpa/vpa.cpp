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

#include "probeq/vpa/vpa.hpp"

#include <algorithm>
#include <set>

#include "probeq/error.hpp"

namespace probeq {

void VisiblyAlphabet::validate() const {
  std::set<Symbol> seen;
  for (const auto* group : {&calls, &returns, &internals}) {
    for (const auto& s : *group) {
      if (s.empty()) throw Error(ErrorCode::kAlphabet, "empty symbol name");
      if (!seen.insert(s).second) {
        throw Error(ErrorCode::kAlphabet, "symbol '" + s + "' appears more than once");
      }
    }
  }
  if (seen.empty()) throw Error(ErrorCode::kAlphabet, "visibly alphabet is empty");
}

std::optional<std::pair<SymbolKind, std::size_t>> VisiblyAlphabet::find(const Symbol& s) const {
  auto look = [&](const std::vector<Symbol>& v) -> std::optional<std::size_t> {
    auto it = std::find(v.begin(), v.end(), s);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  };
  if (auto i = look(calls)) return std::make_pair(SymbolKind::kCall, *i);
  if (auto i = look(returns)) return std::make_pair(SymbolKind::kReturn, *i);
  if (auto i = look(internals)) return std::make_pair(SymbolKind::kInternal, *i);
  return std::nullopt;
}

std::pair<SymbolKind, std::size_t> VisiblyAlphabet::classify(const Symbol& s) const {
  auto r = find(s);
  if (!r) throw Error(ErrorCode::kSymbol, "unknown symbol '" + s + "'");
  return *r;
}

WeightedVPA::WeightedVPA(VisiblyAlphabet alphabet, std::vector<Symbol> stack,
                         std::vector<std::vector<QMatrix>> calls,
                         std::vector<std::vector<QMatrix>> returns,
                         std::vector<QMatrix> internals, QMatrix initial, QMatrix final_weights)
    : alphabet_(std::move(alphabet)),
      stack_(std::move(stack)),
      calls_(std::move(calls)),
      returns_(std::move(returns)),
      internals_(std::move(internals)),
      initial_(std::move(initial)),
      final_(std::move(final_weights)) {
  alphabet_.validate();
  std::set<Symbol> seen;
  for (const auto& g : stack_) {
    if (!seen.insert(g).second) throw Error(ErrorCode::kAlphabet, "duplicate stack symbol '" + g + "'");
  }
  const std::size_t n = initial_.cols();
  if (initial_.rows() != 1) throw Error(ErrorCode::kDimension, "initial vector must be 1×n");
  if (final_.rows() != n || final_.cols() != 1) {
    throw Error(ErrorCode::kDimension, "final vector must be " + std::to_string(n) + "×1");
  }
  auto square = [&](const QMatrix& m, const std::string& what) {
    if (m.rows() != n || m.cols() != n) {
      throw Error(ErrorCode::kDimension, what + " is not " + std::to_string(n) + "×" +
                                             std::to_string(n));
    }
  };
  auto table = [&](const std::vector<std::vector<QMatrix>>& t, const std::vector<Symbol>& syms,
                   const std::string& what) {
    if (t.size() != syms.size()) throw Error(ErrorCode::kDimension, what + " table size mismatch");
    for (std::size_t a = 0; a < t.size(); ++a) {
      if (t[a].size() != stack_.size()) {
        throw Error(ErrorCode::kDimension, what + "(" + syms[a] + ") needs one matrix per stack symbol");
      }
      for (std::size_t g = 0; g < t[a].size(); ++g) {
        square(t[a][g], what + "(" + syms[a] + "," + stack_[g] + ")");
      }
    }
  };
  table(calls_, alphabet_.calls, "M_c");
  table(returns_, alphabet_.returns, "M_r");
  if (internals_.size() != alphabet_.internals.size()) {
    throw Error(ErrorCode::kDimension, "one internal matrix per internal symbol expected");
  }
  for (std::size_t i = 0; i < internals_.size(); ++i) {
    square(internals_[i], "M_int(" + alphabet_.internals[i] + ")");
  }
}

WeightedVPA WeightedVPA::zero(VisiblyAlphabet alphabet, std::vector<Symbol> stack, std::size_t n) {
  const QMatrix z(n, n);
  std::vector<std::vector<QMatrix>> c(alphabet.calls.size(), std::vector<QMatrix>(stack.size(), z));
  std::vector<std::vector<QMatrix>> r(alphabet.returns.size(),
                                      std::vector<QMatrix>(stack.size(), z));
  std::vector<QMatrix> i(alphabet.internals.size(), z);
  return WeightedVPA(std::move(alphabet), std::move(stack), std::move(c), std::move(r),
                     std::move(i), QMatrix(1, n), QMatrix(n, 1));
}

WeightedVPA product(const WeightedVPA& a, const WeightedVPA& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorCode::kAlphabet, "product needs identical visibly alphabets");
  }
  std::vector<Symbol> stack;
  for (const auto& g : a.stack())
    for (const auto& h : b.stack()) stack.push_back("(" + g + "," + h + ")");
  const auto& al = a.alphabet();
  const std::size_t ga = a.stack().size(), gb = b.stack().size();
  std::vector<std::vector<QMatrix>> calls(al.calls.size()), rets(al.returns.size());
  for (std::size_t c = 0; c < al.calls.size(); ++c)
    for (std::size_t g = 0; g < ga; ++g)
      for (std::size_t h = 0; h < gb; ++h) calls[c].push_back(kronecker(a.call(c, g), b.call(c, h)));
  for (std::size_t r = 0; r < al.returns.size(); ++r)
    for (std::size_t g = 0; g < ga; ++g)
      for (std::size_t h = 0; h < gb; ++h) rets[r].push_back(kronecker(a.ret(r, g), b.ret(r, h)));
  std::vector<QMatrix> ints;
  for (std::size_t i = 0; i < al.internals.size(); ++i) {
    ints.push_back(kronecker(a.internal(i), b.internal(i)));
  }
  return WeightedVPA(al, std::move(stack), std::move(calls), std::move(rets), std::move(ints),
                     kronecker(a.initial(), b.initial()),
                     kronecker(a.final_weights(), b.final_weights()));
}

}  // namespace probeq
