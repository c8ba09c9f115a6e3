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

#include "probeq/weighted/zeroness.hpp"

#include <deque>

#include "probeq/error.hpp"
#include "probeq/numerics/row_basis.hpp"

namespace probeq {
namespace {

struct Node {
  Word word;
  QMatrix vec;
};

Word verified(const WeightedAutomaton& a, Word w) {
  if (weight(a, w).is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "internal: witness '" + word_str(w) +
                                                 "' failed re-verification");
  }
  return w;
}

}  // namespace

ZeronessResult tzeng_zeroness(const WeightedAutomaton& a) {
  const std::size_t n = a.states();
  RowBasis basis(n);
  std::deque<Node> queue;
  const QMatrix& eta = a.final_weights();

  // Candidates are produced in length-lexicographic order. A candidate whose
  // vector is spanned by earlier ones has weight zero whenever all earlier
  // words do, and so do its extensions; only independent ones are expanded.
  auto visit = [&](Word w, QMatrix v) -> std::optional<Word> {
    if (!dot(v, eta).is_zero()) return verified(a, std::move(w));
    if (basis.insert(v)) queue.push_back({std::move(w), std::move(v)});
    return std::nullopt;
  };

  if (auto hit = visit({}, a.initial())) return {false, hit};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
      Word w = node.word;
      w.push_back(a.alphabet()[s]);
      if (auto hit = visit(std::move(w), node.vec * a.transition(s))) return {false, hit};
    }
  }
  return {true, std::nullopt};
}

ZeronessResult brute_force_zeroness(const WeightedAutomaton& a, std::uint64_t budget) {
  const std::size_t n = a.states();
  const std::size_t k = a.alphabet().size();
  const std::size_t max_len = n == 0 ? 0 : n - 1;
  std::uint64_t total = 1, level = 1;
  for (std::size_t len = 1; len <= max_len && k > 0; ++len) {
    if (level > budget / k) throw Error(ErrorCode::kBudget, "word enumeration exceeds budget");
    level *= k;
    total += level;
    if (total > budget) throw Error(ErrorCode::kBudget, "word enumeration exceeds budget");
  }

  std::vector<Node> frontier{{{}, a.initial()}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& node : frontier) {
      if (!dot(node.vec, a.final_weights()).is_zero()) {
        return {false, verified(a, node.word)};
      }
    }
    if (len == max_len || k == 0) break;
    std::vector<Node> next;
    next.reserve(frontier.size() * k);
    for (const auto& node : frontier) {
      for (std::size_t s = 0; s < k; ++s) {
        Word w = node.word;
        w.push_back(a.alphabet()[s]);
        next.push_back({std::move(w), node.vec * a.transition(s)});
      }
    }
    frontier = std::move(next);
  }
  return {true, std::nullopt};
}

EquivalenceResult equivalence(const WeightedAutomaton& b, const WeightedAutomaton& c) {
  ZeronessResult z = tzeng_zeroness(difference(b, c));
  if (z.zero) return {true, std::nullopt};
  if (weight(b, *z.witness) == weight(c, *z.witness)) {
    throw Error(ErrorCode::kInvalidArgument, "internal: equivalence witness did not verify");
  }
  return {false, z.witness};
}

}  // namespace probeq
