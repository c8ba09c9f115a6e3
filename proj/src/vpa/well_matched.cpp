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

#include "probeq/vpa/well_matched.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "probeq/error.hpp"

namespace probeq {
namespace {

struct Frame {
  std::optional<std::size_t> acc;
  std::size_t call = 0;
};

std::size_t append(std::vector<WMNode>& nodes, std::optional<std::size_t> acc, std::size_t block) {
  if (!acc) return block;
  WMNode n;
  n.kind = WMNode::Kind::kConcat;
  n.left = *acc;
  n.right = block;
  nodes.push_back(n);
  return nodes.size() - 1;
}

std::size_t empty_node(std::vector<WMNode>& nodes) {
  nodes.push_back(WMNode{});
  return nodes.size() - 1;
}

// Least i such that the concatenation of blocks[lo..hi] lies in L_i.
std::size_t concat_index(const std::vector<std::size_t>& blocks) {
  const std::size_t m = blocks.size();
  if (m > 512) throw Error(ErrorCode::kBudget, "too many top-level blocks for the L-index search");
  std::vector<std::size_t> best(m * m);
  for (std::size_t i = 0; i < m; ++i) best[i * m + i] = blocks[i];
  for (std::size_t len = 2; len <= m; ++len) {
    for (std::size_t lo = 0; lo + len <= m; ++lo) {
      const std::size_t hi = lo + len - 1;
      std::size_t v = std::numeric_limits<std::size_t>::max();
      for (std::size_t k = lo; k < hi; ++k) {
        v = std::min(v, std::max(best[lo * m + k], best[(k + 1) * m + hi]) + 1);
      }
      best[lo * m + hi] = v;
    }
  }
  return best[m - 1];
}

std::size_t index_of(const WellMatchedWord& w, std::size_t id) {
  const WMNode& n = w.nodes[id];
  switch (n.kind) {
    case WMNode::Kind::kEmpty:
    case WMNode::Kind::kInternal:
      return 0;
    case WMNode::Kind::kNest:
      return index_of(w, n.left) + 1;
    case WMNode::Kind::kConcat: {
      std::vector<std::size_t> blocks;
      std::size_t cur = id;
      while (w.nodes[cur].kind == WMNode::Kind::kConcat) {
        blocks.push_back(index_of(w, w.nodes[cur].right));
        cur = w.nodes[cur].left;
      }
      blocks.push_back(index_of(w, cur));
      std::reverse(blocks.begin(), blocks.end());
      return concat_index(blocks);
    }
  }
  return 0;
}

void sample_into(const VisiblyAlphabet& al, std::size_t depth, Rng& rng, Word& out) {
  const bool can_nest = !al.calls.empty() && !al.returns.empty();
  const std::uint64_t choice = depth == 0 ? 0 : rng.uniform(0, 2);
  if (choice == 1 && can_nest) {
    out.push_back(al.calls[rng.uniform(0, al.calls.size() - 1)]);
    sample_into(al, depth - 1, rng, out);
    out.push_back(al.returns[rng.uniform(0, al.returns.size() - 1)]);
    return;
  }
  if (choice == 2) {
    sample_into(al, depth - 1, rng, out);
    sample_into(al, depth - 1, rng, out);
    return;
  }
  const std::uint64_t pick = rng.uniform(0, al.internals.size());
  if (pick < al.internals.size()) out.push_back(al.internals[pick]);
}

}  // namespace

WellMatchedWord parse_well_matched(const Word& word, const VisiblyAlphabet& alphabet) {
  WellMatchedWord w;
  w.symbols = word;
  std::vector<Frame> frames(1);
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    auto [kind, idx] = alphabet.classify(word[pos]);
    if (kind == SymbolKind::kCall) {
      frames.push_back(Frame{std::nullopt, idx});
      continue;
    }
    std::size_t block;
    if (kind == SymbolKind::kInternal) {
      WMNode n;
      n.kind = WMNode::Kind::kInternal;
      n.symbol = idx;
      w.nodes.push_back(n);
      block = w.nodes.size() - 1;
    } else {
      if (frames.size() == 1) {
        throw Error(ErrorCode::kNotWellMatched,
                    "return '" + word[pos] + "' at position " + std::to_string(pos) +
                        " has no pending call");
      }
      Frame f = frames.back();
      frames.pop_back();
      WMNode n;
      n.kind = WMNode::Kind::kNest;
      n.symbol = f.call;
      n.ret = idx;
      n.left = f.acc ? *f.acc : empty_node(w.nodes);
      w.nodes.push_back(n);
      block = w.nodes.size() - 1;
    }
    frames.back().acc = append(w.nodes, frames.back().acc, block);
  }
  if (frames.size() != 1) {
    throw Error(ErrorCode::kNotWellMatched,
                std::to_string(frames.size() - 1) + " call(s) left unmatched");
  }
  w.root = frames.back().acc ? *frames.back().acc : empty_node(w.nodes);
  return w;
}

QMatrix vpa_matrix(const WeightedVPA& v, const WellMatchedWord& w) {
  const std::size_t n = v.states();
  std::vector<QMatrix> m(w.nodes.size());
  for (std::size_t id = 0; id < w.nodes.size(); ++id) {
    const WMNode& node = w.nodes[id];
    switch (node.kind) {
      case WMNode::Kind::kEmpty:
        m[id] = QMatrix::identity(n);
        break;
      case WMNode::Kind::kInternal:
        m[id] = v.internal(node.symbol);
        break;
      case WMNode::Kind::kConcat:
        m[id] = m[node.left] * m[node.right];
        break;
      case WMNode::Kind::kNest: {
        QMatrix sum(n, n);
        for (std::size_t g = 0; g < v.stack().size(); ++g) {
          const QMatrix& c = v.call(node.symbol, g);
          const QMatrix& r = v.ret(node.ret, g);
          if (c.is_zero() || r.is_zero()) continue;
          sum += c * m[node.left] * r;
        }
        m[id] = std::move(sum);
        break;
      }
    }
  }
  return m[w.root];
}

Rational vpa_weight(const WeightedVPA& v, const WellMatchedWord& w) {
  return dot(v.initial() * vpa_matrix(v, w), v.final_weights());
}

Rational vpa_weight(const WeightedVPA& v, const Word& w) {
  return vpa_weight(v, parse_well_matched(w, v.alphabet()));
}

std::size_t l_index(const WellMatchedWord& w) { return index_of(w, w.root); }

WellMatchedWord sample_well_matched(const VisiblyAlphabet& alphabet, std::size_t max_depth,
                                    Rng& rng) {
  Word out;
  sample_into(alphabet, max_depth, rng, out);
  return parse_well_matched(out, alphabet);
}

}  // namespace probeq
