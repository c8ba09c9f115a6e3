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

#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "generators.hpp"
#include "probeq/error.hpp"
#include "probeq/vpa/acit.hpp"
#include "probeq/vpa/sum_circuit.hpp"
#include "probeq/vpa/vpa.hpp"
#include "probeq/vpa/well_matched.hpp"

namespace probeq {
namespace {

using Config = std::pair<std::size_t, std::vector<std::size_t>>;

// Runs the automaton on explicit (state, stack) configurations.
Rational oracle_weight(const WeightedVPA& v, const Word& w) {
  const auto& al = v.alphabet();
  const std::size_t n = v.states();
  std::map<Config, Rational> cur;
  for (std::size_t p = 0; p < n; ++p)
    if (!v.initial()(0, p).is_zero()) cur[{p, {}}] = v.initial()(0, p);
  for (const auto& s : w) {
    auto [kind, idx] = al.classify(s);
    std::map<Config, Rational> next;
    for (const auto& [cfg, x] : cur) {
      const auto& [p, stack] = cfg;
      auto step = [&](const QMatrix& m, std::vector<std::size_t> st) {
        for (std::size_t q = 0; q < n; ++q)
          if (!m(p, q).is_zero()) next[{q, st}] += x * m(p, q);
      };
      if (kind == SymbolKind::kInternal) {
        step(v.internal(idx), stack);
      } else if (kind == SymbolKind::kCall) {
        for (std::size_t g = 0; g < v.stack().size(); ++g) {
          auto st = stack;
          st.push_back(g);
          step(v.call(idx, g), st);
        }
      } else if (!stack.empty()) {
        auto st = stack;
        const std::size_t g = st.back();
        st.pop_back();
        step(v.ret(idx, g), st);
      }
    }
    cur = std::move(next);
  }
  Rational total;
  for (const auto& [cfg, x] : cur)
    if (cfg.second.empty()) total += x * v.final_weights()(cfg.first, 0);
  return total;
}

// Least i with w in L_i, straight from the grammar.
std::size_t oracle_l_index(const Word& w, const VisiblyAlphabet& al) {
  const std::size_t len = w.size();
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> memo;
  std::function<bool(std::size_t, std::size_t, std::size_t)> in =
      [&](std::size_t i, std::size_t l, std::size_t r) -> bool {
    if (r == l) return true;
    auto key = std::make_tuple(i, l, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = r - l == 1 && al.classify(w[l]).first == SymbolKind::kInternal;
    if (!ok && i > 0) {
      ok = r - l >= 2 && al.classify(w[l]).first == SymbolKind::kCall &&
           al.classify(w[r - 1]).first == SymbolKind::kReturn && in(i - 1, l + 1, r - 1);
      for (std::size_t m = l + 1; !ok && m < r; ++m) ok = in(i - 1, l, m) && in(i - 1, m, r);
    }
    return memo[key] = ok;
  };
  for (std::size_t i = 0;; ++i)
    if (in(i, 0, len)) return i;
}

TEST(VisiblyAlphabet, DisjointnessAndClassification) {
  VisiblyAlphabet al = testing::small_visibly_alphabet();
  EXPECT_NO_THROW(al.validate());
  EXPECT_EQ(al.classify("s"), std::make_pair(SymbolKind::kReturn, std::size_t{1}));
  EXPECT_FALSE(al.find("z").has_value());
  VisiblyAlphabet bad{{"a"}, {"a"}, {}};
  try {
    bad.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlphabet);
  }
}

TEST(WellMatched, ParseErrors) {
  VisiblyAlphabet al = testing::small_visibly_alphabet();
  auto code_of = [&](const Word& w) {
    try {
      parse_well_matched(w, al);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code_of({"r"}), ErrorCode::kNotWellMatched);
  EXPECT_EQ(code_of({"c", "i"}), ErrorCode::kNotWellMatched);
  EXPECT_EQ(code_of({"i", "x"}), ErrorCode::kSymbol);
  EXPECT_NO_THROW(parse_well_matched({}, al));
}

TEST(WellMatched, NodesAreChildrenFirst) {
  VisiblyAlphabet al = testing::small_visibly_alphabet();
  WellMatchedWord w = parse_well_matched({"c", "i", "r", "j", "d", "s"}, al);
  EXPECT_EQ(w.root, w.nodes.size() - 1);
  for (std::size_t k = 0; k < w.nodes.size(); ++k) {
    const WMNode& n = w.nodes[k];
    if (n.kind == WMNode::Kind::kNest) EXPECT_LT(n.left, k);
    if (n.kind == WMNode::Kind::kConcat) {
      EXPECT_LT(n.left, k);
      EXPECT_LT(n.right, k);
    }
  }
}

TEST(WellMatched, WeightMatchesConfigurationOracle) {
  Rng rng(51);
  VisiblyAlphabet al = testing::small_visibly_alphabet();
  for (int iter = 0; iter < 60; ++iter) {
    WeightedVPA v = testing::random_vpa(rng, al, rng.uniform(1, 2), rng.uniform(1, 3));
    Rng wr = Rng::derive(51, streams::kTesting, iter);
    WellMatchedWord w = sample_well_matched(al, 3, wr);
    EXPECT_EQ(vpa_weight(v, w), oracle_weight(v, w.symbols)) << word_str(w.symbols);
    EXPECT_EQ(vpa_weight(v, w.symbols), vpa_weight(v, w));
  }
}

TEST(WellMatched, SampledWordsRespectDepth) {
  VisiblyAlphabet al = testing::small_visibly_alphabet();
  Rng rng(52);
  for (int iter = 0; iter < 100; ++iter) {
    WellMatchedWord w = sample_well_matched(al, 3, rng);
    int depth = 0, max_depth = 0;
    for (const auto& s : w.symbols) {
      auto k = al.classify(s).first;
      if (k == SymbolKind::kCall) max_depth = std::max(max_depth, ++depth);
      if (k == SymbolKind::kReturn) --depth;
      ASSERT_GE(depth, 0);
    }
    EXPECT_EQ(depth, 0);
    EXPECT_LE(max_depth, 3);
  }
}

TEST(WellMatched, LIndexMatchesGrammarOracle) {
  VisiblyAlphabet al = testing::small_visibly_alphabet();
  Rng rng(53);
  for (int iter = 0; iter < 150; ++iter) {
    WellMatchedWord w = sample_well_matched(al, 4, rng);
    if (w.symbols.size() > 24) continue;
    EXPECT_EQ(l_index(w), oracle_l_index(w.symbols, al)) << word_str(w.symbols);
  }
  EXPECT_EQ(l_index(parse_well_matched({}, al)), 0u);
  EXPECT_EQ(l_index(parse_well_matched({"i"}, al)), 0u);
  EXPECT_EQ(l_index(parse_well_matched({"i", "j"}, al)), 1u);
  EXPECT_EQ(l_index(parse_well_matched({"i", "j", "i"}, al)), 2u);
  EXPECT_EQ(l_index(parse_well_matched({"c", "r"}, al)), 1u);
}

TEST(Product, MultipliesWeights) {
  Rng rng(54);
  VisiblyAlphabet al = testing::small_visibly_alphabet();
  for (int iter = 0; iter < 40; ++iter) {
    WeightedVPA a = testing::random_vpa(rng, al, 2, rng.uniform(1, 3));
    WeightedVPA b = testing::random_vpa(rng, al, 1, rng.uniform(1, 3));
    WeightedVPA p = product(a, b);
    EXPECT_EQ(p.states(), a.states() * b.states());
    EXPECT_EQ(p.stack().size(), 2u);
    WellMatchedWord w = sample_well_matched(al, 3, rng);
    EXPECT_EQ(vpa_weight(p, w), vpa_weight(a, w) * vpa_weight(b, w));
  }
}

// Multiset of derivations for L_k: D_0 = {ε} ∪ internals, D_{i+1} = c D_i r ∪ D_i D_i.
std::vector<Word> derivations(const VisiblyAlphabet& al, std::size_t k) {
  std::vector<Word> d{Word{}};
  for (const auto& i : al.internals) d.push_back({i});
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Word> next;
    for (const auto& c : al.calls)
      for (const auto& r : al.returns)
        for (const auto& u : d) {
          Word w{c};
          w.insert(w.end(), u.begin(), u.end());
          w.push_back(r);
          next.push_back(std::move(w));
        }
    for (const auto& u : d)
      for (const auto& v : d) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        next.push_back(std::move(w));
      }
    d = std::move(next);
  }
  return d;
}

TEST(SumCircuit, EqualsSumOverDerivations) {
  Rng rng(55);
  VisiblyAlphabet al{{"c"}, {"r"}, {"i"}};
  for (int iter = 0; iter < 10; ++iter) {
    WeightedVPA v = testing::random_vpa(rng, al, rng.uniform(1, 2), rng.uniform(1, 3));
    for (std::size_t k = 0; k <= 2; ++k) {
      Rational expected;
      for (const auto& w : derivations(al, k)) expected += vpa_weight(v, w);
      ArithmeticCircuit c = sum_circuit(v, k);
      EXPECT_EQ(circuit_eval_exact(c), expected) << "k=" << k;
    }
  }
}

TEST(SumCircuit, ModularRecurrenceMatchesCircuit) {
  Rng rng(56);
  VisiblyAlphabet al = testing::small_visibly_alphabet();
  const std::uint64_t p = 1000000007ULL;
  Field64 f(p);
  for (int iter = 0; iter < 10; ++iter) {
    WeightedVPA v = testing::random_vpa(rng, al, 2, rng.uniform(1, 3));
    SumModel m = sum_model(sparse_vpa(v));
    for (std::size_t k = 0; k <= 4; ++k) {
      try {
        EXPECT_EQ(sum_value_field(m, k, f), circuit_eval_mod(sum_circuit(v, k), p));
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kBadPrime);
      }
    }
  }
}

TEST(SumCircuit, ProductModelMatchesDenseProduct) {
  Rng rng(57);
  VisiblyAlphabet al = testing::small_visibly_alphabet();
  const std::uint64_t p = 998244353ULL;
  Field64 f(p);
  for (int iter = 0; iter < 10; ++iter) {
    WeightedVPA a = testing::random_vpa(rng, al, 1, 2), b = testing::random_vpa(rng, al, 2, 2);
    SumModel sparse = sum_model(sparse_product(sparse_vpa(a), sparse_vpa(b)));
    SumModel dense = sum_model(sparse_vpa(product(a, b)));
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(sum_value_field(sparse, k, f), sum_value_field(dense, k, f));
  }
}

}  // namespace
}  // namespace probeq
