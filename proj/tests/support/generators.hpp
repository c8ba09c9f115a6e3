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

#include <string>
#include <vector>

#include "probeq/cost/cost_automaton.hpp"
#include "probeq/numerics/rng.hpp"
#include "probeq/vpa/circuit.hpp"
#include "probeq/vpa/vpa.hpp"
#include "probeq/weighted/automaton.hpp"

namespace probeq::testing {

inline Rational small_rational(Rng& rng, long max_num = 3, long max_den = 3) {
  const long num = static_cast<long>(rng.uniform(0, 2 * max_num)) - max_num;
  const long den = static_cast<long>(rng.uniform(1, max_den));
  return Rational(num, den);
}

// Entry is zero with probability (1 - density).
inline QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, unsigned density_pct = 50) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.uniform(0, 99) < density_pct) m(i, j) = small_rational(rng);
  return m;
}

inline std::vector<Symbol> letters(std::size_t k) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline WeightedAutomaton random_weighted(Rng& rng, std::size_t n, std::size_t k,
                                         unsigned density_pct = 40) {
  std::vector<QMatrix> mats;
  for (std::size_t s = 0; s < k; ++s) mats.push_back(random_matrix(rng, n, n, density_pct));
  return WeightedAutomaton(letters(k), mats, random_matrix(rng, 1, n, 60),
                           random_matrix(rng, n, 1, 60));
}

// Zero on every word: final weights are orthogonal to the whole reachable space
// because the initial vector is zero outside a block that never reaches eta.
inline WeightedAutomaton zero_weighted(Rng& rng, std::size_t n, std::size_t k) {
  WeightedAutomaton a = random_weighted(rng, n, k);
  std::vector<QMatrix> mats = a.transitions();
  const std::size_t half = n / 2;
  for (auto& m : mats)
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = half; j < n; ++j) m(i, j) = Rational();
  QMatrix alpha(1, n), eta(n, 1);
  for (std::size_t i = 0; i < half; ++i) alpha(0, i) = small_rational(rng);
  for (std::size_t i = half; i < n; ++i) eta(i, 0) = small_rational(rng);
  return WeightedAutomaton(a.alphabet(), mats, alpha, eta);
}

// Words of length exactly `len` over `alphabet`, in lexicographic order.
inline std::vector<Word> words_of_length(const std::vector<Symbol>& alphabet, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (const auto& s : alphabet) {
        Word x = w;
        x.push_back(s);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

// Cost automaton whose ε-matrix has l1 row sums at most 1/2, so the series converges.
inline CostAutomaton random_cost(Rng& rng, std::size_t n, std::size_t s, std::size_t k,
                                 int max_cost = 1) {
  auto edges_for = [&](bool eps) {
    std::vector<CostEdge> out;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t count = rng.uniform(0, 2);
      for (std::size_t e = 0; e < count; ++e) {
        CostEdge edge;
        edge.from = i;
        edge.to = rng.uniform(0, n - 1);
        for (std::size_t c = 0; c < s; ++c) {
          edge.cost.push_back(static_cast<int>(rng.uniform(0, 2 * max_cost)) - max_cost);
        }
        const long num = static_cast<long>(rng.uniform(1, 2));
        edge.weight = eps ? Rational(num, 8) : small_rational(rng, 2, 2);
        if (!eps && rng.bernoulli(1, 4)) edge.weight = -edge.weight;
        out.push_back(std::move(edge));
      }
    }
    return out;
  };
  std::map<Symbol, std::vector<CostEdge>> tr;
  const auto sigma = letters(k);
  for (const auto& a : sigma) tr[a] = edges_for(false);
  return CostAutomaton::from_edges(n, s, sigma, tr, edges_for(true), random_matrix(rng, 1, n, 70),
                                   random_matrix(rng, n, 1, 70));
}

inline VisiblyAlphabet small_visibly_alphabet() { return {{"c", "d"}, {"r", "s"}, {"i", "j"}}; }

inline WeightedVPA random_vpa(Rng& rng, const VisiblyAlphabet& al, std::size_t stack,
                              std::size_t n, unsigned density_pct = 50) {
  std::vector<Symbol> gammas;
  for (std::size_t g = 0; g < stack; ++g) gammas.push_back("g" + std::to_string(g));
  WeightedVPA v = WeightedVPA::zero(al, gammas, n);
  for (std::size_t a = 0; a < al.calls.size(); ++a)
    for (std::size_t g = 0; g < stack; ++g) v.call(a, g) = random_matrix(rng, n, n, density_pct);
  for (std::size_t b = 0; b < al.returns.size(); ++b)
    for (std::size_t g = 0; g < stack; ++g) v.ret(b, g) = random_matrix(rng, n, n, density_pct);
  for (std::size_t i = 0; i < al.internals.size(); ++i) {
    v.internal(i) = random_matrix(rng, n, n, density_pct);
  }
  v.initial() = random_matrix(rng, 1, n, 70);
  v.final_weights() = random_matrix(rng, n, 1, 70);
  return v;
}

// Random {+,*} circuit over constants 0 and 1; `internal` binary gates.
inline ArithmeticCircuit random_plus_times(Rng& rng, std::size_t internal) {
  ArithmeticCircuit c;
  c.constant(1);
  c.constant(rng.bernoulli(1, 3) ? 0 : 1);
  for (std::size_t i = 0; i < internal; ++i) {
    const std::size_t l = rng.uniform(0, c.size() - 1), r = rng.uniform(0, c.size() - 1);
    if (rng.bernoulli(1, 2)) c.add(l, r);
    else c.mul(l, r);
  }
  return c;
}

}  // namespace probeq::testing
