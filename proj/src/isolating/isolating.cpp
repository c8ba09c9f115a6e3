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

#include "probeq/isolating/isolating.hpp"

#include <map>

#include "probeq/error.hpp"

namespace probeq {
namespace {

// Polynomial with row-vector coefficients: degree -> α-side vector.
using VecPoly = std::map<std::uint64_t, QMatrix>;

void accumulate(VecPoly& p, std::uint64_t degree, QMatrix v) {
  if (v.is_zero()) return;
  auto [it, inserted] = p.try_emplace(degree, v);
  if (!inserted) it->second += v;
}

void check_shape(const WeightedAutomaton& a, const WeightAssignment& wa) {
  if (wa.positions() != a.states() || wa.symbols() != a.alphabet().size()) {
    throw Error(ErrorCode::kDimension, "weight assignment does not match the automaton");
  }
}

}  // namespace

WeightAssignment::WeightAssignment(std::size_t positions, std::size_t symbols,
                                   std::vector<std::uint64_t> weights)
    : positions_(positions), symbols_(symbols), weights_(std::move(weights)) {
  if (weights_.size() != positions * symbols) {
    throw Error(ErrorCode::kDimension, "weight table has the wrong size");
  }
  for (auto w : weights_) {
    if (w < 1 || w > range()) throw Error(ErrorCode::kInvalidArgument, "weight out of range");
  }
}

std::uint64_t WeightAssignment::word_weight(const std::vector<std::size_t>& u) const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) total += at(i + 1, u[i]);
  return total;
}

WeightAssignment sample_weights(const WeightedAutomaton& a, Rng& rng) {
  const std::size_t n = a.states(), k = a.alphabet().size();
  std::vector<std::uint64_t> w(n * k);
  const std::uint64_t hi = 2 * n * k;
  for (auto& x : w) x = rng.uniform(1, hi);
  return WeightAssignment(n, k, std::move(w));
}

UniPoly iso_polynomial(const WeightedAutomaton& a, const WeightAssignment& wa) {
  check_shape(a, wa);
  const QMatrix& eta = a.final_weights();
  UniPoly p;
  VecPoly layer;
  accumulate(layer, 0, a.initial());
  for (std::size_t i = 0;; ++i) {
    for (const auto& [d, v] : layer) p.add_term(d, dot(v, eta));
    if (i == a.states() || layer.empty()) break;
    VecPoly next;
    for (const auto& [d, v] : layer) {
      for (std::size_t s = 0; s < wa.symbols(); ++s) {
        accumulate(next, d + wa.at(i + 1, s), v * a.transition(s));
      }
    }
    layer = std::move(next);
  }
  return p;
}

Extraction extract_counterexample(const WeightedAutomaton& a, const WeightAssignment& wa,
                                  const UniPoly& p) {
  check_shape(a, wa);
  auto m = p.min_degree();
  if (!m) return {};
  const Rational base = p.coefficient(*m);

  std::vector<std::size_t> letters;
  bool ended = false;
  WeightAssignment bumped = wa;
  for (std::size_t i = 1; i <= wa.positions(); ++i) {
    std::vector<std::size_t> selected;
    for (std::size_t s = 0; s < wa.symbols(); ++s) {
      const std::uint64_t original = wa.at(i, s);
      bumped.set(i, s, original + 1);
      // The bumped table may leave [1, 2|Σ|n]; only the polynomial is needed.
      if (iso_polynomial(a, bumped).coefficient(*m) != base) selected.push_back(s);
      bumped.set(i, s, original);
    }
    if (selected.size() > 1) return {};
    if (selected.empty()) {
      ended = true;
      continue;
    }
    if (ended) return {};  // a letter after a gap: isolation failed
    letters.push_back(selected.front());
  }

  Word u;
  for (auto s : letters) u.push_back(a.alphabet()[s]);
  const Rational w = weight(a, u);
  if (w.is_zero() || wa.word_weight(letters) != *m || base != w) return {};
  return {u};
}

IsoResult iso_trial(const WeightedAutomaton& a, std::uint64_t seed, std::uint64_t index) {
  Rng rng = Rng::derive(seed, streams::kIsolating, index);
  IsoResult r;
  r.assignment = sample_weights(a, rng);
  r.polynomial = iso_polynomial(a, r.assignment);
  r.min_degree = r.polynomial.min_degree();
  r.seed = seed;
  return r;
}

RandomizedZeroness randomized_zeroness(const WeightedAutomaton& a, std::size_t trials,
                                       std::uint64_t seed) {
  RandomizedZeroness out;
  out.seed = seed;
  out.trials = trials;
  const std::size_t cap = 64 * (trials == 0 ? 1 : trials);
  std::uint64_t index = 0;
  bool seen_nonzero = false;
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials_run;
    IsoResult r = iso_trial(a, seed, index++);
    if (r.polynomial.is_zero()) continue;
    seen_nonzero = true;
    // P ≠ 0 already proves non-zeroness; resample until a word is isolated.
    for (;;) {
      Extraction e = extract_counterexample(a, r.assignment, r.polynomial);
      if (e.word) {
        out.probably_zero = false;
        out.witness = std::move(e.word);
        return out;
      }
      if (out.resamples >= cap) break;
      ++out.resamples;
      do {
        r = iso_trial(a, seed, index++);
      } while (r.polynomial.is_zero() && out.resamples++ < cap);
      if (r.polynomial.is_zero()) break;
    }
    break;
  }
  out.probably_zero = !seen_nonzero;
  return out;
}

RandomizedEquivalence randomized_equivalence(const WeightedAutomaton& b,
                                             const WeightedAutomaton& c, std::size_t trials,
                                             std::uint64_t seed) {
  RandomizedZeroness z = randomized_zeroness(difference(b, c), trials, seed);
  RandomizedEquivalence out;
  out.seed = seed;
  out.trials = trials;
  out.probably_equivalent = z.probably_zero;
  if (z.witness) {
    if (weight(b, *z.witness) == weight(c, *z.witness)) {
      throw Error(ErrorCode::kInvalidArgument, "internal: witness did not verify");
    }
    out.witness = z.witness;
  }
  return out;
}

}  // namespace probeq
