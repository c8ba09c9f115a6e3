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

#include "probeq/cost/cost_zeroness.hpp"

#include "probeq/error.hpp"
#include "probeq/numerics/rng.hpp"
#include "probeq/weighted/zeroness.hpp"

namespace probeq {

SubstitutionPlan substitution_plan(const CostAutomaton& a) {
  SubstitutionPlan p;
  const std::uint64_t n = a.states(), s = a.counters();
  p.degree_bound = 2 * n * (s + 1) * n;
  p.range_max = 4 * p.degree_bound;
  if (p.range_max == 0) p.range_max = 1;
  return p;
}

namespace {

// Runs the counter-free test at one point; returns false if it was singular.
bool check_point(const CostAutomaton& a, const std::vector<Rational>& r, CostZeroness& out) {
  ++out.points_checked;
  auto b = try_substitute(a, r);
  if (!b) {
    ++out.singular_points;
    return false;
  }
  ZeronessResult z = tzeng_zeroness(*b);
  if (!z.zero) {
    out.zero = false;
    out.witness = z.witness;
    out.point = r;
  }
  return true;
}

}  // namespace

CostZeroness randomized_zeroness(const CostAutomaton& a, std::size_t trials, std::uint64_t seed) {
  require_valid(a);
  const SubstitutionPlan plan = substitution_plan(a);
  CostZeroness out;
  out.seed = seed;
  out.trials = trials;
  for (std::size_t t = 0; t < trials && out.zero; ++t) {
    Rng rng = Rng::derive(seed, streams::kCostPoint, t);
    std::vector<Rational> r;
    for (std::size_t i = 0; i < a.counters(); ++i) {
      r.emplace_back(static_cast<long>(rng.uniform(1, plan.range_max)));
    }
    check_point(a, r, out);
  }
  return out;
}

CostZeroness deterministic_zeroness(const CostAutomaton& a, std::uint64_t budget) {
  require_valid(a);
  const SubstitutionPlan plan = substitution_plan(a);
  const std::size_t s = a.counters();
  std::uint64_t grid = 1;
  for (std::size_t i = 0; i < s; ++i) {
    if (grid > budget / plan.range_max) {
      throw Error(ErrorCode::kBudget, "evaluation grid exceeds budget");
    }
    grid *= plan.range_max;
  }
  if (grid > budget) throw Error(ErrorCode::kBudget, "evaluation grid exceeds budget");

  CostZeroness out;
  std::vector<std::uint64_t> idx(s, 1);
  for (;;) {
    std::vector<Rational> r;
    for (auto x : idx) r.emplace_back(static_cast<long>(x));
    check_point(a, r, out);
    if (!out.zero) return out;
    std::size_t i = 0;
    while (i < s && idx[i] == plan.range_max) idx[i++] = 1;
    if (i == s) break;
    ++idx[i];
  }
  return out;
}

CostEquivalence cost_equivalence(const CostAutomaton& b, const CostAutomaton& c,
                                 const CostEquivalenceOptions& options) {
  require_valid(b);
  require_valid(c);
  const CostAutomaton d = difference(b, c);
  CostEquivalence out;
  out.detail = options.mode == Mode::kRandomized
                   ? randomized_zeroness(d, options.trials, options.seed)
                   : deterministic_zeroness(d, options.budget);
  out.equivalent = out.detail.zero;
  if (!out.equivalent) {
    out.witness = out.detail.witness;
    out.point = out.detail.point;
    if (weight(substitute(b, *out.point), *out.witness) ==
        weight(substitute(c, *out.point), *out.witness)) {
      throw Error(ErrorCode::kInvalidArgument, "internal: cost witness did not verify");
    }
  }
  return out;
}

}  // namespace probeq
