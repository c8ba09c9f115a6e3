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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "probeq/cost/cost_automaton.hpp"

namespace probeq {

/// Inclusive per-coordinate bounds of a box in Z^s.
using Box = std::vector<std::pair<int, int>>;

struct SeriesWindow {
  Box box;
  std::map<Exponent, Rational> coefficients;  // non-zero coefficients inside the box
  /// Certified bound on the (weighted) l1 distance between A(w) and the
  /// truncated series.
  Rational tail_bound;
  /// (Weighted) l1 mass of the truncated series outside the box.
  Rational outside_mass;
  std::size_t truncation = 0;  // number of ε-powers summed, K
};

/// Approximates the series A(w) on `box` by summing M(ε)^k for k ≤ K, with K
/// the least value whose certified truncation error is below `tol`. When
/// `point` is given, norms weight each coefficient at v by |r^v|, which makes
/// the bounds valid for evaluation at r (requires the weighted ε-norm < 1).
SeriesWindow distribution(const CostAutomaton& a, const Word& w, const Box& box,
                          const Rational& tol,
                          const std::optional<std::vector<Rational>>& point = std::nullopt,
                          std::size_t max_truncation = 100'000);

/// Σ_{v in window} c_v r^v.
Rational evaluate_window(const SeriesWindow& window, const std::vector<Rational>& point);

}  // namespace probeq
