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

// Template definitions for sum_circuit.hpp.

#include <vector>

namespace probeq {
namespace detail {

template <class F>
std::vector<std::vector<std::pair<std::uint32_t, typename F::Elem>>> reduce_entries(
    const std::vector<SparseEntry>& entries, std::size_t n, const F& field) {
  std::vector<std::vector<std::pair<std::uint32_t, typename F::Elem>>> rows(n);
  for (const auto& e : entries) {
    auto v = field.from_rational(e.w);
    if (!field.is_zero(v)) rows[e.row].emplace_back(e.col, std::move(v));
  }
  return rows;
}

}  // namespace detail

template <class F>
typename F::Elem sum_value_field(const SumModel& m, std::size_t k, const F& field) {
  using Elem = typename F::Elem;
  using Rows = std::vector<std::vector<std::pair<std::uint32_t, Elem>>>;
  const std::size_t n = m.n;
  Rows s = detail::reduce_entries(m.s0, n, field);
  struct Group {
    std::vector<std::pair<std::uint32_t, std::pair<std::uint32_t, Elem>>> call;  // (x, (q, c))
    Rows ret;                                                                   // by row
  };
  std::vector<Group> groups;
  for (const auto& g : m.groups) {
    Group out;
    for (const auto& e : g.call) {
      auto v = field.from_rational(e.w);
      if (!field.is_zero(v)) out.call.push_back({e.row, {e.col, std::move(v)}});
    }
    out.ret = detail::reduce_entries(g.ret, n, field);
    groups.push_back(std::move(out));
  }
  std::vector<Elem> alpha, eta(n, field.zero());
  std::vector<std::uint32_t> alpha_idx;
  for (const auto& [i, w] : m.alpha) {
    alpha_idx.push_back(i);
    alpha.push_back(field.from_rational(w));
  }
  for (const auto& [i, w] : m.eta) eta[i] = field.from_rational(w);

  std::vector<Elem> acc(n, field.zero());
  std::vector<char> touched(n, 0);
  std::vector<std::uint32_t> list;
  auto flush = [&](std::vector<std::pair<std::uint32_t, Elem>>& row) {
    row.clear();
    for (auto c : list) {
      if (!field.is_zero(acc[c])) row.emplace_back(c, acc[c]);
      acc[c] = field.zero();
      touched[c] = 0;
    }
    list.clear();
  };
  auto bump = [&](std::uint32_t c, const Elem& v) {
    if (!touched[c]) {
      touched[c] = 1;
      list.push_back(c);
    }
    acc[c] = field.add(acc[c], v);
  };

  for (std::size_t level = 0; level < k; ++level) {
    Rows next(n);
    // Call/return part, accumulated per row of the result.
    std::vector<std::vector<std::pair<std::uint32_t, Elem>>> partial(n);
    for (const auto& g : groups) {
      for (const auto& [x, qc] : g.call) {
        const auto& [q, c] = qc;
        for (const auto& [z, sv] : s[q]) {
          const Elem cs = field.mul(c, sv);
          for (const auto& [y, r] : g.ret[z]) partial[x].emplace_back(y, field.mul(cs, r));
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (const auto& [y, v] : partial[p]) bump(y, v);
      for (const auto& [x, a] : s[p]) {
        for (const auto& [y, b] : s[x]) bump(y, field.mul(a, b));
      }
      flush(next[p]);
    }
    s = std::move(next);
  }

  Elem total = field.zero();
  for (std::size_t t = 0; t < alpha_idx.size(); ++t) {
    for (const auto& [q, v] : s[alpha_idx[t]]) {
      if (!field.is_zero(eta[q])) total = field.add(total, field.mul(alpha[t], field.mul(v, eta[q])));
    }
  }
  return total;
}

}  // namespace probeq
