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

#include "probeq/vpa/sum_circuit.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "probeq/error.hpp"

namespace probeq {
namespace {

using GateRef = std::optional<std::size_t>;  // nullopt: structurally zero

class Builder {
 public:
  explicit Builder(ArithmeticCircuit& c) : c_(c) {}

  std::size_t constant(const Rational& v) {
    auto it = consts_.find(v.str());
    if (it != consts_.end()) return it->second;
    const std::size_t id = c_.constant(v);
    consts_[v.str()] = id;
    return id;
  }
  GateRef scale(const Rational& s, GateRef g) {
    if (!g || s.is_zero()) return std::nullopt;
    if (s.is_one()) return g;
    return c_.mul(constant(s), *g);
  }
  GateRef times(GateRef a, GateRef b) {
    if (!a || !b) return std::nullopt;
    return c_.mul(*a, *b);
  }
  GateRef plus(GateRef a, GateRef b) {
    if (!a) return b;
    if (!b) return a;
    return c_.add(*a, *b);
  }

 private:
  ArithmeticCircuit& c_;
  std::map<std::string, std::size_t> consts_;
};

std::vector<SparseEntry> entries_of(const QMatrix& m) {
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), m(i, j)});
      }
  return out;
}

std::vector<SparseEntry> kron(const std::vector<SparseEntry>& a, const std::vector<SparseEntry>& b,
                              std::size_t nb) {
  std::vector<SparseEntry> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      out.push_back({static_cast<std::uint32_t>(x.row * nb + y.row),
                     static_cast<std::uint32_t>(x.col * nb + y.col), x.w * y.w});
    }
  return out;
}

long double log2_of(const Rational& r) {
  if (r.is_zero()) return 0;
  const long double nb = static_cast<long double>(mpz_sizeinbase(r.numerator().get_mpz_t(), 2));
  const long double db = static_cast<long double>(mpz_sizeinbase(r.denominator().get_mpz_t(), 2));
  return nb - db + 1;
}

}  // namespace

std::size_t append_circuit(ArithmeticCircuit& dst, const ArithmeticCircuit& src) {
  const std::size_t offset = dst.size();
  for (Gate g : src.gates()) {
    if (g.kind != GateKind::kConst) {
      g.left += offset;
      g.right += offset;
    }
    dst.push(g);
  }
  return src.output() + offset;
}

ArithmeticCircuit sum_circuit(const SumModel& m, std::size_t k) {
  using Row = std::map<std::uint32_t, std::size_t>;  // column -> gate
  const std::size_t n = m.n;
  ArithmeticCircuit c;
  Builder b(c);
  auto bump = [&](Row& row, std::uint32_t col, GateRef g) {
    if (!g) return;
    auto [it, inserted] = row.try_emplace(col, *g);
    if (!inserted) it->second = *b.plus(it->second, g);
  };

  std::vector<Row> s(n);
  for (const auto& e : m.s0) s[e.row][e.col] = b.constant(e.w);

  for (std::size_t level = 0; level < k; ++level) {
    std::vector<Row> next(n);
    for (const auto& g : m.groups) {
      std::vector<std::vector<std::pair<std::uint32_t, Rational>>> ret(n);
      for (const auto& e : g.ret) ret[e.row].emplace_back(e.col, e.w);
      // T = S·R̂ on the rows that Ĉ reaches, then Ĉ·T.
      std::map<std::uint32_t, Row> t;
      for (const auto& e : g.call) {
        if (t.count(e.col)) continue;
        Row& row = t[e.col];
        for (const auto& [z, gate] : s[e.col])
          for (const auto& [y, w] : ret[z]) bump(row, y, b.scale(w, gate));
      }
      for (const auto& e : g.call)
        for (const auto& [y, gate] : t[e.col]) bump(next[e.row], y, b.scale(e.w, gate));
    }
    for (std::size_t p = 0; p < n; ++p)
      for (const auto& [x, a] : s[p])
        for (const auto& [y, gate] : s[x]) bump(next[p], y, b.times(a, gate));
    s = std::move(next);
  }

  std::vector<Rational> eta(n);
  for (const auto& [i, w] : m.eta) eta[i] = w;
  GateRef out;
  for (const auto& [p, a] : m.alpha)
    for (const auto& [q, gate] : s[p]) out = b.plus(out, b.scale(a * eta[q], gate));
  c.set_output(out ? *out : b.constant(Rational(0)));
  return c;
}

ArithmeticCircuit sum_circuit(const WeightedVPA& v, std::size_t k) {
  return sum_circuit(sum_model(sparse_vpa(v)), k);
}

SparseVpa sparse_vpa(const WeightedVPA& v) {
  SparseVpa s;
  s.n = v.states();
  s.stack = v.stack().size();
  const auto& al = v.alphabet();
  for (std::size_t a = 0; a < al.calls.size(); ++a)
    for (std::size_t g = 0; g < s.stack; ++g) s.calls.push_back(entries_of(v.call(a, g)));
  for (std::size_t r = 0; r < al.returns.size(); ++r)
    for (std::size_t g = 0; g < s.stack; ++g) s.returns.push_back(entries_of(v.ret(r, g)));
  for (std::size_t i = 0; i < al.internals.size(); ++i) s.internals.push_back(entries_of(v.internal(i)));
  for (std::size_t i = 0; i < s.n; ++i) {
    if (!v.initial()(0, i).is_zero()) s.alpha.emplace_back(i, v.initial()(0, i));
    if (!v.final_weights()(i, 0).is_zero()) s.eta.emplace_back(i, v.final_weights()(i, 0));
  }
  return s;
}

SparseVpa sparse_product(const SparseVpa& a, const SparseVpa& b) {
  if (a.calls.size() / std::max<std::size_t>(a.stack, 1) != b.calls.size() / std::max<std::size_t>(b.stack, 1) ||
      a.internals.size() != b.internals.size()) {
    throw Error(ErrorCode::kAlphabet, "product needs identical visibly alphabets");
  }
  SparseVpa p;
  p.n = a.n * b.n;
  p.stack = a.stack * b.stack;
  auto table = [&](const std::vector<std::vector<SparseEntry>>& ta,
                   const std::vector<std::vector<SparseEntry>>& tb) {
    std::vector<std::vector<SparseEntry>> out;
    const std::size_t syms = a.stack ? ta.size() / a.stack : 0;
    for (std::size_t s = 0; s < syms; ++s)
      for (std::size_t g = 0; g < a.stack; ++g)
        for (std::size_t h = 0; h < b.stack; ++h) {
          out.push_back(kron(ta[s * a.stack + g], tb[s * b.stack + h], b.n));
        }
    return out;
  };
  p.calls = table(a.calls, b.calls);
  p.returns = table(a.returns, b.returns);
  for (std::size_t i = 0; i < a.internals.size(); ++i) {
    p.internals.push_back(kron(a.internals[i], b.internals[i], b.n));
  }
  for (const auto& [i, x] : a.alpha)
    for (const auto& [j, y] : b.alpha) p.alpha.emplace_back(i * b.n + j, x * y);
  for (const auto& [i, x] : a.eta)
    for (const auto& [j, y] : b.eta) p.eta.emplace_back(i * b.n + j, x * y);
  return p;
}

SumModel sum_model(const SparseVpa& v) {
  const std::size_t n = v.n, gs = v.stack;
  // Adjacency ignoring weights: internal steps, calls (x -> q pushing g) and
  // returns (z -> y popping g).
  std::vector<std::vector<std::uint32_t>> internal(n);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> call(n);  // (g, q)
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> ret;  // (z,g)->y
  for (const auto& list : v.internals)
    for (const auto& e : list) internal[e.row].push_back(e.col);
  for (std::size_t idx = 0; idx < v.calls.size(); ++idx)
    for (const auto& e : v.calls[idx]) call[e.row].emplace_back(idx % gs, e.col);
  for (std::size_t idx = 0; idx < v.returns.size(); ++idx)
    for (const auto& e : v.returns[idx]) ret[{e.row, static_cast<std::uint32_t>(idx % gs)}].push_back(e.col);

  // summary[p] = states reachable from p by well-matched words, for every
  // p that is initial or the target of a call from a summarised state.
  std::map<std::uint32_t, std::set<std::uint32_t>> summary;
  for (const auto& [i, w] : v.alpha) summary[i].insert(i);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::uint32_t> sources;
    for (const auto& [p, set] : summary) sources.push_back(p);
    for (auto p : sources) {
      std::vector<std::uint32_t> work(summary[p].begin(), summary[p].end());
      while (!work.empty()) {
        const std::uint32_t x = work.back();
        work.pop_back();
        auto add = [&](std::uint32_t y) {
          if (summary[p].insert(y).second) {
            work.push_back(y);
            changed = true;
          }
        };
        for (auto y : internal[x]) add(y);
        for (const auto& [g, q] : call[x]) {
          if (summary.find(q) == summary.end()) {
            summary[q].insert(q);
            changed = true;
          }
          const std::set<std::uint32_t> inner = summary[q];
          for (auto z : inner) {
            auto it = ret.find({z, g});
            if (it == ret.end()) continue;
            for (auto y : it->second) add(y);
          }
        }
      }
    }
  }

  std::set<std::uint32_t> keep;
  for (const auto& [p, set] : summary) keep.insert(set.begin(), set.end());
  std::vector<std::int64_t> index(n, -1);
  SumModel m;
  for (auto s : keep) index[s] = static_cast<std::int64_t>(m.n++);
  auto inside = [&](const SparseEntry& e) { return index[e.row] >= 0 && index[e.col] >= 0; };
  auto relabel = [&](const SparseEntry& e) {
    return SparseEntry{static_cast<std::uint32_t>(index[e.row]),
                       static_cast<std::uint32_t>(index[e.col]), e.w};
  };
  auto merge = [&](std::vector<SparseEntry> list) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> acc;
    for (const auto& e : list) acc[{e.row, e.col}] += e.w;
    std::vector<SparseEntry> out;
    for (const auto& [rc, w] : acc)
      if (!w.is_zero()) out.push_back({rc.first, rc.second, w});
    return out;
  };

  std::vector<SparseEntry> s0;
  for (std::uint32_t i = 0; i < m.n; ++i) s0.push_back({i, i, Rational(1)});
  for (const auto& list : v.internals)
    for (const auto& e : list)
      if (inside(e)) s0.push_back(relabel(e));
  m.s0 = merge(std::move(s0));

  const std::size_t calls = gs ? v.calls.size() / gs : 0, rets = gs ? v.returns.size() / gs : 0;
  for (std::size_t g = 0; g < gs; ++g) {
    std::vector<SparseEntry> c, r;
    for (std::size_t a = 0; a < calls; ++a)
      for (const auto& e : v.calls[a * gs + g])
        if (inside(e)) c.push_back(relabel(e));
    for (std::size_t b = 0; b < rets; ++b)
      for (const auto& e : v.returns[b * gs + g])
        if (inside(e)) r.push_back(relabel(e));
    c = merge(std::move(c));
    r = merge(std::move(r));
    if (!c.empty() && !r.empty()) m.groups.push_back({std::move(c), std::move(r)});
  }
  for (const auto& [i, w] : v.alpha) m.alpha.emplace_back(index[i], w);
  for (const auto& [i, w] : v.eta)
    if (index[i] >= 0) m.eta.emplace_back(index[i], w);
  return m;
}

SumBound sum_bound(const SumModel& m) {
  SumBound b;
  auto absorb = [&](const Rational& r) {
    mpz_lcm(b.denominator_lcm.get_mpz_t(), b.denominator_lcm.get_mpz_t(),
            r.denominator().get_mpz_t());
  };
  long double l0 = 0;
  for (const auto& e : m.s0) {
    absorb(e.w);
    l0 = std::max(l0, log2_of(e.w));
  }
  // K bounds Σ_γ (row sum of |Ĉ_γ|)·(column sum of |R̂_γ|).
  long double k_sum = 0;
  for (const auto& g : m.groups) {
    std::map<std::uint32_t, Rational> rows, cols;
    for (const auto& e : g.call) {
      absorb(e.w);
      rows[e.row] += e.w.abs();
    }
    for (const auto& e : g.ret) {
      absorb(e.w);
      cols[e.col] += e.w.abs();
    }
    long double rmax = 0, cmax = 0;
    for (const auto& [i, x] : rows) rmax = std::max<long double>(rmax, x.to_double());
    for (const auto& [i, x] : cols) cmax = std::max<long double>(cmax, x.to_double());
    k_sum += rmax * cmax;
  }
  long double av = 0, ev = 0;
  for (const auto& [i, w] : m.alpha) {
    absorb(w);
    av += std::abs(static_cast<long double>(w.to_double()));
  }
  for (const auto& [i, w] : m.eta) {
    absorb(w);
    ev += std::abs(static_cast<long double>(w.to_double()));
  }
  const long double c =
      std::max<long double>(k_sum > 0 ? std::log2(k_sum) : 0, std::log2(std::max<std::size_t>(m.n, 1))) + 1;
  const long double extra = std::max<long double>(0, std::log2(std::max<long double>(av * ev, 1)) + 1);
  const long double log_d = b.denominator_lcm == 1
                                ? 0.0L
                                : static_cast<long double>(mpz_sizeinbase(b.denominator_lcm.get_mpz_t(), 2));
  // Magnitude: L_{i+1} ≤ 2 L_i + c, so L_k ≤ 2^k (L_0 + c). Denominator
  // exponent: e_{i+1} ≤ max(e_i + 2, 2 e_i) ≤ 3·2^k, plus 2 for α and η.
  b.base = std::max<long double>(l0, 0) + c + extra + 5 * log_d + 4;
  return b;
}

}  // namespace probeq
