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

#include "probeq/vpa/circuit_transform.hpp"

#include <algorithm>
#include <map>

#include "probeq/error.hpp"

namespace probeq {
namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

class Layerer {
 public:
  Layerer(const ArithmeticCircuit& src, std::vector<std::size_t> level, std::size_t d)
      : src_(src), level_(std::move(level)), d_(d) {}

  LayeredCircuit run() {
    const Gate& out = src_.gate(src_.output());
    std::size_t root;
    if (out.kind == GateKind::kConst) {
      root = ladder(out.value.is_one() ? 1 : 0, 0);
    } else if (out.kind == GateKind::kMul) {
      root = emit_add(node(src_.output(), 1), ladder(0, 1), 0);
    } else {
      root = node(src_.output(), 0);
    }
    dst_.circuit.set_output(root);
    dst_.d = d_;
    return std::move(dst_);
  }

 private:
  std::size_t emit(GateKind k, std::size_t l, std::size_t r, std::size_t t) {
    Gate g;
    g.kind = k;
    g.left = l;
    g.right = r;
    dst_.circuit.push(g);
    dst_.level.push_back(t);
    return dst_.circuit.size() - 1;
  }
  std::size_t emit_add(std::size_t l, std::size_t r, std::size_t t) {
    return emit(GateKind::kAdd, l, r, t);
  }

  // Constant 0/1 realised at level t by an identity ladder down to level d.
  std::size_t ladder(int v, std::size_t t) {
    auto key = std::make_pair(v, t);
    if (auto it = ladders_.find(key); it != ladders_.end()) return it->second;
    std::size_t id;
    if (t == d_) {
      id = dst_.circuit.constant(Rational(v));
      dst_.level.push_back(t);
    } else if (t % 2 == 1) {
      const std::size_t below = ladder(v, t + 1);
      id = emit(GateKind::kMul, below, below, t);  // 1 = 1∗1, 0 = 0∗0
    } else {
      id = emit_add(ladder(v, t + 1), ladder(0, t + 1), t);  // v = v + 0
    }
    ladders_[key] = id;
    return id;
  }

  // Value of source gate g realised at level t ≤ level(g).
  std::size_t node(std::size_t g, std::size_t t) {
    const Gate& gate = src_.gate(g);
    if (gate.kind == GateKind::kConst) return ladder(gate.value.is_one() ? 1 : 0, t);
    auto key = std::make_pair(g, t);
    if (auto it = nodes_.find(key); it != nodes_.end()) return it->second;
    std::size_t id;
    if (t == level_[g]) {
      const std::size_t l = node(gate.left, t + 1), r = node(gate.right, t + 1);
      id = emit(gate.kind, l, r, t);
    } else if (t % 2 == 1) {
      id = emit(GateKind::kMul, node(g, t + 1), ladder(1, t + 1), t);  // g∗1
    } else {
      id = emit_add(node(g, t + 1), ladder(0, t + 1), t);  // g+0
    }
    nodes_[key] = id;
    return id;
  }

  const ArithmeticCircuit& src_;
  std::vector<std::size_t> level_;
  std::size_t d_;
  LayeredCircuit dst_;
  std::map<std::pair<int, std::size_t>, std::size_t> ladders_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> nodes_;
};

}  // namespace

LayeredCircuit normalize_circuit(const ArithmeticCircuit& c, std::size_t min_depth) {
  c.validate();
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::kSub) {
      throw Error(ErrorCode::kNeedsSubElimination, "circuit contains a subtraction gate");
    }
    if (g.kind == GateKind::kConst && !g.value.is_zero() && !g.value.is_one()) {
      throw Error(ErrorCode::kInvalidArgument, "constant " + g.value.str() + " is not 0 or 1");
    }
  }
  // Levels top-down: ids decrease along every edge, so parents are final
  // before their children are visited.
  std::vector<std::size_t> level(c.size(), kUnset);
  const std::size_t out = c.output();
  const Gate& og = c.gate(out);
  if (og.kind == GateKind::kAdd) level[out] = 0;
  if (og.kind == GateKind::kMul) level[out] = 1;
  std::size_t deepest = 0;
  bool any_internal = false;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (level[i] == kUnset || c.gate(i).kind == GateKind::kConst) continue;
    any_internal = true;
    deepest = std::max(deepest, level[i]);
    for (std::size_t ch : {c.gate(i).left, c.gate(i).right}) {
      const Gate& cg = c.gate(ch);
      if (cg.kind == GateKind::kConst) continue;
      std::size_t want = level[i] + 1;
      const std::size_t parity = cg.kind == GateKind::kAdd ? 0 : 1;
      if (want % 2 != parity) ++want;
      if (level[ch] == kUnset || level[ch] < want) level[ch] = want;
    }
  }
  std::size_t d = any_internal ? deepest + 1 : 1;
  d = std::max(d, min_depth);
  if (d % 2 == 0) ++d;
  return Layerer(c, std::move(level), d).run();
}

void check_layered(const LayeredCircuit& lc) {
  const ArithmeticCircuit& c = lc.circuit;
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kNotNormalized, why); };
  try {
    c.validate();
  } catch (const Error& e) {
    fail(e.what());
  }
  if (lc.d % 2 == 0) fail("depth must be odd");
  // Recompute levels from the output and demand consistency.
  std::vector<std::size_t> level(c.size(), kUnset);
  level[c.output()] = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (level[i] == kUnset) continue;
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::kSub:
        fail("subtraction gate " + std::to_string(i));
        break;
      case GateKind::kConst:
        if (!g.value.is_zero() && !g.value.is_one()) fail("constant other than 0/1");
        if (level[i] != lc.d) fail("input gate " + std::to_string(i) + " is not at depth d");
        break;
      case GateKind::kAdd:
      case GateKind::kMul: {
        const std::size_t parity = g.kind == GateKind::kAdd ? 0 : 1;
        if (level[i] % 2 != parity) fail("gate " + std::to_string(i) + " has the wrong parity");
        if (level[i] >= lc.d) fail("internal gate " + std::to_string(i) + " at depth ≥ d");
        for (std::size_t ch : {g.left, g.right}) {
          if (level[ch] == kUnset) {
            level[ch] = level[i] + 1;
          } else if (level[ch] != level[i] + 1) {
            fail("gate " + std::to_string(ch) + " is used at two depths");
          }
        }
        break;
      }
    }
  }
}

std::pair<ArithmeticCircuit, ArithmeticCircuit> eliminate_sub(const ArithmeticCircuit& c) {
  c.validate();
  ArithmeticCircuit out;
  std::vector<std::pair<std::size_t, std::size_t>> pn(c.size());
  std::size_t zero = out.constant(Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::kConst:
        if (!g.value.is_integer()) {
          throw Error(ErrorCode::kInvalidArgument, "eliminate_sub needs integer constants");
        }
        if (g.value.sign() >= 0) {
          pn[i] = {out.constant(g.value), zero};
        } else {
          pn[i] = {zero, out.constant(-g.value)};
        }
        break;
      case GateKind::kAdd: {
        auto [pl, nl] = pn[g.left];
        auto [pr, nr] = pn[g.right];
        pn[i] = {out.add(pl, pr), out.add(nl, nr)};
        break;
      }
      case GateKind::kSub: {
        auto [pl, nl] = pn[g.left];
        auto [pr, nr] = pn[g.right];
        pn[i] = {out.add(pl, nr), out.add(nl, pr)};
        break;
      }
      case GateKind::kMul: {
        auto [pl, nl] = pn[g.left];
        auto [pr, nr] = pn[g.right];
        const std::size_t pos = out.add(out.mul(pl, pr), out.mul(nl, nr));
        const std::size_t neg = out.add(out.mul(pl, nr), out.mul(nl, pr));
        pn[i] = {pos, neg};
        break;
      }
    }
  }
  // Split into two circuits sharing the same gate list.
  ArithmeticCircuit p = out, q = out;
  p.set_output(pn[c.output()].first);
  q.set_output(pn[c.output()].second);
  return {p, q};
}

Word canonical_word(std::size_t d, const Symbol& call, const Symbol& ret, const Symbol& internal) {
  Word w{internal};
  for (std::size_t n = 0; n < d; ++n) {
    if (n % 2 == 0) {
      w.insert(w.begin(), internal);
    } else {
      Word next{call};
      next.insert(next.end(), w.begin(), w.end());
      next.push_back(ret);
      next.insert(next.end(), w.begin(), w.end());
      w = std::move(next);
    }
  }
  return w;
}

mpz_class canonical_scale(std::size_t d) {
  mpz_class m = 1;
  for (std::size_t n = 0; n < d; ++n) m = n % 2 == 0 ? mpz_class(m * 2) : mpz_class(m * m);
  return m;
}

}  // namespace probeq
