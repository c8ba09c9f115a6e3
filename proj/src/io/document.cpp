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

#include "probeq/io/document.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

#include "probeq/error.hpp"
#include "probeq/io/json_format.hpp"

namespace probeq {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

std::string ptr(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, "missing field '" + key + "'");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) parse_fail(where, "unexpected field '" + it.key() + "'");
  }
}

Rational rational(const json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "rational must be a string such as \"1/2\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

std::size_t index(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) parse_fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<int>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  return j;
}

const json& object(const json& j, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  return j;
}

std::vector<Symbol> symbols(const json& j, const std::string& where) {
  std::vector<Symbol> out;
  const json& a = array(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_string()) parse_fail(ptr(where, i), "symbol must be a string");
    out.push_back(a[i].get<std::string>());
  }
  return out;
}

QMatrix matrix(const json& j, std::size_t n, const std::string& where) {
  const json& a = array(j, where);
  QMatrix m(n, n);
  const bool dense = !a.empty() && a[0].is_array() && !a[0].empty() && a[0][0].is_string();
  if (dense) {
    if (a.size() != n) parse_fail(where, "dense matrix needs " + std::to_string(n) + " rows");
    for (std::size_t r = 0; r < n; ++r) {
      const json& row = array(a[r], ptr(where, r));
      if (row.size() != n) parse_fail(ptr(where, r), "row needs " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rational(row[c], ptr(ptr(where, r), c));
    }
    return m;
  }
  for (std::size_t t = 0; t < a.size(); ++t) {
    const std::string at = ptr(where, t);
    const json& e = array(a[t], at);
    if (e.size() != 3) parse_fail(at, "sparse entry must be [row, col, \"weight\"]");
    const std::size_t r = index(e[0], ptr(at, 0)), c = index(e[1], ptr(at, 1));
    if (r >= n || c >= n) throw Error(ErrorCode::kValidation, at + ": index outside " + std::to_string(n) + "×" + std::to_string(n));
    m(r, c) += rational(e[2], ptr(at, 2));
  }
  return m;
}

std::vector<Rational> vec(const json& j, std::size_t n, const std::string& where) {
  const json& a = array(j, where);
  if (a.size() != n) {
    throw Error(ErrorCode::kValidation, where + ": expected " + std::to_string(n) + " entries, got " + std::to_string(a.size()));
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rational(a[i], ptr(where, i)));
  return out;
}

json matrix_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.push_back(json::array({r, c, m(r, c).str()}));
  return out;
}

json vec_json(const QMatrix& m) {
  json out = json::array();
  for (const auto& x : m.entries()) out.push_back(x.str());
  return out;
}

// Converts construction failures of the model types into validation errors.
template <class Fn>
auto build(const std::string& what, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse || e.code() == ErrorCode::kValidation) throw;
    throw Error(ErrorCode::kValidation, what + ": " + e.what());
  }
}

WeightedAutomaton parse_weighted(const json& j) {
  only_keys(j, {"kind", "version", "states", "alphabet", "transitions", "initial", "final"}, "");
  const std::size_t n = index(field(j, "states", ""), "/states");
  const std::vector<Symbol> alphabet = symbols(field(j, "alphabet", ""), "/alphabet");
  const json& tr = object(field(j, "transitions", ""), "/transitions");
  for (auto it = tr.begin(); it != tr.end(); ++it) {
    if (std::find(alphabet.begin(), alphabet.end(), it.key()) == alphabet.end()) {
      throw Error(ErrorCode::kValidation, "/transitions/" + it.key() + ": symbol not in the alphabet");
    }
  }
  std::vector<QMatrix> mats;
  for (const auto& s : alphabet) {
    auto it = tr.find(s);
    mats.push_back(it == tr.end() ? QMatrix(n, n) : matrix(*it, n, ptr("/transitions", s)));
  }
  auto alpha = vec(field(j, "initial", ""), n, "/initial");
  auto eta = vec(field(j, "final", ""), n, "/final");
  return build("weighted automaton", [&] {
    return WeightedAutomaton(alphabet, std::move(mats), QMatrix::row_vector(alpha),
                             QMatrix::column_vector(eta));
  });
}

std::vector<CostEdge> cost_edges(const json& j, std::size_t n, std::size_t s, const std::string& where) {
  std::vector<CostEdge> out;
  const json& a = array(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string at = ptr(where, i);
    const json& e = object(a[i], at);
    only_keys(e, {"from", "to", "cost", "weight"}, at);
    CostEdge edge;
    edge.from = index(field(e, "from", at), ptr(at, "from"));
    edge.to = index(field(e, "to", at), ptr(at, "to"));
    if (edge.from >= n || edge.to >= n) throw Error(ErrorCode::kValidation, at + ": state out of range");
    const json& cost = array(field(e, "cost", at), ptr(at, "cost"));
    if (cost.size() != s) {
      throw Error(ErrorCode::kValidation, ptr(at, "cost") + ": cost vector must have " + std::to_string(s) + " entries");
    }
    for (std::size_t k = 0; k < s; ++k) edge.cost.push_back(integer(cost[k], ptr(ptr(at, "cost"), k)));
    edge.weight = rational(field(e, "weight", at), ptr(at, "weight"));
    out.push_back(std::move(edge));
  }
  return out;
}

json cost_edges_json(const LaurentMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (const auto& [e, c] : m(i, j).terms()) {
        out.push_back(json{{"from", i}, {"to", j}, {"cost", e}, {"weight", c.str()}});
      }
  return out;
}

CostAutomaton parse_cost(const json& j) {
  only_keys(j, {"kind", "version", "states", "counters", "alphabet", "transitions", "epsilon",
                "initial", "final"}, "");
  const std::size_t n = index(field(j, "states", ""), "/states");
  const std::size_t s = index(field(j, "counters", ""), "/counters");
  const std::vector<Symbol> alphabet = symbols(field(j, "alphabet", ""), "/alphabet");
  std::map<Symbol, std::vector<CostEdge>> edges;
  const json& tr = object(field(j, "transitions", ""), "/transitions");
  for (auto it = tr.begin(); it != tr.end(); ++it) {
    if (std::find(alphabet.begin(), alphabet.end(), it.key()) == alphabet.end()) {
      throw Error(ErrorCode::kValidation, "/transitions/" + it.key() + ": symbol not in the alphabet");
    }
    edges[it.key()] = cost_edges(it.value(), n, s, ptr("/transitions", it.key()));
  }
  std::vector<CostEdge> eps;
  if (j.contains("epsilon")) eps = cost_edges(j["epsilon"], n, s, "/epsilon");
  auto alpha = vec(field(j, "initial", ""), n, "/initial");
  auto eta = vec(field(j, "final", ""), n, "/final");
  CostAutomaton a = build("cost automaton", [&] {
    return CostAutomaton::from_edges(n, s, alphabet, edges, eps, QMatrix::row_vector(alpha),
                                     QMatrix::column_vector(eta));
  });
  ValidationReport r = validate(a);
  if (!r.ok) throw Error(ErrorCode::kValidation, r.violations.front());
  return a;
}

WeightedVPA parse_vpa(const json& j) {
  only_keys(j, {"kind", "version", "states", "calls", "returns", "internals", "stack", "call",
                "return", "internal", "initial", "final"}, "");
  const std::size_t n = index(field(j, "states", ""), "/states");
  VisiblyAlphabet al{symbols(field(j, "calls", ""), "/calls"),
                     symbols(field(j, "returns", ""), "/returns"),
                     symbols(field(j, "internals", ""), "/internals")};
  build("visibly alphabet", [&] { al.validate(); return 0; });
  const std::vector<Symbol> stack = symbols(field(j, "stack", ""), "/stack");
  WeightedVPA v = build("visibly pushdown automaton", [&] { return WeightedVPA::zero(al, stack, n); });

  auto stack_index = [&](const std::string& g, const std::string& at) {
    auto it = std::find(stack.begin(), stack.end(), g);
    if (it == stack.end()) throw Error(ErrorCode::kValidation, at + ": unknown stack symbol");
    return static_cast<std::size_t>(it - stack.begin());
  };
  auto table = [&](const char* key, const std::vector<Symbol>& syms, bool is_call) {
    if (!j.contains(key)) return;
    const std::string base = std::string("/") + key;
    const json& t = object(j[key], base);
    for (auto it = t.begin(); it != t.end(); ++it) {
      auto s = std::find(syms.begin(), syms.end(), it.key());
      const std::string at = ptr(base, it.key());
      if (s == syms.end()) throw Error(ErrorCode::kValidation, at + ": symbol not in this class");
      const json& per = object(it.value(), at);
      for (auto g = per.begin(); g != per.end(); ++g) {
        const std::size_t gi = stack_index(g.key(), ptr(at, g.key()));
        QMatrix m = matrix(g.value(), n, ptr(at, g.key()));
        (is_call ? v.call(s - syms.begin(), gi) : v.ret(s - syms.begin(), gi)) = std::move(m);
      }
    }
  };
  table("call", al.calls, true);
  table("return", al.returns, false);
  if (j.contains("internal")) {
    const json& t = object(j["internal"], "/internal");
    for (auto it = t.begin(); it != t.end(); ++it) {
      auto s = std::find(al.internals.begin(), al.internals.end(), it.key());
      const std::string at = ptr("/internal", it.key());
      if (s == al.internals.end()) throw Error(ErrorCode::kValidation, at + ": symbol not internal");
      v.internal(s - al.internals.begin()) = matrix(it.value(), n, at);
    }
  }
  v.initial() = QMatrix::row_vector(vec(field(j, "initial", ""), n, "/initial"));
  v.final_weights() = QMatrix::column_vector(vec(field(j, "final", ""), n, "/final"));
  return v;
}

ArithmeticCircuit parse_circuit(const json& j) {
  only_keys(j, {"kind", "version", "gates", "output"}, "");
  const json& gates = array(field(j, "gates", ""), "/gates");
  ArithmeticCircuit c;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const std::string at = ptr("/gates", i);
    const json& g = array(gates[i], at);
    if (g.empty() || !g[0].is_string()) parse_fail(at, "gate must start with its kind");
    const std::string kind = g[0].get<std::string>();
    if (kind == "const") {
      if (g.size() != 2) parse_fail(at, "const gate is [\"const\", \"value\"]");
      c.constant(rational(g[1], ptr(at, 1)));
      continue;
    }
    Gate gate;
    if (kind == "add") gate.kind = GateKind::kAdd;
    else if (kind == "mul") gate.kind = GateKind::kMul;
    else if (kind == "sub") gate.kind = GateKind::kSub;
    else parse_fail(ptr(at, 0), "unknown gate kind '" + kind + "'");
    if (g.size() != 3) parse_fail(at, "binary gate is [kind, left, right]");
    gate.left = index(g[1], ptr(at, 1));
    gate.right = index(g[2], ptr(at, 2));
    if (gate.left >= i || gate.right >= i) {
      throw Error(ErrorCode::kValidation, at + ": arguments must refer to earlier gates");
    }
    c.push(gate);
  }
  const std::size_t out = index(field(j, "output", ""), "/output");
  if (out >= c.size()) throw Error(ErrorCode::kValidation, "/output: no such gate");
  c.set_output(out);
  return c;
}

json weighted_json(const WeightedAutomaton& a) {
  json t = json::object();
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) t[a.alphabet()[s]] = matrix_json(a.transition(s));
  return json{{"kind", "weighted"}, {"version", 1}, {"states", a.states()},
              {"alphabet", a.alphabet()}, {"transitions", t},
              {"initial", vec_json(a.initial())}, {"final", vec_json(a.final_weights())}};
}

json cost_json(const CostAutomaton& a) {
  json t = json::object();
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
    t[a.alphabet()[s]] = cost_edges_json(a.transition(s));
  }
  return json{{"kind", "cost"}, {"version", 1}, {"states", a.states()},
              {"counters", a.counters()}, {"alphabet", a.alphabet()}, {"transitions", t},
              {"epsilon", cost_edges_json(a.epsilon())}, {"initial", vec_json(a.initial())},
              {"final", vec_json(a.final_weights())}};
}

json vpa_json(const WeightedVPA& v) {
  const auto& al = v.alphabet();
  json call = json::object(), ret = json::object(), internal = json::object();
  for (std::size_t a = 0; a < al.calls.size(); ++a)
    for (std::size_t g = 0; g < v.stack().size(); ++g)
      if (!v.call(a, g).is_zero()) call[al.calls[a]][v.stack()[g]] = matrix_json(v.call(a, g));
  for (std::size_t b = 0; b < al.returns.size(); ++b)
    for (std::size_t g = 0; g < v.stack().size(); ++g)
      if (!v.ret(b, g).is_zero()) ret[al.returns[b]][v.stack()[g]] = matrix_json(v.ret(b, g));
  for (std::size_t i = 0; i < al.internals.size(); ++i)
    if (!v.internal(i).is_zero()) internal[al.internals[i]] = matrix_json(v.internal(i));
  return json{{"kind", "vpa"}, {"version", 1}, {"states", v.states()}, {"calls", al.calls},
              {"returns", al.returns}, {"internals", al.internals}, {"stack", v.stack()},
              {"call", call}, {"return", ret}, {"internal", internal},
              {"initial", vec_json(v.initial())}, {"final", vec_json(v.final_weights())}};
}

json circuit_json(const ArithmeticCircuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kConst: gates.push_back(json::array({"const", g.value.str()})); break;
      case GateKind::kAdd: gates.push_back(json::array({"add", g.left, g.right})); break;
      case GateKind::kMul: gates.push_back(json::array({"mul", g.left, g.right})); break;
      case GateKind::kSub: gates.push_back(json::array({"sub", g.left, g.right})); break;
    }
  }
  return json{{"kind", "circuit"}, {"version", 1}, {"gates", gates}, {"output", c.output()}};
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kWeighted: return "weighted";
    case DocumentKind::kCost: return "cost";
    case DocumentKind::kVpa: return "vpa";
    case DocumentKind::kCircuit: return "circuit";
  }
  return "?";
}

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Turn the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n';
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": malformed JSON (" +
                                       std::string(e.what()) + ")");
  }
  object(j, "");
  const json& kind = field(j, "kind", "");
  if (!kind.is_string()) parse_fail("/kind", "expected a string");
  const int version = integer(field(j, "version", ""), "/version");
  if (version != 1) parse_fail("/version", "unsupported version " + std::to_string(version));
  const std::string k = kind.get<std::string>();
  if (k == "weighted") return Document::of(parse_weighted(j));
  if (k == "cost") return Document::of(parse_cost(j));
  if (k == "vpa") return Document::of(parse_vpa(j));
  if (k == "circuit") return Document::of(parse_circuit(j));
  parse_fail("/kind", "unknown document kind '" + k + "'");
}

std::string print_document(const Document& doc) {
  json j = std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, WeightedAutomaton>) return weighted_json(m);
        else if constexpr (std::is_same_v<T, CostAutomaton>) return cost_json(m);
        else if constexpr (std::is_same_v<T, WeightedVPA>) return vpa_json(m);
        else return circuit_json(m);
      },
      doc.payload);
  return canonical_dump(j);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

bool scalar_array(const json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void dump(const json& j, int indent, std::string& out) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + json(it.key()).dump() + ": ";
      dump(it.value(), indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    if (scalar_array(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      dump(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
  std::string out;
  dump(j, 0, out);
  out += "\n";
  return out;
}

}  // namespace probeq
