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

#include "probeq/io/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "probeq/cost/cost_zeroness.hpp"
#include "probeq/cost/distribution.hpp"
#include "probeq/error.hpp"
#include "probeq/io/document.hpp"
#include "probeq/io/json_format.hpp"
#include "probeq/isolating/isolating.hpp"
#include "probeq/vpa/acit.hpp"
#include "probeq/vpa/circuit_transform.hpp"
#include "probeq/vpa/reduction.hpp"
#include "probeq/vpa/sum_circuit.hpp"
#include "probeq/vpa/well_matched.hpp"
#include "probeq/weighted/zeroness.hpp"

namespace probeq {

using nlohmann::json;

Word parse_word(const std::string& text) {
  Word w;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty() && cur != "ε") w.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t') flush();
    else cur += ch;
  }
  flush();
  return w;
}

namespace {

struct Options {
  std::string mode;  // empty: per-command default
  std::size_t trials = 40;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
};

struct Outcome {
  json report;
  int code = kExitPositive;
};

Document load(const std::string& path) { return parse_document(read_input(path)); }

template <class T>
T as(const Document& d, const std::string& path, DocumentKind want) {
  if (d.kind != want) {
    throw Error(ErrorCode::kValidation, path + ": expected a " + std::string(to_string(want)) +
                                            " document, got " + std::string(to_string(d.kind)));
  }
  return std::get<T>(d.payload);
}

json word_json(const std::optional<Word>& w) {
  if (!w) return nullptr;
  return *w;
}

json point_json(const std::optional<std::vector<Rational>>& p) {
  if (!p) return nullptr;
  json out = json::array();
  for (const auto& x : *p) out.push_back(x.str());
  return out;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

Box parse_window(const std::string& text) {
  Box box;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "window entry '" + item + "' is not lo:hi");
    }
    try {
      box.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "window entry '" + item + "' is not lo:hi");
    }
  }
  return box;
}

bool deterministic(const Options& o, bool fallback) {
  if (o.mode.empty()) return fallback;
  return o.mode == "deterministic";
}

json base_report(const std::string& command, const Options& o) {
  return json{{"command", command}, {"seed", o.seed}, {"trials", o.trials}};
}

Outcome weighted_equiv(const WeightedAutomaton& b, const WeightedAutomaton& c, const Options& o) {
  Outcome r{base_report("equiv", o)};
  if (deterministic(o, true)) {
    EquivalenceResult e = equivalence(b, c);
    r.report["mode"] = "deterministic";
    r.report["verdict"] = e.equivalent ? "equivalent" : "inequivalent";
    r.report["witness"] = word_json(e.witness);
    r.code = e.equivalent ? kExitPositive : kExitNegative;
  } else {
    RandomizedEquivalence e = randomized_equivalence(b, c, o.trials, o.seed);
    r.report["mode"] = "randomized";
    r.report["verdict"] = e.probably_equivalent ? "probably-equivalent" : "inequivalent";
    r.report["witness"] = word_json(e.witness);
    r.code = e.probably_equivalent ? kExitPositive : kExitNegative;
  }
  return r;
}

Outcome cost_equiv(const CostAutomaton& b, const CostAutomaton& c, const Options& o,
                   const std::string& command) {
  CostEquivalenceOptions opt;
  opt.mode = deterministic(o, false) ? Mode::kDeterministic : Mode::kRandomized;
  opt.trials = o.trials;
  opt.seed = o.seed;
  opt.budget = o.budget;
  CostEquivalence e = cost_equivalence(b, c, opt);
  Outcome r{base_report(command, o)};
  r.report["mode"] = opt.mode == Mode::kDeterministic ? "deterministic" : "randomized";
  r.report["verdict"] = e.equivalent ? (opt.mode == Mode::kDeterministic ? "equivalent"
                                                                        : "probably-equivalent")
                                     : "inequivalent";
  r.report["witness"] = word_json(e.witness);
  r.report["point"] = point_json(e.point);
  r.report["points_checked"] = e.detail.points_checked;
  r.report["singular_points"] = e.detail.singular_points;
  r.code = e.equivalent ? kExitPositive : kExitNegative;
  return r;
}

Outcome run_equiv(const std::string& pa, const std::string& pb, const Options& o) {
  Document a = load(pa), b = load(pb);
  if (a.kind == DocumentKind::kCost || b.kind == DocumentKind::kCost) {
    return cost_equiv(as<CostAutomaton>(a, pa, DocumentKind::kCost),
                      as<CostAutomaton>(b, pb, DocumentKind::kCost), o, "equiv");
  }
  return weighted_equiv(as<WeightedAutomaton>(a, pa, DocumentKind::kWeighted),
                        as<WeightedAutomaton>(b, pb, DocumentKind::kWeighted), o);
}

Outcome run_zeroness(const std::string& path, const Options& o) {
  Document d = load(path);
  Outcome r{base_report("zeroness", o)};
  if (d.kind == DocumentKind::kCost) {
    const auto& a = std::get<CostAutomaton>(d.payload);
    const bool det = deterministic(o, false);
    CostZeroness z = det ? deterministic_zeroness(a, o.budget) : randomized_zeroness(a, o.trials, o.seed);
    r.report["mode"] = det ? "deterministic" : "randomized";
    r.report["verdict"] = z.zero ? (det ? "zero" : "probably-zero") : "non-zero";
    r.report["witness"] = word_json(z.witness);
    r.report["point"] = point_json(z.point);
    r.report["points_checked"] = z.points_checked;
    r.report["singular_points"] = z.singular_points;
    r.code = z.zero ? kExitPositive : kExitNegative;
    return r;
  }
  const auto& a = as<WeightedAutomaton>(d, path, DocumentKind::kWeighted);
  if (deterministic(o, true)) {
    ZeronessResult z = tzeng_zeroness(a);
    r.report["mode"] = "deterministic";
    r.report["verdict"] = z.zero ? "zero" : "non-zero";
    r.report["witness"] = word_json(z.witness);
    r.code = z.zero ? kExitPositive : kExitNegative;
  } else {
    RandomizedZeroness z = randomized_zeroness(a, o.trials, o.seed);
    r.report["mode"] = "randomized";
    r.report["verdict"] = z.probably_zero ? "probably-zero" : "non-zero";
    r.report["witness"] = word_json(z.witness);
    r.report["trials_run"] = z.trials_run;
    r.report["resamples"] = z.resamples;
    r.code = z.probably_zero ? kExitPositive : kExitNegative;
  }
  return r;
}

json modular_json(const ModularTrials& m) {
  return json{{"trials_run", m.trials_run},
              {"bad_primes", m.bad_primes},
              {"prime_bits", m.prime_bits},
              {"distinguishing_prime", m.distinguishing_prime.empty() ? json(nullptr) : json(m.distinguishing_prime)}};
}

Outcome run_vpa_equiv(const std::string& pa, const std::string& pb, const Options& o,
                      std::optional<std::size_t> k, bool materialize) {
  VpaEquivalenceOptions opt;
  opt.trials = o.trials;
  opt.seed = o.seed;
  opt.k_override = k;
  opt.materialize = materialize;
  VpaEquivalence e = vpa_equivalence(as<WeightedVPA>(load(pa), pa, DocumentKind::kVpa),
                                     as<WeightedVPA>(load(pb), pb, DocumentKind::kVpa), opt);
  Outcome r{base_report("vpa-equiv", o)};
  r.report["k"] = e.k;
  r.report["verdict"] = e.probably_equivalent ? "probably-equivalent" : "inequivalent";
  r.report["modular"] = modular_json(e.detail);
  r.code = e.probably_equivalent ? kExitPositive : kExitNegative;
  return r;
}

Outcome run_acit(const std::string& pa, const std::string& pb, const Options& o) {
  AcitResult e = acit_test(as<ArithmeticCircuit>(load(pa), pa, DocumentKind::kCircuit),
                           as<ArithmeticCircuit>(load(pb), pb, DocumentKind::kCircuit), o.trials,
                           o.seed);
  Outcome r{base_report("acit", o)};
  r.report["verdict"] = e.probably_equal ? "probably-equal" : "unequal";
  r.report["modular"] = modular_json(e.detail);
  r.code = e.probably_equal ? kExitPositive : kExitNegative;
  return r;
}

Outcome run_circuit_to_vpa(const std::string& path, std::size_t min_depth,
                           const std::string& output) {
  ArithmeticCircuit c = as<ArithmeticCircuit>(load(path), path, DocumentKind::kCircuit);
  if (c.has_sub()) {
    throw Error(ErrorCode::kNeedsSubElimination, "circuit contains subtraction gates");
  }
  CircuitVpa v = circuit_to_vpa(normalize_circuit(c, min_depth));
  Outcome r{json{{"command", "circuit-to-vpa"}}};
  r.report["depth"] = v.d;
  r.report["scale"] = v.scale.get_str();
  r.report["canonical_word"] = v.canonical;
  r.report["states"] = v.vpa.states();
  const std::string doc = print_document(Document::of(v.vpa));
  if (output.empty()) {
    r.report["vpa"] = json::parse(doc);
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw Error(ErrorCode::kInvalidArgument, output + ": cannot write");
    f << doc;
    r.report["output"] = output;
  }
  return r;
}

Outcome run_vpa_to_circuit(const std::string& path, std::optional<std::size_t> k) {
  WeightedVPA v = as<WeightedVPA>(load(path), path, DocumentKind::kVpa);
  const std::size_t kk = k ? *k : v.states() * v.states();
  Outcome r;
  r.report = json::parse(print_document(Document::of(sum_circuit(v, kk))));
  return r;
}

Rational eval_one(const Document& d, const Word& w, const std::optional<std::vector<Rational>>& point,
                  const Options& o) {
  switch (d.kind) {
    case DocumentKind::kWeighted: return weight(std::get<WeightedAutomaton>(d.payload), w);
    case DocumentKind::kCost:
      if (!point) throw Error(ErrorCode::kInvalidArgument, "cost automata need --point");
      return weight(substitute(std::get<CostAutomaton>(d.payload), *point), w);
    case DocumentKind::kVpa: return vpa_weight(std::get<WeightedVPA>(d.payload), w);
    case DocumentKind::kCircuit:
      return circuit_eval_exact(std::get<ArithmeticCircuit>(d.payload),
                                std::max<std::uint64_t>(o.budget, 64));
  }
  return Rational();
}

Outcome run_eval(const std::vector<std::string>& paths, const std::string& word,
                 const std::string& point_text, const Options& o) {
  const Word w = parse_word(word);
  std::optional<std::vector<Rational>> point;
  if (!point_text.empty()) point = parse_point(point_text);
  Outcome r{json{{"command", "eval"}, {"word", w}, {"point", point_json(point)}}};
  json values = json::array();
  std::vector<Rational> vals;
  for (const auto& p : paths) {
    vals.push_back(eval_one(load(p), w, point, o));
    values.push_back(vals.back().str());
  }
  r.report["values"] = values;
  if (vals.size() == 1) {
    r.report["verdict"] = vals[0].is_zero() ? "zero" : "non-zero";
    r.code = vals[0].is_zero() ? kExitPositive : kExitNegative;
  } else {
    const bool eq = vals[0] == vals[1];
    r.report["verdict"] = eq ? "equal" : "unequal";
    r.code = eq ? kExitPositive : kExitNegative;
  }
  return r;
}

Outcome run_distribution(const std::string& path, const std::string& word,
                         const std::string& window, const std::string& tol,
                         const std::string& point_text) {
  CostAutomaton a = as<CostAutomaton>(load(path), path, DocumentKind::kCost);
  std::optional<std::vector<Rational>> point;
  if (!point_text.empty()) point = parse_point(point_text);
  SeriesWindow s = distribution(a, parse_word(word), parse_window(window), Rational::parse(tol), point);
  json coeffs = json::array();
  for (const auto& [e, c] : s.coefficients) coeffs.push_back(json::array({e, c.str()}));
  json box = json::array();
  for (const auto& [lo, hi] : s.box) box.push_back(json::array({lo, hi}));
  Outcome r{json{{"command", "distribution"},
                 {"word", parse_word(word)},
                 {"box", box},
                 {"coefficients", coeffs},
                 {"tail_bound", s.tail_bound.str()},
                 {"outside_mass", s.outside_mass.str()},
                 {"truncation", s.truncation},
                 {"point", point_json(point)}}};
  if (point) r.report["window_value"] = evaluate_window(s, *point).str();
  return r;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "randomized or deterministic")
      ->check(CLI::IsMember({"randomized", "deterministic"}));
  sub->add_option("--trials", o.trials, "independent trials")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--budget", o.budget, "work limit for exhaustive modes");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence checking for weighted, cost-register and visibly pushdown automata",
               "probeq"};
  app.require_subcommand(1);
  Options o;
  std::string a, b, word, window, tol = "1/1000000", point, output;
  std::vector<std::string> eval_paths;
  std::optional<std::size_t> k;
  std::size_t min_depth = 0;
  bool materialize = false;

  auto two = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("A", a, "first document")->required();
    s->add_option("B", b, "second document")->required();
    add_common(s, o);
    return s;
  };
  CLI::App* equiv = two("equiv", "equivalence of two weighted (or cost) automata");
  CLI::App* cequiv = two("cost-equiv", "equivalence of two cost automata");
  CLI::App* vequiv = two("vpa-equiv", "equivalence of two weighted VPAs");
  vequiv->add_option("--k-override", k, "index of the well-matched layer to sum up to");
  vequiv->add_flag("--materialize", materialize, "build explicit sum circuits");
  CLI::App* acit = two("acit", "identity test for two arithmetic circuits");

  CLI::App* zero = app.add_subcommand("zeroness", "zeroness of a weighted or cost automaton");
  zero->add_option("A", a, "document")->required();
  add_common(zero, o);

  CLI::App* c2v = app.add_subcommand("circuit-to-vpa", "reduce a {+,*} circuit to a VPA");
  c2v->add_option("C", a, "circuit document")->required();
  c2v->add_option("--min-depth", min_depth, "pad the layered circuit to at least this depth");
  c2v->add_option("--output", output, "write the VPA document here");

  CLI::App* v2c = app.add_subcommand("vpa-to-circuit", "circuit for the sum over a well-matched layer");
  v2c->add_option("A", a, "VPA document")->required();
  v2c->add_option("--k", k, "layer index (default n^2)");

  CLI::App* ev = app.add_subcommand("eval", "weight of a word (or value of a circuit)");
  ev->add_option("A", eval_paths, "one or two documents")->required()->expected(1, 2);
  ev->add_option("--word", word, "space or comma separated symbols");
  ev->add_option("--point", point, "comma separated rationals for cost automata");
  add_common(ev, o);

  CLI::App* fmt = app.add_subcommand("format", "print a document in canonical form");
  fmt->add_option("A", a, "document")->required();

  CLI::App* dist = app.add_subcommand("distribution", "windowed series of a cost automaton");
  dist->add_option("A", a, "cost document")->required();
  dist->add_option("--word", word, "space or comma separated symbols");
  dist->add_option("--window", window, "lo:hi per counter, comma separated")->required();
  dist->add_option("--tol", tol, "truncation tolerance as a rational");
  dist->add_option("--point", point, "weight the bounds at this point");

  std::vector<std::string> argv_store{"probeq"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitPositive : kExitUsage;
  }

  try {
    Outcome r;
    if (*equiv) r = run_equiv(a, b, o);
    else if (*cequiv) {
      r = cost_equiv(as<CostAutomaton>(load(a), a, DocumentKind::kCost),
                     as<CostAutomaton>(load(b), b, DocumentKind::kCost), o, "cost-equiv");
    } else if (*vequiv) r = run_vpa_equiv(a, b, o, k, materialize);
    else if (*acit) r = run_acit(a, b, o);
    else if (*zero) r = run_zeroness(a, o);
    else if (*c2v) r = run_circuit_to_vpa(a, min_depth, output);
    else if (*v2c) r = run_vpa_to_circuit(a, k);
    else if (*ev) r = run_eval(eval_paths, word, point, o);
    else if (*dist) r = run_distribution(a, word, window, tol, point);
    else if (*fmt) {
      out << print_document(load(a));
      return kExitPositive;
    }
    out << canonical_dump(r.report);
    return r.code;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::kBudget ? kExitBudget : kExitUsage;
  }
}

}  // namespace probeq
