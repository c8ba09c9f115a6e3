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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "probeq/cost/cost_zeroness.hpp"
#include "probeq/io/cli.hpp"
#include "probeq/io/document.hpp"
#include "probeq/isolating/isolating.hpp"
#include "probeq/vpa/acit.hpp"
#include "probeq/vpa/circuit_transform.hpp"
#include "probeq/vpa/reduction.hpp"
#include "probeq/vpa/well_matched.hpp"
#include "probeq/weighted/zeroness.hpp"

namespace py = pybind11;
using namespace probeq;

namespace {

std::vector<Rational> point_of(const std::vector<std::string>& text) {
  std::vector<Rational> out;
  for (const auto& t : text) out.push_back(Rational::parse(t));
  return out;
}

std::optional<std::vector<std::string>> point_str(const std::optional<std::vector<Rational>>& p) {
  if (!p) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& x : *p) out.push_back(x.str());
  return out;
}

template <class T>
std::string dump(const T& model) {
  return print_document(Document::of(model));
}

}  // namespace

PYBIND11_MODULE(_probeq, m) {
  m.doc() = "Exact equivalence checking for weighted, cost and visibly pushdown automata";

  static py::exception<Error> error(m, "ProbeqError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error((std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<WeightedAutomaton>(m, "WeightedAutomaton")
      .def_property_readonly("states", &WeightedAutomaton::states)
      .def_property_readonly("alphabet", &WeightedAutomaton::alphabet)
      .def("to_json", &dump<WeightedAutomaton>);
  py::class_<CostAutomaton>(m, "CostAutomaton")
      .def_property_readonly("states", &CostAutomaton::states)
      .def_property_readonly("counters", &CostAutomaton::counters)
      .def("to_json", &dump<CostAutomaton>);
  py::class_<WeightedVPA>(m, "WeightedVPA")
      .def_property_readonly("states", &WeightedVPA::states)
      .def("to_json", &dump<WeightedVPA>);
  py::class_<ArithmeticCircuit>(m, "ArithmeticCircuit")
      .def_property_readonly("size", &ArithmeticCircuit::size)
      .def("to_json", &dump<ArithmeticCircuit>);

  m.def("parse_document", [](const std::string& text) -> py::object {
    Document d = parse_document(text);
    return std::visit([](auto&& x) { return py::cast(x); }, std::move(d.payload));
  }, py::arg("text"));

  m.def("weight", [](const WeightedAutomaton& a, const Word& w) { return weight(a, w).str(); });
  m.def("tzeng_zeroness", [](const WeightedAutomaton& a) {
    ZeronessResult r = tzeng_zeroness(a);
    return py::make_tuple(r.zero, r.witness);
  });
  m.def("equivalence", [](const WeightedAutomaton& b, const WeightedAutomaton& c) {
    EquivalenceResult r = equivalence(b, c);
    return py::make_tuple(r.equivalent, r.witness);
  });
  m.def("randomized_zeroness", [](const WeightedAutomaton& a, std::size_t trials, std::uint64_t seed) {
    RandomizedZeroness r = randomized_zeroness(a, trials, seed);
    return py::make_tuple(r.probably_zero, r.witness);
  }, py::arg("a"), py::arg("trials") = 40, py::arg("seed") = 0);

  m.def("cost_weight", [](const CostAutomaton& a, const Word& w, const std::vector<std::string>& point) {
    return weight(substitute(a, point_of(point)), w).str();
  });
  m.def("cost_equivalence", [](const CostAutomaton& b, const CostAutomaton& c,
                               const std::string& mode, std::size_t trials, std::uint64_t seed) {
    CostEquivalenceOptions o;
    o.mode = mode == "deterministic" ? Mode::kDeterministic : Mode::kRandomized;
    o.trials = trials;
    o.seed = seed;
    CostEquivalence r = cost_equivalence(b, c, o);
    return py::make_tuple(r.equivalent, r.witness, point_str(r.point));
  }, py::arg("b"), py::arg("c"), py::arg("mode") = "randomized", py::arg("trials") = 40,
     py::arg("seed") = 0);

  m.def("vpa_weight", [](const WeightedVPA& v, const Word& w) { return vpa_weight(v, w).str(); });
  m.def("vpa_equivalence", [](const WeightedVPA& a, const WeightedVPA& b, std::size_t trials,
                              std::uint64_t seed, std::optional<std::size_t> k) {
    VpaEquivalenceOptions o;
    o.trials = trials;
    o.seed = seed;
    o.k_override = k;
    return vpa_equivalence(a, b, o).probably_equivalent;
  }, py::arg("a"), py::arg("b"), py::arg("trials") = 40, py::arg("seed") = 0,
     py::arg("k_override") = py::none());

  m.def("circuit_value", [](const ArithmeticCircuit& c) { return circuit_eval_exact(c).str(); });
  m.def("acit_test", [](const ArithmeticCircuit& a, const ArithmeticCircuit& b, std::size_t trials,
                        std::uint64_t seed) { return acit_test(a, b, trials, seed).probably_equal; },
        py::arg("a"), py::arg("b"), py::arg("trials") = 40, py::arg("seed") = 0);
  m.def("circuit_to_vpa", [](const ArithmeticCircuit& c, std::size_t min_depth) {
    CircuitVpa v = circuit_to_vpa(normalize_circuit(c, min_depth));
    return py::make_tuple(v.vpa, v.canonical, v.scale.get_str(), v.d);
  }, py::arg("c"), py::arg("min_depth") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
