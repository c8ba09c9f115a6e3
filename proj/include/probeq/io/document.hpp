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
#include <string_view>
#include <variant>

#include "probeq/cost/cost_automaton.hpp"
#include "probeq/vpa/circuit.hpp"
#include "probeq/vpa/vpa.hpp"
#include "probeq/weighted/automaton.hpp"

namespace probeq {

enum class DocumentKind { kWeighted, kCost, kVpa, kCircuit };

std::string_view to_string(DocumentKind kind);

struct Document {
  DocumentKind kind = DocumentKind::kWeighted;
  int version = 1;
  std::variant<WeightedAutomaton, CostAutomaton, WeightedVPA, ArithmeticCircuit> payload;

  static Document of(WeightedAutomaton a) { return {DocumentKind::kWeighted, 1, std::move(a)}; }
  static Document of(CostAutomaton a) { return {DocumentKind::kCost, 1, std::move(a)}; }
  static Document of(WeightedVPA a) { return {DocumentKind::kVpa, 1, std::move(a)}; }
  static Document of(ArithmeticCircuit a) { return {DocumentKind::kCircuit, 1, std::move(a)}; }
};

/// Strict parser. Malformed input raises kParse with a line or JSON-pointer
/// location; model invariant violations raise kValidation.
Document parse_document(std::string_view text);

/// Canonical text: sorted keys, reduced rationals as strings, sparse sorted
/// matrices, one scalar array per line.
std::string print_document(const Document& doc);

/// Reads a file, or standard input for "-".
std::string read_input(const std::string& path);

}  // namespace probeq
