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

#include <iosfwd>
#include <string>
#include <vector>

#include "probeq/weighted/automaton.hpp"

namespace probeq {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPositive = 0,  // equivalent / zero / equal
  kExitNegative = 1,  // inequivalent / non-zero / unequal
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Splits on spaces and commas; "" and "ε" denote the empty word.
Word parse_word(const std::string& text);

/// Runs the tool on `args` (without the program name); the JSON report goes
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace probeq
