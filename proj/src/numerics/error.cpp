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

#include "probeq/error.hpp"

namespace probeq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivByZero: return "DivByZero";
    case ErrorCode::kDimension: return "DimError";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kEval: return "EvalError";
    case ErrorCode::kSymbol: return "SymbolError";
    case ErrorCode::kAlphabet: return "AlphabetError";
    case ErrorCode::kCounterArity: return "CounterArityError";
    case ErrorCode::kBudget: return "BudgetError";
    case ErrorCode::kNotWellMatched: return "NotWellMatched";
    case ErrorCode::kBadPrime: return "BadPrime";
    case ErrorCode::kNeedsSubElimination: return "NeedsSubElimination";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kValidation: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace probeq
