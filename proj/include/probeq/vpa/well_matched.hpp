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
#include <cstdint>
#include <vector>

#include "probeq/numerics/rng.hpp"
#include "probeq/vpa/vpa.hpp"

namespace probeq {

struct WMNode {
  enum class Kind { kEmpty, kInternal, kNest, kConcat };
  Kind kind = Kind::kEmpty;
  std::size_t symbol = 0;  // internal index, or call index for kNest
  std::size_t ret = 0;     // return index for kNest
  std::size_t left = 0;    // body for kNest
  std::size_t right = 0;
};

/// A well-matched word with its canonical parse. Nodes are stored children
/// first, so a forward pass over `nodes` is a valid bottom-up evaluation.
struct WellMatchedWord {
  Word symbols;
  std::vector<WMNode> nodes;
  std::size_t root = 0;
};

/// Single stack pass; concatenation associates to the left. Throws
/// kNotWellMatched or kSymbol.
WellMatchedWord parse_well_matched(const Word& word, const VisiblyAlphabet& alphabet);

/// Value α·M_A(w)·η; kSymbol / kNotWellMatched on bad input.
Rational vpa_weight(const WeightedVPA& v, const WellMatchedWord& w);
Rational vpa_weight(const WeightedVPA& v, const Word& w);
/// The matrix M_A(w).
QMatrix vpa_matrix(const WeightedVPA& v, const WellMatchedWord& w);

/// Least i with w ∈ L_i, where L_0 = Σ_int + ε and
/// L_{i+1} = Σ_c L_i Σ_r + L_i L_i.
std::size_t l_index(const WellMatchedWord& w);

/// Random derivation of depth ≤ max_depth with geometric stopping.
WellMatchedWord sample_well_matched(const VisiblyAlphabet& alphabet, std::size_t max_depth,
                                    Rng& rng);

}  // namespace probeq
