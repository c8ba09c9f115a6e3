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
#include <utility>
#include <vector>

#include "probeq/vpa/circuit.hpp"
#include "probeq/vpa/vpa.hpp"

namespace probeq {

/// Circuit for α·S_k·η with S_0 = I + Σ_a M_int(a) and
/// S_{i+1} = Σ_{a,b,γ} M_c(a,γ)·S_i·M_r(b,γ) + S_i·S_i.
/// Multiplications by constant 1 and structural zeros are folded away.
ArithmeticCircuit sum_circuit(const WeightedVPA& v, std::size_t k);

/// Copies `src` into `dst` and returns the id of src's output inside dst.
std::size_t append_circuit(ArithmeticCircuit& dst, const ArithmeticCircuit& src);

struct SparseEntry {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  Rational w;
};

/// Sparse view of a VPA: per (symbol, stack symbol) entry lists.
struct SparseVpa {
  std::size_t n = 0;
  std::size_t stack = 0;
  std::vector<std::vector<SparseEntry>> calls;    // [a·stack + g]
  std::vector<std::vector<SparseEntry>> returns;  // [b·stack + g]
  std::vector<std::vector<SparseEntry>> internals;
  std::vector<std::pair<std::uint32_t, Rational>> alpha;
  std::vector<std::pair<std::uint32_t, Rational>> eta;
};

SparseVpa sparse_vpa(const WeightedVPA& v);
SparseVpa sparse_product(const SparseVpa& a, const SparseVpa& b);

/// The data of the S_i recurrence restricted to states that can occur in a
/// non-zero entry of α·S_i·η: the initial states and everything reachable
/// from them by well-matched words. Ĉ_γ = Σ_a M_c(a,γ), R̂_γ = Σ_b M_r(b,γ).
struct SumModel {
  std::size_t n = 0;
  std::vector<SparseEntry> s0;
  struct Group {
    std::vector<SparseEntry> call;
    std::vector<SparseEntry> ret;
  };
  std::vector<Group> groups;
  std::vector<std::pair<std::uint32_t, Rational>> alpha;
  std::vector<std::pair<std::uint32_t, Rational>> eta;
};

SumModel sum_model(const SparseVpa& v);

/// Circuit for α·S_k·η built from the sparse model.
ArithmeticCircuit sum_circuit(const SumModel& m, std::size_t k);

/// Upper bound on log2 of the bit length of the numerator of α·S_k·η over
/// a power of `denominator_lcm` (see sum_value_log2_bits).
struct SumBound {
  long double base = 0;  // log2(bits) ≤ k + log2(base) + 1
  mpz_class denominator_lcm = 1;
};

SumBound sum_bound(const SumModel& m);

/// α·S_k·η evaluated in a prime field.
template <class F>
typename F::Elem sum_value_field(const SumModel& m, std::size_t k, const F& field);

}  // namespace probeq

#include "probeq/vpa/sum_circuit_impl.hpp"
