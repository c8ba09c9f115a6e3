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

#include "probeq/numerics/row_basis.hpp"

#include "probeq/error.hpp"

namespace probeq {

std::vector<Rational> RowBasis::reduce(const QMatrix& row) const {
  if (row.rows() != 1 || row.cols() != width_) {
    throw Error(ErrorCode::kDimension, "basis of width " + std::to_string(width_) +
                                           " given a " + std::to_string(row.rows()) + "x" +
                                           std::to_string(row.cols()) + " vector");
  }
  std::vector<Rational> v(row.entries());
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    Rational factor = v[p];
    const auto& e = echelon_[i];
    for (std::size_t c = p; c < width_; ++c) {
      if (!e[c].is_zero()) v[c] -= factor * e[c];
    }
  }
  return v;
}

bool RowBasis::contains(const QMatrix& row) const {
  for (const auto& x : reduce(row)) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool RowBasis::insert(const QMatrix& row, std::size_t tag) {
  std::vector<Rational> v = reduce(row);
  std::size_t pivot = 0;
  while (pivot < width_ && v[pivot].is_zero()) ++pivot;
  if (pivot == width_) return false;
  Rational scale = v[pivot].inverse();
  for (std::size_t c = pivot; c < width_; ++c) v[c] *= scale;
  // Later reductions walk rows in insertion order; each stored row is zero at
  // every earlier pivot, so subtracting it cannot revive those columns.
  echelon_.push_back(std::move(v));
  pivots_.push_back(pivot);
  originals_.push_back(row);
  tags_.push_back(tag);
  return true;
}

BasisSelection row_space_basis(std::span<const QMatrix> vectors) {
  BasisSelection out;
  if (vectors.empty()) return out;
  RowBasis basis(vectors.front().cols());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (basis.insert(vectors[i], i)) {
      out.indices.push_back(i);
      out.vectors.push_back(vectors[i]);
    }
  }
  return out;
}

}  // namespace probeq
