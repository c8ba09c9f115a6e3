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
#include <span>
#include <vector>

#include "probeq/numerics/matrix.hpp"

namespace probeq {

/// Incrementally maintained basis of a subspace of Q^width.
///
/// Inserted vectors are kept verbatim (so callers get back their own
/// vectors); an echelon copy of each is kept alongside for membership tests.
class RowBasis {
 public:
  explicit RowBasis(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return originals_.size(); }
  bool full() const { return size() == width_; }

  /// True when `row` (1×width) lies in the span of the current basis.
  bool contains(const QMatrix& row) const;

  /// Adds `row` if it is independent of the basis; returns whether it was.
  bool insert(const QMatrix& row, std::size_t tag = 0);

  const std::vector<QMatrix>& vectors() const { return originals_; }
  const std::vector<std::size_t>& tags() const { return tags_; }

 private:
  std::vector<Rational> reduce(const QMatrix& row) const;

  std::size_t width_;
  std::vector<QMatrix> originals_;
  std::vector<std::size_t> tags_;
  std::vector<std::vector<Rational>> echelon_;
  std::vector<std::size_t> pivots_;
};

struct BasisSelection {
  std::vector<std::size_t> indices;
  std::vector<QMatrix> vectors;
};

/// Greedy left-to-right selection of an independent subset spanning the same
/// space as `vectors`. All inputs must be 1×n for a common n.
BasisSelection row_space_basis(std::span<const QMatrix> vectors);

}  // namespace probeq
