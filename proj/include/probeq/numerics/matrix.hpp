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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "probeq/numerics/rational.hpp"

namespace probeq {

/// Dense row-major matrix over Q. Row vectors are 1×n, column vectors n×1.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix row_vector(std::vector<Rational> entries);
  static QMatrix column_vector(std::vector<Rational> entries);
  static QMatrix unit_row(std::size_t n, std::size_t index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  /// Bounds-checked access; throws ErrorCode::kDimension.
  const Rational& at(std::size_t r, std::size_t c) const;

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& a);
  QMatrix operator-() const;
  QMatrix& operator+=(const QMatrix& other);

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact inverse by Gauss–Jordan elimination. Throws ErrorCode::kSingular for
/// singular input and ErrorCode::kDimension for non-square input.
QMatrix inverse(const QMatrix& a);
std::optional<QMatrix> try_inverse(const QMatrix& a);

/// Rank via fraction-based row reduction.
std::size_t rank(const QMatrix& a);

QMatrix kronecker(const QMatrix& a, const QMatrix& b);
QMatrix block_diagonal(const QMatrix& a, const QMatrix& b);
/// Horizontal concatenation [a | b]; both must have the same number of rows.
QMatrix hconcat(const QMatrix& a, const QMatrix& b);
/// Vertical concatenation; both must have the same number of columns.
QMatrix vconcat(const QMatrix& a, const QMatrix& b);

/// The scalar a·b for a 1×n row and an n×1 column.
Rational dot(const QMatrix& row, const QMatrix& column);

}  // namespace probeq
