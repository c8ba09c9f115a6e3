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

#include "probeq/numerics/matrix.hpp"

#include <sstream>
#include <utility>

#include "probeq/error.hpp"

namespace probeq {
namespace {

std::string shape(const QMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Picks the non-zero entry in column `col` (rows >= `from`) with the shortest
// representation; returns rows() when the column is zero below `from`.
std::size_t choose_pivot(const QMatrix& m, std::size_t col, std::size_t from) {
  std::size_t best = m.rows();
  std::size_t best_bits = 0;
  for (std::size_t r = from; r < m.rows(); ++r) {
    const Rational& v = m(r, col);
    if (v.is_zero()) continue;
    std::size_t bits = v.bit_length();
    if (best == m.rows() || bits < best_bits) {
      best = r;
      best_bits = bits;
    }
  }
  return best;
}

void swap_rows(QMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::kDimension, "matrix " + std::to_string(rows) + "x" +
                                           std::to_string(cols) + " given " +
                                           std::to_string(entries_.size()) + " entries");
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::row_vector(std::vector<Rational> entries) {
  std::size_t n = entries.size();
  return QMatrix(1, n, std::move(entries));
}

QMatrix QMatrix::column_vector(std::vector<Rational> entries) {
  std::size_t n = entries.size();
  return QMatrix(n, 1, std::move(entries));
}

QMatrix QMatrix::unit_row(std::size_t n, std::size_t index) {
  QMatrix m(1, n);
  m(0, index) = 1;
  return m;
}

const Rational& QMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorCode::kDimension, "index (" + std::to_string(r) + "," + std::to_string(c) +
                                           ") outside " + shape(*this));
  }
  return (*this)(r, c);
}

bool QMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimension, "cannot multiply " + shape(a) + " by " + shape(b));
  }
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  QMatrix out = a;
  out += b;
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + (-b); }

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix out = a;
  for (auto& e : out.entries_) e *= s;
  return out;
}

QMatrix QMatrix::operator-() const {
  QMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::kDimension, "cannot add " + shape(*this) + " and " + shape(other));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::optional<QMatrix> try_inverse(const QMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kDimension, "cannot invert non-square " + shape(a));
  }
  const std::size_t n = a.rows();
  QMatrix work = a;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = choose_pivot(work, col, col);
    if (pivot == n) return std::nullopt;
    swap_rows(work, pivot, col);
    swap_rows(inv, pivot, col);
    Rational scale = work(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      Rational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!work(col, c).is_zero()) work(r, c) -= factor * work(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

QMatrix inverse(const QMatrix& a) {
  auto inv = try_inverse(a);
  if (!inv) throw Error(ErrorCode::kSingular, "matrix is singular");
  return *std::move(inv);
}

std::size_t rank(const QMatrix& a) {
  QMatrix work = a;
  std::size_t r = 0;
  for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
    std::size_t pivot = choose_pivot(work, col, r);
    if (pivot == work.rows()) continue;
    swap_rows(work, pivot, r);
    for (std::size_t i = r + 1; i < work.rows(); ++i) {
      if (work(i, col).is_zero()) continue;
      Rational factor = work(i, col) / work(r, col);
      for (std::size_t c = col; c < work.cols(); ++c) work(i, c) -= factor * work(r, c);
    }
    ++r;
  }
  return r;
}

QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

QMatrix block_diagonal(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

QMatrix hconcat(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kDimension, "hconcat of " + shape(a) + " and " + shape(b));
  }
  QMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

QMatrix vconcat(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimension, "vconcat of " + shape(a) + " and " + shape(b));
  }
  QMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

Rational dot(const QMatrix& row, const QMatrix& column) {
  if (row.rows() != 1 || column.cols() != 1 || row.cols() != column.rows()) {
    throw Error(ErrorCode::kDimension, "dot of " + shape(row) + " and " + shape(column));
  }
  Rational acc;
  for (std::size_t i = 0; i < row.cols(); ++i) {
    if (!row(0, i).is_zero() && !column(i, 0).is_zero()) acc += row(0, i) * column(i, 0);
  }
  return acc;
}

}  // namespace probeq
