// Copyright 2026 The focksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "focksim/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace focksim {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (entries_.size() != static_cast<size_t>(rows) * cols) {
    throw std::invalid_argument("entry count does not match rows * cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
  for (const auto& row : rows) {
    if (cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_) {
      throw std::invalid_argument("ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ComplexMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar v = (*this)(i, k);
      if (v == Scalar(0.0, 0.0)) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(k, j);
    }
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("shape mismatch");
  }
  double worst = 0.0;
  for (size_t i = 0; i < entries_.size(); ++i) {
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  }
  return worst;
}

bool is_unitary_within(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return (m * m.adjoint()).max_abs_diff(ComplexMatrix::identity(m.rows())) <= tol;
}

}  // namespace focksim
