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

#ifndef FOCKSIM_MATRIX_HPP
#define FOCKSIM_MATRIX_HPP

#include <complex>
#include <vector>

namespace focksim {

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  using Scalar = std::complex<double>;

  ComplexMatrix(int rows, int cols);
  ComplexMatrix(int rows, int cols, std::vector<Scalar> entries);
  /// Rows given as nested lists, e.g. {{a, b}, {c, d}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }
  const std::vector<Scalar>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

  /// max_ij |a_ij - b_ij|; matrices must have equal shape.
  double max_abs_diff(const ComplexMatrix& other) const;

 private:
  int rows_;
  int cols_;
  std::vector<Scalar> entries_;
};

/// Checks m * m^dagger = I elementwise within tol.
bool is_unitary_within(const ComplexMatrix& m, double tol);

}  // namespace focksim

#endif
