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

#include "focksim/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace focksim {

namespace {

using Scalar = ComplexMatrix::Scalar;

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) throw std::invalid_argument(std::string(what) + ": matrix not square");
}

}  // namespace

std::complex<double> permanent_naive(const ComplexMatrix& m) {
  require_square(m, "permanent");
  const int n = m.rows();
  if (n > 10) throw std::invalid_argument("permanent_naive is capped at n = 10");
  if (n == 0) return 1.0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar sum = 0.0;
  do {
    Scalar prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= m(i, perm[i]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

std::complex<double> permanent_ryser(const ComplexMatrix& m) {
  require_square(m, "permanent");
  const int n = m.rows();
  if (n > kMaxPermanentSize) throw std::invalid_argument("permanent is capped at n = 20");
  if (n == 0) return 1.0;

  // per(A) = (-1)^n sum over nonempty column subsets S of
  //          (-1)^|S| prod_i sum_{j in S} a_ij.
  // Subsets are visited in Gray-code order so each step updates the row sums
  // with a single column.
  std::vector<Scalar> row_sum(n, Scalar(0.0, 0.0));
  Scalar total = 0.0;
  std::uint64_t gray = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < end; ++k) {
    const int j = std::countr_zero(k);  // column whose membership flips
    const std::uint64_t bit = std::uint64_t{1} << j;
    gray ^= bit;
    const double flip = (gray & bit) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) row_sum[i] += flip * m(i, j);
    Scalar prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= row_sum[i];
    total += (std::popcount(gray) & 1) ? -prod : prod;
  }
  return (n & 1) ? -total : total;
}

std::complex<double> permanent(const ComplexMatrix& m) {
  require_square(m, "permanent");
  if (m.rows() > kMaxPermanentSize) throw std::invalid_argument("permanent is capped at n = 20");
  return m.rows() <= 4 ? permanent_naive(m) : permanent_ryser(m);
}

std::complex<double> determinant(const ComplexMatrix& m) {
  require_square(m, "determinant");
  const int n = m.rows();
  if (n == 0) return 1.0;
  std::vector<Scalar> a = m.entries();
  auto at = [&](int i, int j) -> Scalar& { return a[static_cast<size_t>(i) * n + j]; };

  double sign = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(at(col, col));
    for (int row = col + 1; row < n; ++row) {
      const double mag = std::abs(at(row, col));
      if (mag > best) {
        best = mag;
        pivot = row;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(at(col, j), at(pivot, j));
      sign = -sign;
    }
    for (int row = col + 1; row < n; ++row) {
      const Scalar factor = at(row, col) / at(col, col);
      if (factor == Scalar(0.0, 0.0)) continue;
      for (int j = col; j < n; ++j) at(row, j) -= factor * at(col, j);
    }
  }
  Scalar det = sign;
  for (int i = 0; i < n; ++i) det *= at(i, i);
  return det;
}

ComplexMatrix amplitude_submatrix(const ComplexMatrix& u, const OccupationVector& input,
                                  const OccupationVector& output) {
  require_square(u, "amplitude_submatrix");
  if (input.num_modes() != u.rows() || output.num_modes() != u.rows()) {
    throw std::invalid_argument("occupation length does not match unitary dimension");
  }
  if (input.total() != output.total()) {
    throw std::invalid_argument("input and output particle totals differ");
  }
  std::vector<int> row_modes;
  std::vector<int> col_modes;
  row_modes.reserve(input.total());
  col_modes.reserve(output.total());
  for (int n = 0; n < input.num_modes(); ++n) {
    row_modes.insert(row_modes.end(), input.count(n), n);
  }
  for (int m = 0; m < output.num_modes(); ++m) {
    col_modes.insert(col_modes.end(), output.count(m), m);
  }
  const int size = static_cast<int>(row_modes.size());
  ComplexMatrix sub(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) sub(i, j) = u(row_modes[i], col_modes[j]);
  }
  return sub;
}

}  // namespace focksim
