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

#ifndef FOCKSIM_KERNELS_HPP
#define FOCKSIM_KERNELS_HPP

#include <complex>

#include "focksim/fock.hpp"
#include "focksim/matrix.hpp"

namespace focksim {

/// Largest matrix accepted by the permanent kernels. Keeps the O(2^n * n)
/// worst case at desk scale.
inline constexpr int kMaxPermanentSize = 20;

/// per(m) = sum over permutations s of prod_i m(i, s(i)).
/// Dispatches to direct expansion for n <= 4 and Ryser for larger n.
/// The 0x0 permanent is 1.
std::complex<double> permanent(const ComplexMatrix& m);

/// Direct permutation-sum expansion, O(n! * n).
std::complex<double> permanent_naive(const ComplexMatrix& m);

/// Ryser's inclusion-exclusion formula with Gray-code subset updates,
/// O(2^n * n). Summation order is fixed, so results are reproducible.
std::complex<double> permanent_ryser(const ComplexMatrix& m);

/// Determinant via partial-pivot elimination. The 0x0 determinant is 1.
std::complex<double> determinant(const ComplexMatrix& m);

/// The M x M matrix with row n of u repeated input[n] times and column m of u
/// repeated output[m] times, both in ascending mode order. Its permanent
/// (determinant) carries the bosonic (fermionic) transition amplitude between
/// the two occupations.
ComplexMatrix amplitude_submatrix(const ComplexMatrix& u, const OccupationVector& input,
                                  const OccupationVector& output);

}  // namespace focksim

#endif
