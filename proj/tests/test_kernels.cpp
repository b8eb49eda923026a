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

#include <chrono>
#include <complex>
#include <random>

#include <doctest.h>

#include "checks.hpp"
#include "oracles.hpp"

using namespace focksim;
using focksim::testing::complex_close;
using Scalar = std::complex<double>;

namespace {

ComplexMatrix random_complex(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Scalar(gauss(rng), gauss(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("permanent of small closed forms") {
  CHECK(complex_close(permanent(ComplexMatrix::identity(3)), 1.0));

  ComplexMatrix ones(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) ones(i, j) = 1.0;
  }
  CHECK(complex_close(permanent(ones), 6.0));

  const Scalar a(1.0, 2.0), b(-0.5, 0.25), c(2.0, -1.0), d(0.0, 3.0);
  CHECK(complex_close(permanent(ComplexMatrix{{a, b}, {c, d}}), a * d + b * c));

  CHECK(complex_close(permanent(ComplexMatrix(0, 0)), 1.0));
  CHECK(complex_close(permanent(ComplexMatrix{{Scalar(2.0, 1.0)}}), Scalar(2.0, 1.0)));
}

TEST_CASE("ryser, naive and expansion permanents agree on random matrices") {
  std::mt19937 rng(101);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const ComplexMatrix m = random_complex(n, rng);
      const Scalar expansion = focksim::testing::permanent_expansion(m);
      const Scalar ryser = permanent_ryser(m);
      const Scalar naive = permanent_naive(m);
      const double scale = std::max(1.0, std::abs(expansion));
      CHECK(std::abs(ryser - expansion) / scale < 1e-10);
      CHECK(std::abs(naive - expansion) / scale < 1e-10);
      CHECK(std::abs(permanent(m) - expansion) / scale < 1e-10);
    }
  }
}

TEST_CASE("permanent is multilinear in rows") {
  std::mt19937 rng(102);
  const Scalar factor(0.5, -2.0);
  for (int n : {3, 5}) {
    ComplexMatrix m = random_complex(n, rng);
    const Scalar base = permanent(m);
    for (int j = 0; j < n; ++j) m(1, j) *= factor;
    CHECK(std::abs(permanent(m) - factor * base) <= 1e-10 * std::abs(base * factor));
  }
}

TEST_CASE("permanent rejects bad inputs") {
  CHECK_THROWS_AS(permanent(ComplexMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(permanent(ComplexMatrix(21, 21)), std::invalid_argument);
  CHECK_THROWS_AS(permanent_ryser(ComplexMatrix(21, 21)), std::invalid_argument);
}

TEST_CASE("permanent at n = 16 stays under the one-second budget") {
  std::mt19937 rng(103);
  const ComplexMatrix m = random_complex(16, rng);
  const auto start = std::chrono::steady_clock::now();
  const Scalar value = permanent(m);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(std::abs(value) > 0.0);
  CHECK(std::chrono::duration<double>(elapsed).count() < 1.0);
}

TEST_CASE("determinant of small closed forms") {
  CHECK(complex_close(determinant(ComplexMatrix::identity(3)), 1.0));

  const Scalar a(1.0, 2.0), b(-0.5, 0.25), c(2.0, -1.0), d(0.0, 3.0);
  CHECK(complex_close(determinant(ComplexMatrix{{a, b}, {c, d}}), a * d - b * c));

  // Repeated rows: the Pauli-exclusion analog.
  ComplexMatrix repeated{{a, b, c}, {d, a, b}, {a, b, c}};
  CHECK(std::abs(determinant(repeated)) < 1e-12);

  CHECK(complex_close(determinant(ComplexMatrix(0, 0)), 1.0));
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937 rng(104);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix m = random_complex(n, rng);
      const Scalar expected = focksim::testing::determinant_cofactor(m);
      CHECK(std::abs(determinant(m) - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("amplitude submatrix repeats rows and columns by occupancy") {
  std::mt19937 rng(105);
  const ComplexMatrix u = random_complex(2, rng);

  const ComplexMatrix distinct =
      amplitude_submatrix(u, OccupationVector({1, 1}), OccupationVector({2, 0}));
  CHECK(distinct.rows() == 2);
  CHECK(distinct(0, 0) == u(0, 0));
  CHECK(distinct(0, 1) == u(0, 0));
  CHECK(distinct(1, 0) == u(1, 0));
  CHECK(distinct(1, 1) == u(1, 0));

  const ComplexMatrix bunched =
      amplitude_submatrix(u, OccupationVector({2, 0}), OccupationVector({2, 0}));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(bunched(i, j) == u(0, 0));
  }

  const ComplexMatrix picked = amplitude_submatrix(
      ComplexMatrix::identity(3), OccupationVector({1, 0, 1}), OccupationVector({1, 0, 1}));
  CHECK(picked.max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("amplitude submatrix validates totals and dimensions") {
  const ComplexMatrix u = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(amplitude_submatrix(u, OccupationVector({1, 1}), OccupationVector({1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(amplitude_submatrix(u, OccupationVector({1, 1, 0}), OccupationVector({1, 1})),
                  std::invalid_argument);
}
