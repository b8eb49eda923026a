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

#include "focksim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "checks.hpp"
#include "focksim/errors.hpp"
#include "oracles.hpp"

using namespace focksim;
using focksim::testing::binomial;
using focksim::testing::complex_close;

TEST_CASE("occupation vector basics") {
  OccupationVector occ{2, 0, 1};
  CHECK(occ.num_modes() == 3);
  CHECK(occ.total() == 3);
  CHECK(occ.count(0) == 2);
  CHECK(occ.to_string() == "(2,0,1)");
  CHECK(occ == OccupationVector({2, 0, 1}));
  CHECK(occ != OccupationVector({2, 1, 0}));
  CHECK_THROWS_AS(OccupationVector{std::vector<int>{}}, std::invalid_argument);
  CHECK_THROWS_AS(OccupationVector({1, -1}), std::invalid_argument);
}

TEST_CASE("two-mode boson basis enumeration") {
  const auto basis = enumerate_basis(ParticleKind::Boson, 2, 2);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == OccupationVector({2, 0}));
  CHECK(basis[1] == OccupationVector({1, 1}));
  CHECK(basis[2] == OccupationVector({0, 2}));
}

TEST_CASE("Pauli exclusion leaves one two-mode fermion state") {
  const auto basis = enumerate_basis(ParticleKind::Fermion, 2, 2);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == OccupationVector({1, 1}));
}

TEST_CASE("three-mode two-boson basis, descending lexicographic") {
  const auto basis = enumerate_basis(ParticleKind::Boson, 3, 2);
  REQUIRE(basis.size() == 6);  // C(4, 2)
  const std::vector<OccupationVector> expected = {
      OccupationVector({2, 0, 0}), OccupationVector({1, 1, 0}), OccupationVector({1, 0, 1}),
      OccupationVector({0, 2, 0}), OccupationVector({0, 1, 1}), OccupationVector({0, 0, 2})};
  CHECK(basis == expected);
}

TEST_CASE("basis sizes match binomial counts up to six modes and particles") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      CHECK(enumerate_basis(ParticleKind::Boson, n, m).size() ==
            static_cast<size_t>(binomial(n + m - 1, m)));
      if (m <= n) {
        CHECK(enumerate_basis(ParticleKind::Fermion, n, m).size() ==
              static_cast<size_t>(binomial(n, m)));
      }
    }
  }
}

TEST_CASE("basis order is strictly descending and fermion entries stay binary") {
  BasisOrder before;
  for (ParticleKind kind : {ParticleKind::Boson, ParticleKind::Fermion}) {
    const auto basis = enumerate_basis(kind, 4, 3);
    for (size_t i = 0; i + 1 < basis.size(); ++i) {
      CHECK(before(basis[i], basis[i + 1]));
    }
    if (kind == ParticleKind::Fermion) {
      for (const auto& occ : basis) CHECK(occ.pauli_compatible());
    }
  }
}

TEST_CASE("fermion count above mode count is rejected") {
  CHECK_THROWS_AS(enumerate_basis(ParticleKind::Fermion, 2, 3), std::invalid_argument);
}

TEST_CASE("single-mode construction produces basis states") {
  const FockVector both = fock_from_single_modes(ParticleKind::Boson, 2, {0, 1});
  CHECK(complex_close(both.amplitude(OccupationVector({1, 1})), 1.0));
  CHECK(both.num_particles() == 2);

  const FockVector bunched = fock_from_single_modes(ParticleKind::Boson, 2, {0, 0});
  CHECK(complex_close(bunched.amplitude(OccupationVector({2, 0})), 1.0));

  const FockVector vacuum = fock_from_single_modes(ParticleKind::Boson, 2, {});
  CHECK(vacuum.num_particles() == 0);
  CHECK(complex_close(vacuum.amplitude(OccupationVector({0, 0})), 1.0));
}

TEST_CASE("duplicate fermion modes violate Pauli exclusion at construction") {
  CHECK_THROWS_AS(fock_from_single_modes(ParticleKind::Fermion, 2, {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fock_from_single_modes(ParticleKind::Fermion, 3, {1, 2, 1}),
                  std::invalid_argument);
}

TEST_CASE("boson mode order is irrelevant") {
  std::mt19937 rng(11);
  std::vector<int> modes = {0, 2, 2, 1};
  const FockVector reference = fock_from_single_modes(ParticleKind::Boson, 3, modes);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(modes.begin(), modes.end(), rng);
    const FockVector shuffled = fock_from_single_modes(ParticleKind::Boson, 3, modes);
    CHECK(shuffled.amplitudes() == reference.amplitudes());
  }
}

TEST_CASE("inner product orthogonality and normalization") {
  const FockVector a = FockVector::basis_state(ParticleKind::Boson, OccupationVector({2, 0}));
  const FockVector b = FockVector::basis_state(ParticleKind::Boson, OccupationVector({0, 2}));
  CHECK(complex_close(inner_product(a, b), 0.0));
  CHECK(complex_close(inner_product(a, a), 1.0));

  FockVector::AmplitudeMap terms;
  terms.emplace(OccupationVector({2, 0}), 1.0);
  terms.emplace(OccupationVector({0, 2}), 1.0);
  const FockVector cat = FockVector::normalized(ParticleKind::Boson, 2, std::move(terms));
  CHECK(complex_close(inner_product(cat, a), 1.0 / std::sqrt(2.0)));
}

TEST_CASE("inner product is conjugate-linear in the first argument") {
  const std::complex<double> i(0.0, 1.0);
  FockVector::AmplitudeMap terms;
  terms.emplace(OccupationVector({1, 1}), i / std::sqrt(2.0));
  terms.emplace(OccupationVector({2, 0}), 1.0 / std::sqrt(2.0));
  const FockVector x(ParticleKind::Boson, 2, std::move(terms));
  const FockVector y = FockVector::basis_state(ParticleKind::Boson, OccupationVector({1, 1}));
  CHECK(complex_close(inner_product(x, y), std::conj(i / std::sqrt(2.0))));
  CHECK(complex_close(inner_product(y, x), i / std::sqrt(2.0)));
}

TEST_CASE("inner product rejects mismatched spaces") {
  const FockVector a = FockVector::basis_state(ParticleKind::Boson, OccupationVector({1, 1}));
  const FockVector b = FockVector::basis_state(ParticleKind::Boson, OccupationVector({1, 1, 0}));
  const FockVector c = FockVector::basis_state(ParticleKind::Fermion, OccupationVector({1, 1}));
  const FockVector d = FockVector::basis_state(ParticleKind::Boson, OccupationVector({1, 0}));
  CHECK_THROWS_AS(inner_product(a, b), std::invalid_argument);
  CHECK_THROWS_AS(inner_product(a, c), std::invalid_argument);
  CHECK_THROWS_AS(inner_product(a, d), std::invalid_argument);
}

TEST_CASE("constructor enforces the unit-norm contract") {
  FockVector::AmplitudeMap unnormalized;
  unnormalized.emplace(OccupationVector({1, 0}), 0.5);
  CHECK_THROWS_AS(FockVector(ParticleKind::Boson, 2, unnormalized), NumericsError);

  FockVector::AmplitudeMap mixed_totals;
  mixed_totals.emplace(OccupationVector({1, 0}), 1.0);
  mixed_totals.emplace(OccupationVector({1, 1}), 1.0);
  CHECK_THROWS_AS(FockVector(ParticleKind::Boson, 2, mixed_totals), std::invalid_argument);

  FockVector::AmplitudeMap doubly;
  doubly.emplace(OccupationVector({2, 0}), 1.0);
  CHECK_THROWS_AS(FockVector(ParticleKind::Fermion, 2, doubly), std::invalid_argument);
}

TEST_CASE("tiny amplitudes are pruned") {
  FockVector::AmplitudeMap terms;
  terms.emplace(OccupationVector({2, 0}), 1.0);
  terms.emplace(OccupationVector({0, 2}), 1e-15);
  const FockVector state(ParticleKind::Boson, 2, std::move(terms));
  CHECK(state.amplitudes().size() == 1);
  CHECK(state.amplitude(OccupationVector({0, 2})) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("random states are normalized") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const FockVector psi = focksim::testing::random_state(ParticleKind::Boson, n, m, rng);
      CHECK(std::abs(psi.norm() - 1.0) < kNormTolerance);
    }
  }
}
