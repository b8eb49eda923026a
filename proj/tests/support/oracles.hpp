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

// Independent reference implementations used to check the library. These
// deliberately avoid the code paths they verify: amplitudes come from a
// creation-operator polynomial expansion instead of permanents, stationary
// distributions from power iteration instead of a linear solve, channel fixed
// points from a Kronecker-built superoperator eigendecomposition instead of
// the matrix-unit scan.

#ifndef FOCKSIM_TESTS_ORACLES_HPP
#define FOCKSIM_TESTS_ORACLES_HPP

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "focksim/channels.hpp"
#include "focksim/fock.hpp"
#include "focksim/markov.hpp"
#include "focksim/matrix.hpp"
#include "focksim/optics.hpp"

namespace focksim::testing {

/// Output amplitudes of the basis state `input` under `u`, by expanding
/// prod_n (sum_m u(n, m) c_m^+)^{input[n]} |vac> over every assignment of the
/// created quanta to output modes. Bosons only.
FockVector::AmplitudeMap operator_polynomial_amplitudes(const ComplexMatrix& u,
                                                        const OccupationVector& input);

/// Permanent by Laplace-style expansion along the first row.
std::complex<double> permanent_expansion(const ComplexMatrix& m);

/// Determinant by cofactor expansion along the first row.
std::complex<double> determinant_cofactor(const ComplexMatrix& m);

/// Stationary distribution by plain power iteration from the uniform vector.
std::vector<double> power_iteration_steady(const TransferMatrix& t, int max_steps = 200000,
                                           double tol = 1e-13);

struct SuperopEigenReport {
  /// Count of eigenvalues within 1e-8 of 1.
  int multiplicity;
  /// Eigenvector of the eigenvalue closest to 1, reshaped, Hermitized and
  /// trace-normalized. Only meaningful when multiplicity == 1.
  Eigen::MatrixXcd fixed_density;
};

/// Fixed point of rho -> dephase(V rho V^dag, basis) via the Kronecker-product
/// superoperator sum_k conj(K_k) (x) K_k with K_k the dephasing Kraus
/// operators times the step.
SuperopEigenReport superoperator_eigen_fixed_point(const SingleParticleUnitary& step,
                                                   const SingleParticleUnitary& basis);

/// Haar-distributed unitary (Ginibre + QR with phase fixing).
SingleParticleUnitary random_unitary(int dim, std::mt19937& rng);

FockVector random_state(ParticleKind kind, int num_modes, int num_particles, std::mt19937& rng);

DensityMatrix random_density(int dim, std::mt19937& rng);

}  // namespace focksim::testing

#endif
