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

#ifndef FOCKSIM_CHANNELS_HPP
#define FOCKSIM_CHANNELS_HPP

#include <complex>
#include <vector>

#include "focksim/matrix.hpp"
#include "focksim/optics.hpp"

namespace focksim {

/// Hermiticity/trace tolerance of density matrices.
inline constexpr double kDensityTolerance = 1e-10;
/// Every element of one basis must overlap every element of the other with at
/// least this magnitude for the two bases to count as complementary.
inline constexpr double kOverlapThreshold = 1e-8;

/// Mixed state: Hermitian within kDensityTolerance, trace 1 within
/// kDensityTolerance, eigenvalues >= -kDensityTolerance.
class DensityMatrix {
 public:
  /// Row-major entries.
  DensityMatrix(int dim, std::vector<std::complex<double>> entries);

  /// |psi><psi| for a normalized state vector.
  static DensityMatrix pure(const std::vector<std::complex<double>>& state);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return dim_; }
  std::complex<double> entry(int i, int j) const {
    return entries_[static_cast<size_t>(i) * dim_ + j];
  }
  const std::vector<std::complex<double>>& entries() const { return entries_; }
  std::vector<double> diagonal() const;
  /// Tr(rho^2).
  double purity() const;
  /// Frobenius distance to another state of the same dimension.
  double frobenius_distance(const DensityMatrix& other) const;

 private:
  int dim_;
  std::vector<std::complex<double>> entries_;
};

/// Irreversibly wipes coherences in the given basis: transforms rho into the
/// basis, zeroes the off-diagonal entries, transforms back. Basis state k is
/// the image of mode k under `basis` (row k of the stored matrix). Trace is
/// preserved and purity never increases.
DensityMatrix dephase(const DensityMatrix& rho, const SingleParticleUnitary& basis);

/// One cycle of the competing evolution: the Hamiltonian step (a unitary
/// diagonal in the computational basis, which plays the role of the energy
/// eigenbasis), followed by dephasing in the complementary basis. Trace- and
/// positivity-preserving.
DensityMatrix apply_competing_channel(const DensityMatrix& rho,
                                      const SingleParticleUnitary& hamiltonian_step,
                                      const SingleParticleUnitary& complementary_basis);

struct FixedPointReport {
  DensityMatrix fixed_point;
  /// Dimension of the channel's eigenvalue-1 space within kUniquenessTolerance.
  int eigenvalue_one_multiplicity;
  /// Whether every energy eigenstate overlaps every complementary basis state
  /// with magnitude above kOverlapThreshold. When violated the fixed point is
  /// still computed, but uniqueness is not guaranteed.
  bool overlap_condition_holds;
  /// Frobenius distance of the returned fixed point from I/dim.
  double distance_to_maximally_mixed;
};

/// Fixed-point analysis of the competing channel
///   rho -> dephase(V rho V^dagger, complementary_basis).
///
/// Builds the channel's matrix representation, extracts the eigenvalue-1
/// space, and returns the fixed point in it closest to I/dim together with
/// the space's dimension. With the overlap condition satisfied and
/// non-degenerate phases in V the fixed point is I/dim (the micro-canonical
/// ensemble) and the multiplicity is 1. The energy eigenbasis used for the
/// overlap check is the eigenbasis of V: the computational basis when V is
/// diagonal, a numerically computed one otherwise.
FixedPointReport competing_channel_fixed_point(const SingleParticleUnitary& hamiltonian_step,
                                               const SingleParticleUnitary& complementary_basis);

}  // namespace focksim

#endif
