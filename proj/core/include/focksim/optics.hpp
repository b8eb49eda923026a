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

#ifndef FOCKSIM_OPTICS_HPP
#define FOCKSIM_OPTICS_HPP

#include <complex>
#include <map>
#include <vector>

#include "focksim/fock.hpp"
#include "focksim/kernels.hpp"
#include "focksim/matrix.hpp"

namespace focksim {

/// Tolerance of the elementwise U U^dagger = I check.
inline constexpr double kUnitarityTolerance = 1e-10;

/// One-particle mode map. Element (n, m) is the amplitude for a particle in
/// mode n to land in mode m, so a single-particle state evolves as
/// |n> -> sum_m element(n, m) |m>.
class SingleParticleUnitary {
 public:
  /// Requires a square matrix, unitary within kUnitarityTolerance.
  explicit SingleParticleUnitary(ComplexMatrix matrix);

  int dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::complex<double> element(int from_mode, int to_mode) const {
    return matrix_(from_mode, to_mode);
  }

 private:
  ComplexMatrix matrix_;
};

/// The unitary equivalent to applying `first`, then `second`.
SingleParticleUnitary compose(const SingleParticleUnitary& second,
                              const SingleParticleUnitary& first);

/// Beamsplitter amplitudes. Requires t^2 + r^2 = 1 within 1e-12.
class BeamsplitterSpec {
 public:
  BeamsplitterSpec(double transmission, double reflection);

  static BeamsplitterSpec fifty_fifty();
  /// reflection = sqrt(1 - t^2).
  static BeamsplitterSpec from_transmission(double transmission);

  double transmission() const { return transmission_; }
  double reflection() const { return reflection_; }

 private:
  double transmission_;
  double reflection_;
};

/// Two-mode beamsplitter [[t, i r], [i r, t]]: the reflected amplitude
/// carries the phase i, the transmitted one is real.
SingleParticleUnitary beamsplitter(const BeamsplitterSpec& spec);

/// Discrete-Fourier mode mixer, element (n, m) = exp(2 pi i n m / N) / sqrt(N).
/// Every input mode couples to every output mode with equal weight.
SingleParticleUnitary fourier_unitary(int num_modes);

/// Diagonal phase unitary diag(exp(i phase_0), ..., exp(i phase_{N-1})).
SingleParticleUnitary phase_unitary(const std::vector<double>& phases);

/// True when the amplitude vanishes identically by Pauli exclusion, i.e. the
/// particles are fermions and some occupation exceeds 1.
bool pauli_amplitude_is_zero(ParticleKind kind, const OccupationVector& input,
                             const OccupationVector& output);

/// Many-particle transition amplitude between occupation vectors.
///
/// Bosons:   per(amplitude_submatrix) / sqrt(prod_n input[n]! prod_m output[m]!)
/// Fermions: det(amplitude_submatrix), rows/columns in ascending mode order
///           (creation operators applied in ascending mode order fix the sign).
///
/// Fermionic occupations above 1 are a precondition error here; use
/// transition_amplitude_or_zero for the total function that returns 0 instead.
std::complex<double> transition_amplitude(const SingleParticleUnitary& u,
                                          const OccupationVector& input,
                                          const OccupationVector& output,
                                          ParticleKind kind);

/// Same as transition_amplitude, but returns exactly 0 where Pauli exclusion
/// forbids the transition instead of throwing.
std::complex<double> transition_amplitude_or_zero(const SingleParticleUnitary& u,
                                                  const OccupationVector& input,
                                                  const OccupationVector& output,
                                                  ParticleKind kind);

/// Applies the lifted unitary to a many-particle state: output amplitudes are
/// sums of input amplitudes weighted by transition_amplitude. Norm-preserving
/// within kNormTolerance.
FockVector evolve(const SingleParticleUnitary& u, const FockVector& state);

/// Ratio of the quantum probability that M bosons launched from M distinct
/// modes all arrive in target_mode to the classical product of one-particle
/// probabilities. Equals M! whenever the classical probability is nonzero.
/// Throws on repeated input modes and on vanishing classical probability
/// (undefined ratio).
double bunching_enhancement(const SingleParticleUnitary& u,
                            const std::vector<int>& distinct_input_modes, int target_mode);

/// Born probabilities over a full fixed-particle-number basis, in basis order.
using OutcomeDistribution = std::map<OccupationVector, double, BasisOrder>;

/// Output statistics of a two-mode input state sent through a beamsplitter:
/// probability for every two-mode occupation with the same particle total.
/// Probabilities sum to 1 within kNormTolerance.
OutcomeDistribution hom_distribution(const BeamsplitterSpec& spec,
                                     const OccupationVector& input);

}  // namespace focksim

#endif
