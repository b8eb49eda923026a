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

#include "focksim/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "focksim/errors.hpp"

namespace focksim {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double occupation_factorial_product(const OccupationVector& occ) {
  double f = 1.0;
  for (int c : occ.counts()) f *= factorial(c);
  return f;
}

}  // namespace

SingleParticleUnitary::SingleParticleUnitary(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() < 1) {
    throw std::invalid_argument("single-particle unitary must be square and non-empty");
  }
  if (!is_unitary_within(matrix_, kUnitarityTolerance)) {
    throw NumericsError("matrix fails the unitarity check");
  }
}

SingleParticleUnitary compose(const SingleParticleUnitary& second,
                              const SingleParticleUnitary& first) {
  if (second.dim() != first.dim()) throw std::invalid_argument("dimension mismatch");
  // Element (n, k) of the product sums first-hop amplitudes n -> m against
  // second-hop amplitudes m -> k.
  return SingleParticleUnitary(first.matrix() * second.matrix());
}

BeamsplitterSpec::BeamsplitterSpec(double transmission, double reflection)
    : transmission_(transmission), reflection_(reflection) {
  if (transmission < 0.0 || transmission > 1.0 || reflection < 0.0 || reflection > 1.0) {
    throw std::invalid_argument("beamsplitter amplitudes must lie in [0, 1]");
  }
  if (std::abs(transmission * transmission + reflection * reflection - 1.0) > 1e-12) {
    throw std::invalid_argument("beamsplitter amplitudes must satisfy t^2 + r^2 = 1");
  }
}

BeamsplitterSpec BeamsplitterSpec::fifty_fifty() {
  const double v = std::sqrt(0.5);
  return BeamsplitterSpec(v, v);
}

BeamsplitterSpec BeamsplitterSpec::from_transmission(double transmission) {
  if (transmission < 0.0 || transmission > 1.0) {
    throw std::invalid_argument("transmission must lie in [0, 1]");
  }
  return BeamsplitterSpec(transmission, std::sqrt(1.0 - transmission * transmission));
}

SingleParticleUnitary beamsplitter(const BeamsplitterSpec& spec) {
  const std::complex<double> t(spec.transmission(), 0.0);
  const std::complex<double> ir(0.0, spec.reflection());
  return SingleParticleUnitary(ComplexMatrix{{t, ir}, {ir, t}});
}

SingleParticleUnitary fourier_unitary(int num_modes) {
  if (num_modes < 1) throw std::invalid_argument("need at least one mode");
  const double scale = 1.0 / std::sqrt(static_cast<double>(num_modes));
  ComplexMatrix m(num_modes, num_modes);
  for (int n = 0; n < num_modes; ++n) {
    for (int k = 0; k < num_modes; ++k) {
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(n) * k / num_modes;
      m(n, k) = scale * std::complex<double>(std::cos(angle), std::sin(angle));
    }
  }
  return SingleParticleUnitary(std::move(m));
}

SingleParticleUnitary phase_unitary(const std::vector<double>& phases) {
  if (phases.empty()) throw std::invalid_argument("need at least one phase");
  const int n = static_cast<int>(phases.size());
  ComplexMatrix m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = std::complex<double>(std::cos(phases[k]), std::sin(phases[k]));
  return SingleParticleUnitary(std::move(m));
}

bool pauli_amplitude_is_zero(ParticleKind kind, const OccupationVector& input,
                             const OccupationVector& output) {
  if (kind != ParticleKind::Fermion) return false;
  return !input.pauli_compatible() || !output.pauli_compatible();
}

std::complex<double> transition_amplitude(const SingleParticleUnitary& u,
                                          const OccupationVector& input,
                                          const OccupationVector& output, ParticleKind kind) {
  if (input.num_modes() != u.dim() || output.num_modes() != u.dim()) {
    throw std::invalid_argument("occupation length does not match unitary dimension");
  }
  if (input.total() != output.total()) {
    throw std::invalid_argument("input and output particle totals differ");
  }
  if (pauli_amplitude_is_zero(kind, input, output)) {
    throw std::invalid_argument("fermionic occupation above 1 (amplitude is identically 0); "
                                "use transition_amplitude_or_zero for the total query");
  }
  const ComplexMatrix sub = amplitude_submatrix(u.matrix(), input, output);
  if (kind == ParticleKind::Fermion) return determinant(sub);
  const double norm =
      std::sqrt(occupation_factorial_product(input) * occupation_factorial_product(output));
  return permanent(sub) / norm;
}

std::complex<double> transition_amplitude_or_zero(const SingleParticleUnitary& u,
                                                  const OccupationVector& input,
                                                  const OccupationVector& output,
                                                  ParticleKind kind) {
  if (pauli_amplitude_is_zero(kind, input, output)) return {0.0, 0.0};
  return transition_amplitude(u, input, output, kind);
}

FockVector evolve(const SingleParticleUnitary& u, const FockVector& state) {
  if (state.num_modes() != u.dim()) {
    throw std::invalid_argument("state mode count does not match unitary dimension");
  }
  const std::vector<OccupationVector> basis =
      enumerate_basis(state.kind(), state.num_modes(), state.num_particles());
  FockVector::AmplitudeMap out;
  for (const OccupationVector& target : basis) {
    std::complex<double> amp(0.0, 0.0);
    for (const auto& [source, weight] : state.amplitudes()) {
      amp += weight * transition_amplitude(u, source, target, state.kind());
    }
    if (std::abs(amp) >= kAmplitudePruneThreshold) out.emplace(target, amp);
  }
  // The FockVector constructor re-checks the norm, so a non-unitary lift
  // cannot slip through silently.
  return FockVector(state.kind(), state.num_modes(), std::move(out));
}

double bunching_enhancement(const SingleParticleUnitary& u,
                            const std::vector<int>& distinct_input_modes, int target_mode) {
  if (distinct_input_modes.empty()) throw std::invalid_argument("need at least one input mode");
  if (target_mode < 0 || target_mode >= u.dim()) {
    throw std::invalid_argument("target mode out of range");
  }
  std::vector<int> counts(u.dim(), 0);
  for (int mode : distinct_input_modes) {
    if (mode < 0 || mode >= u.dim()) throw std::invalid_argument("input mode out of range");
    if (counts[mode]++ > 0) {
      throw std::invalid_argument("input modes must be distinct (the M! rule applies to bosons "
                                  "starting in M different states)");
    }
  }
  const int m = static_cast<int>(distinct_input_modes.size());

  double classical = 1.0;
  for (int mode : distinct_input_modes) classical *= std::norm(u.element(mode, target_mode));
  if (classical == 0.0) {
    throw NumericsError("classical probability vanishes; enhancement ratio undefined");
  }

  std::vector<int> bunched(u.dim(), 0);
  bunched[target_mode] = m;
  const std::complex<double> amp = transition_amplitude(
      u, OccupationVector(counts), OccupationVector(bunched), ParticleKind::Boson);
  return std::norm(amp) / classical;
}

OutcomeDistribution hom_distribution(const BeamsplitterSpec& spec,
                                     const OccupationVector& input) {
  if (input.num_modes() != 2) throw std::invalid_argument("beamsplitter inputs have two modes");
  const SingleParticleUnitary u = beamsplitter(spec);
  const FockVector out = evolve(u, FockVector::basis_state(ParticleKind::Boson, input));
  OutcomeDistribution dist;
  for (const OccupationVector& occ : enumerate_basis(ParticleKind::Boson, 2, input.total())) {
    dist.emplace(occ, std::norm(out.amplitude(occ)));
  }
  return dist;
}

}  // namespace focksim
