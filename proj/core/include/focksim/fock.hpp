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

#ifndef FOCKSIM_FOCK_HPP
#define FOCKSIM_FOCK_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace focksim {

/// Statistics of the simulated particles. Fermionic occupation numbers are
/// capped at 1 everywhere; bosonic ones are unbounded.
enum class ParticleKind { Boson, Fermion };

std::string to_string(ParticleKind kind);
ParticleKind particle_kind_from_string(const std::string& name);

/// Norm drift allowed on any normalized state.
inline constexpr double kNormTolerance = 1e-10;
/// Amplitudes below this magnitude are dropped from stored states.
inline constexpr double kAmplitudePruneThreshold = 1e-14;

/// Mode-occupation list: entry k is the number of particles in mode k.
/// Immutable after construction.
class OccupationVector {
 public:
  /// Requires at least one mode and non-negative counts.
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts);

  int num_modes() const { return static_cast<int>(counts_.size()); }
  /// Total particle number.
  int total() const { return total_; }
  int count(int mode) const;
  const std::vector<int>& counts() const { return counts_; }
  /// True if every occupation number is 0 or 1.
  bool pauli_compatible() const;

  bool operator==(const OccupationVector& other) const = default;

  /// Renders as "(n0,n1,...)".
  std::string to_string() const;

 private:
  std::vector<int> counts_;
  int total_;
};

/// Canonical basis order: lexicographically descending counts. Every basis
/// enumeration, amplitude map, and serialized term list in this library uses
/// this order, so outputs are deterministic.
struct BasisOrder {
  bool operator()(const OccupationVector& a, const OccupationVector& b) const {
    if (a.num_modes() != b.num_modes()) return a.num_modes() < b.num_modes();
    return b.counts() < a.counts();
  }
};

/// Normalized complex superposition over occupation vectors with a fixed
/// particle kind, mode count and particle number. Second-quantized, so
/// exchange (anti)symmetry is built into the representation.
///
/// Invariants: all stored occupations share num_modes and total; the norm is
/// 1 within kNormTolerance; no stored amplitude has magnitude below
/// kAmplitudePruneThreshold; fermionic occupations never exceed 1.
class FockVector {
 public:
  using AmplitudeMap = std::map<OccupationVector, std::complex<double>, BasisOrder>;

  /// Terms must already be normalized within kNormTolerance.
  FockVector(ParticleKind kind, int num_modes, AmplitudeMap terms);

  /// Unit amplitude on a single occupation vector.
  static FockVector basis_state(ParticleKind kind, OccupationVector occupation);

  /// Rescales the given terms to unit norm. Throws on zero norm.
  static FockVector normalized(ParticleKind kind, int num_modes, AmplitudeMap terms);

  ParticleKind kind() const { return kind_; }
  int num_modes() const { return num_modes_; }
  int num_particles() const { return num_particles_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  /// Amplitude of the given occupation, 0 if absent.
  std::complex<double> amplitude(const OccupationVector& occupation) const;
  double norm() const;

 private:
  FockVector() = default;

  ParticleKind kind_ = ParticleKind::Boson;
  int num_modes_ = 0;
  int num_particles_ = 0;
  AmplitudeMap amplitudes_;
};

/// All occupation vectors with the given mode and particle count, in
/// descending lexicographic order. Sizes are C(N+M-1, M) for bosons and
/// C(N, M) for fermions.
std::vector<OccupationVector> enumerate_basis(ParticleKind kind, int num_modes,
                                              int num_particles);

/// Basis state with one particle created in each listed mode (repeats allowed
/// for bosons). Mode order is irrelevant: the occupation vector is all that
/// is kept. Duplicate fermion modes throw, surfacing Pauli exclusion at
/// construction time.
FockVector fock_from_single_modes(ParticleKind kind, int num_modes,
                                  const std::vector<int>& occupied_modes);

/// <x|y>, conjugate-linear in the first argument.
std::complex<double> inner_product(const FockVector& x, const FockVector& y);

}  // namespace focksim

#endif
