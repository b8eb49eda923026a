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

#ifndef FOCKSIM_MARKOV_HPP
#define FOCKSIM_MARKOV_HPP

#include <string>
#include <vector>

#include "focksim/fock.hpp"
#include "focksim/optics.hpp"

namespace focksim {

/// Column sums and probability normalizations must hold within this bound.
inline constexpr double kStochasticTolerance = 1e-12;
/// An eigenvalue-1 space of a stochastic map is called degenerate when the
/// numerical rank gap falls below this threshold.
inline constexpr double kUniquenessTolerance = 1e-10;

/// Named probability distribution over labeled outcomes. Probabilities are
/// non-negative and sum to 1 within kStochasticTolerance.
class ProbabilityVector {
 public:
  ProbabilityVector(std::vector<std::string> labels, std::vector<double> probs);

  int size() const { return static_cast<int>(probs_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& probs() const { return probs_; }
  double prob(int i) const { return probs_.at(i); }

  /// L1 distance; labels must match.
  double l1_distance(const ProbabilityVector& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

/// Column-stochastic map over labeled outcome classes: entry (i, j) is the
/// probability of landing in class i after one cycle started from class j.
class TransferMatrix {
 public:
  /// Entries row-major, each column summing to 1 within kStochasticTolerance.
  TransferMatrix(std::vector<std::string> labels, std::vector<double> entries);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  double entry(int i, int j) const { return entries_.at(static_cast<size_t>(i) * labels_.size() + j); }
  const std::vector<double>& entries() const { return entries_; }

  /// Matrix-vector action on a distribution over the same labels.
  ProbabilityVector apply(const ProbabilityVector& p) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;
};

/// Partition of a fixed-particle-number basis into labeled outcome classes.
/// Classes must be non-empty, pairwise disjoint, and jointly cover the basis.
class CoarseGraining {
 public:
  struct OutcomeClass {
    std::string label;
    std::vector<OccupationVector> states;
  };

  CoarseGraining(std::string name, ParticleKind kind, int num_modes, int num_particles,
                 std::vector<OutcomeClass> classes);

  /// The same-port / different-port dichotomy for two bosons in N modes.
  /// Class order is (same, diff).
  static CoarseGraining same_vs_different(int num_modes);

  const std::string& name() const { return name_; }
  ParticleKind kind() const { return kind_; }
  int num_modes() const { return num_modes_; }
  int num_particles() const { return num_particles_; }
  const std::vector<OutcomeClass>& classes() const { return classes_; }
  std::vector<std::string> labels() const;
  /// Index of the class containing the given occupation.
  int class_index_of(const OccupationVector& occupation) const;

 private:
  std::string name_;
  ParticleKind kind_;
  int num_modes_;
  int num_particles_;
  std::vector<OutcomeClass> classes_;
};

/// Born-rule readout of a normalized state: probability |amplitude|^2 for
/// every basis occupation (zeros included), in basis order. The vector is
/// renormalized by its total, so it sums to 1 exactly up to rounding.
ProbabilityVector measurement_collapse(const FockVector& state);

/// Coarse-grained transfer matrix of one unitary-then-measure cycle: column j
/// is the outcome-class distribution after one cycle started from the uniform
/// mixture over class j.
TransferMatrix derive_transfer_matrix(const SingleParticleUnitary& u,
                                      const CoarseGraining& grading);

/// The unique stationary distribution, from the nullspace of (T - I).
/// Residual ||T pi - pi||_inf stays below kStochasticTolerance. Throws
/// NonUniqueSteadyStateError when the eigenvalue-1 space is degenerate within
/// kUniquenessTolerance.
ProbabilityVector steady_state(const TransferMatrix& t);

/// T^steps, steps >= 0.
TransferMatrix iterate_map(const TransferMatrix& t, int steps);

/// Smallest k with ||T^k initial - steady||_1 <= epsilon.
int mixing_profile(const TransferMatrix& t, const ProbabilityVector& initial, double epsilon);

}  // namespace focksim

#endif
