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

#include "focksim/markov.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "focksim/errors.hpp"

namespace focksim {

namespace {

constexpr int kMaxMixingSteps = 1'000'000;

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.empty() || labels_.size() != probs_.size()) {
    throw std::invalid_argument("labels and probabilities must match and be non-empty");
  }
  double sum = 0.0;
  for (double& p : probs_) {
    if (p < -kStochasticTolerance) {
      throw std::invalid_argument("negative probability");
    }
    p = std::max(p, 0.0);  // clamp rounding noise
    sum += p;
  }
  if (std::abs(sum - 1.0) > kStochasticTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

double ProbabilityVector::l1_distance(const ProbabilityVector& other) const {
  if (labels_ != other.labels_) throw std::invalid_argument("label mismatch");
  double d = 0.0;
  for (size_t i = 0; i < probs_.size(); ++i) d += std::abs(probs_[i] - other.probs_[i]);
  return d;
}

TransferMatrix::TransferMatrix(std::vector<std::string> labels, std::vector<double> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const size_t n = labels_.size();
  if (n == 0 || entries_.size() != n * n) {
    throw std::invalid_argument("transfer matrix must be square over its labels");
  }
  for (size_t j = 0; j < n; ++j) {
    double col_sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const double e = entries_[i * n + j];
      if (e < -kStochasticTolerance || e > 1.0 + kStochasticTolerance) {
        throw std::invalid_argument("transfer matrix entry outside [0, 1]");
      }
      col_sum += e;
    }
    if (std::abs(col_sum - 1.0) > kStochasticTolerance) {
      throw std::invalid_argument("column " + std::to_string(j) + " sums to " +
                                  std::to_string(col_sum) + ", not 1");
    }
  }
}

ProbabilityVector TransferMatrix::apply(const ProbabilityVector& p) const {
  if (p.labels() != labels_) throw std::invalid_argument("label mismatch");
  const int n = dim();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i] += entry(i, j) * p.prob(j);
  }
  return ProbabilityVector(labels_, std::move(out));
}

CoarseGraining::CoarseGraining(std::string name, ParticleKind kind, int num_modes,
                               int num_particles, std::vector<OutcomeClass> classes)
    : name_(std::move(name)),
      kind_(kind),
      num_modes_(num_modes),
      num_particles_(num_particles),
      classes_(std::move(classes)) {
  if (classes_.empty()) throw std::invalid_argument("coarse graining has no classes");
  std::map<OccupationVector, int, BasisOrder> seen;
  for (size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].states.empty()) {
      throw std::invalid_argument("outcome class '" + classes_[c].label + "' is empty");
    }
    for (const OccupationVector& occ : classes_[c].states) {
      if (!seen.emplace(occ, static_cast<int>(c)).second) {
        throw std::invalid_argument("occupation " + occ.to_string() +
                                    " appears in more than one class");
      }
    }
  }
  for (const OccupationVector& occ : enumerate_basis(kind_, num_modes_, num_particles_)) {
    if (!seen.contains(occ)) {
      throw std::invalid_argument("partition misses basis state " + occ.to_string());
    }
  }
  if (seen.size() != enumerate_basis(kind_, num_modes_, num_particles_).size()) {
    throw std::invalid_argument("partition contains states outside the basis");
  }
}

CoarseGraining CoarseGraining::same_vs_different(int num_modes) {
  std::vector<OccupationVector> same;
  std::vector<OccupationVector> diff;
  for (const OccupationVector& occ : enumerate_basis(ParticleKind::Boson, num_modes, 2)) {
    (occ.pauli_compatible() ? diff : same).push_back(occ);
  }
  return CoarseGraining("same_vs_different", ParticleKind::Boson, num_modes, 2,
                        {{"same", std::move(same)}, {"diff", std::move(diff)}});
}

std::vector<std::string> CoarseGraining::labels() const {
  std::vector<std::string> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(c.label);
  return out;
}

int CoarseGraining::class_index_of(const OccupationVector& occupation) const {
  for (size_t c = 0; c < classes_.size(); ++c) {
    for (const OccupationVector& occ : classes_[c].states) {
      if (occ == occupation) return static_cast<int>(c);
    }
  }
  throw std::invalid_argument("occupation " + occupation.to_string() + " not in any class");
}

ProbabilityVector measurement_collapse(const FockVector& state) {
  std::vector<std::string> labels;
  std::vector<double> probs;
  double total = 0.0;
  for (const OccupationVector& occ :
       enumerate_basis(state.kind(), state.num_modes(), state.num_particles())) {
    labels.push_back(occ.to_string());
    const double p = std::norm(state.amplitude(occ));
    probs.push_back(p);
    total += p;
  }
  // The state is normalized within kNormTolerance; dividing by the total
  // turns Born weights into an exact distribution.
  for (double& p : probs) p /= total;
  return ProbabilityVector(std::move(labels), std::move(probs));
}

TransferMatrix derive_transfer_matrix(const SingleParticleUnitary& u,
                                      const CoarseGraining& grading) {
  if (u.dim() != grading.num_modes()) {
    throw std::invalid_argument("unitary dimension does not match the grading's mode count");
  }
  const auto basis =
      enumerate_basis(grading.kind(), grading.num_modes(), grading.num_particles());
  const int n = static_cast<int>(grading.classes().size());
  std::vector<double> entries(static_cast<size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    const auto& start_class = grading.classes()[j];
    for (const OccupationVector& source : start_class.states) {
      for (const OccupationVector& target : basis) {
        const double p = std::norm(
            transition_amplitude_or_zero(u, source, target, grading.kind()));
        entries[static_cast<size_t>(grading.class_index_of(target)) * n + j] += p;
      }
    }
    // Uniform mixture over the starting class.
    for (int i = 0; i < n; ++i) {
      entries[static_cast<size_t>(i) * n + j] /= static_cast<double>(start_class.states.size());
    }
  }
  return TransferMatrix(grading.labels(), std::move(entries));
}

ProbabilityVector steady_state(const TransferMatrix& t) {
  const int n = t.dim();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = t.entry(i, j);
  }
  a -= Eigen::MatrixXd::Identity(n, n);

  // dim null(T - I) is the geometric multiplicity of eigenvalue 1.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  int nullity = 0;
  for (int i = 0; i < n; ++i) {
    if (sigma(i) < kUniquenessTolerance) ++nullity;
  }
  if (nullity == 0) throw NumericsError("column-stochastic matrix has no fixed vector");
  if (nullity > 1) throw NonUniqueSteadyStateError(nullity);

  Eigen::VectorXd v = svd.matrixV().col(n - 1);
  const double sum = v.sum();
  if (std::abs(sum) < kUniquenessTolerance) {
    throw NumericsError("fixed vector has vanishing total weight");
  }
  v /= sum;

  std::vector<double> pi(v.data(), v.data() + n);
  ProbabilityVector out(t.labels(), std::move(pi));

  double residual = 0.0;
  const ProbabilityVector mapped = t.apply(out);
  for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(mapped.prob(i) - out.prob(i)));
  if (residual > kStochasticTolerance) {
    throw NumericsError("steady-state residual " + std::to_string(residual) +
                        " exceeds tolerance");
  }
  return out;
}

TransferMatrix iterate_map(const TransferMatrix& t, int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  const int n = t.dim();
  auto multiply = [n](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const double v = a[static_cast<size_t>(i) * n + k];
        for (int j = 0; j < n; ++j) c[static_cast<size_t>(i) * n + j] += v * b[static_cast<size_t>(k) * n + j];
      }
    }
    return c;
  };

  std::vector<double> result(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) result[static_cast<size_t>(i) * n + i] = 1.0;
  std::vector<double> base = t.entries();
  for (int e = steps; e > 0; e >>= 1) {
    if (e & 1) result = multiply(result, base);
    if (e > 1) base = multiply(base, base);
  }
  return TransferMatrix(t.labels(), std::move(result));
}

int mixing_profile(const TransferMatrix& t, const ProbabilityVector& initial, double epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  const ProbabilityVector steady = steady_state(t);
  if (initial.labels() != t.labels()) throw std::invalid_argument("label mismatch");

  const int n = t.dim();
  std::vector<double> v = initial.probs();
  for (int k = 0; k <= kMaxMixingSteps; ++k) {
    double dist = 0.0;
    for (int i = 0; i < n; ++i) dist += std::abs(v[i] - steady.prob(i));
    if (dist <= epsilon) return k;
    std::vector<double> next(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) next[i] += t.entry(i, j) * v[j];
    }
    v = std::move(next);
  }
  throw NumericsError("distribution did not mix to the requested epsilon");
}

}  // namespace focksim
