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

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "focksim/errors.hpp"

namespace focksim {

std::string to_string(ParticleKind kind) {
  return kind == ParticleKind::Boson ? "boson" : "fermion";
}

ParticleKind particle_kind_from_string(const std::string& name) {
  if (name == "boson") return ParticleKind::Boson;
  if (name == "fermion") return ParticleKind::Fermion;
  throw std::invalid_argument("unknown particle kind: " + name);
}

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) {
    throw std::invalid_argument("occupation vector needs at least one mode");
  }
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("negative occupation number");
  }
  total_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(std::vector<int>(counts)) {}

int OccupationVector::count(int mode) const {
  if (mode < 0 || mode >= num_modes()) {
    throw std::invalid_argument("mode index out of range");
  }
  return counts_[mode];
}

bool OccupationVector::pauli_compatible() const {
  for (int c : counts_) {
    if (c > 1) return false;
  }
  return true;
}

std::string OccupationVector::to_string() const {
  std::string out = "(";
  for (int i = 0; i < num_modes(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(counts_[i]);
  }
  out += ')';
  return out;
}

namespace {

void validate_terms(ParticleKind kind, int num_modes, const FockVector::AmplitudeMap& terms) {
  if (num_modes < 1) throw std::invalid_argument("need at least one mode");
  if (terms.empty()) throw std::invalid_argument("state has no amplitudes");
  const int total = terms.begin()->first.total();
  for (const auto& [occ, amp] : terms) {
    (void)amp;
    if (occ.num_modes() != num_modes) {
      throw std::invalid_argument("occupation vector mode count mismatch");
    }
    if (occ.total() != total) {
      throw std::invalid_argument("mixed particle numbers in one state");
    }
    if (kind == ParticleKind::Fermion && !occ.pauli_compatible()) {
      throw std::invalid_argument("fermionic occupation above 1: " + occ.to_string());
    }
  }
}

double norm_squared(const FockVector::AmplitudeMap& terms) {
  double n2 = 0.0;
  for (const auto& [occ, amp] : terms) {
    (void)occ;
    n2 += std::norm(amp);
  }
  return n2;
}

FockVector::AmplitudeMap pruned(FockVector::AmplitudeMap terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) < kAmplitudePruneThreshold) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  return terms;
}

}  // namespace

FockVector::FockVector(ParticleKind kind, int num_modes, AmplitudeMap terms)
    : kind_(kind), num_modes_(num_modes) {
  validate_terms(kind, num_modes, terms);
  const double n2 = norm_squared(terms);
  if (std::abs(std::sqrt(n2) - 1.0) > kNormTolerance) {
    throw NumericsError("state norm " + std::to_string(std::sqrt(n2)) +
                        " outside unit-norm tolerance");
  }
  num_particles_ = terms.begin()->first.total();
  amplitudes_ = pruned(std::move(terms));
  if (amplitudes_.empty()) {
    throw NumericsError("all amplitudes fell below the pruning threshold");
  }
}

FockVector FockVector::basis_state(ParticleKind kind, OccupationVector occupation) {
  AmplitudeMap terms;
  const int num_modes = occupation.num_modes();
  terms.emplace(std::move(occupation), std::complex<double>(1.0, 0.0));
  return FockVector(kind, num_modes, std::move(terms));
}

FockVector FockVector::normalized(ParticleKind kind, int num_modes, AmplitudeMap terms) {
  validate_terms(kind, num_modes, terms);
  const double n = std::sqrt(norm_squared(terms));
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  for (auto& [occ, amp] : terms) {
    (void)occ;
    amp /= n;
  }
  return FockVector(kind, num_modes, std::move(terms));
}

std::complex<double> FockVector::amplitude(const OccupationVector& occupation) const {
  auto it = amplitudes_.find(occupation);
  return it == amplitudes_.end() ? std::complex<double>(0.0, 0.0) : it->second;
}

double FockVector::norm() const { return std::sqrt(norm_squared(amplitudes_)); }

namespace {

// Emits occupations in descending lexicographic order by placing the largest
// allowed count in the current mode first.
void enumerate_rec(int num_modes, int cap, int mode, int remaining, std::vector<int>& counts,
                   std::vector<OccupationVector>& out) {
  if (mode == num_modes - 1) {
    if (remaining <= cap) {
      counts[mode] = remaining;
      out.emplace_back(counts);
    }
    return;
  }
  for (int c = std::min(remaining, cap); c >= 0; --c) {
    counts[mode] = c;
    enumerate_rec(num_modes, cap, mode + 1, remaining - c, counts, out);
  }
}

}  // namespace

std::vector<OccupationVector> enumerate_basis(ParticleKind kind, int num_modes,
                                              int num_particles) {
  if (num_modes < 1) throw std::invalid_argument("need at least one mode");
  if (num_particles < 0) throw std::invalid_argument("negative particle number");
  if (kind == ParticleKind::Fermion && num_particles > num_modes) {
    throw std::invalid_argument("fermion count exceeds mode count");
  }
  const int cap = kind == ParticleKind::Fermion ? 1 : num_particles;
  std::vector<OccupationVector> out;
  std::vector<int> counts(num_modes, 0);
  enumerate_rec(num_modes, cap, 0, num_particles, counts, out);
  return out;
}

FockVector fock_from_single_modes(ParticleKind kind, int num_modes,
                                  const std::vector<int>& occupied_modes) {
  std::vector<int> counts(num_modes, 0);
  for (int mode : occupied_modes) {
    if (mode < 0 || mode >= num_modes) throw std::invalid_argument("mode index out of range");
    if (kind == ParticleKind::Fermion && counts[mode] > 0) {
      throw std::invalid_argument("duplicate fermion mode " + std::to_string(mode) +
                                  " violates Pauli exclusion");
    }
    ++counts[mode];
  }
  return FockVector::basis_state(kind, OccupationVector(counts));
}

std::complex<double> inner_product(const FockVector& x, const FockVector& y) {
  if (x.kind() != y.kind() || x.num_modes() != y.num_modes() ||
      x.num_particles() != y.num_particles()) {
    throw std::invalid_argument("inner product between states of different spaces");
  }
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [occ, amp] : x.amplitudes()) {
    acc += std::conj(amp) * y.amplitude(occ);
  }
  return acc;
}

}  // namespace focksim
