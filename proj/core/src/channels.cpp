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

#include "focksim/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "eigen_detail.hpp"
#include "focksim/errors.hpp"
#include "focksim/markov.hpp"

namespace focksim {

namespace {

using detail::column_operator;

Eigen::MatrixXcd to_eigen_density(const DensityMatrix& rho) {
  Eigen::MatrixXcd out(rho.dim(), rho.dim());
  for (int i = 0; i < rho.dim(); ++i) {
    for (int j = 0; j < rho.dim(); ++j) out(i, j) = rho.entry(i, j);
  }
  return out;
}

DensityMatrix from_eigen_density(const Eigen::MatrixXcd& m) {
  std::vector<std::complex<double>> entries(m.size());
  const int d = static_cast<int>(m.rows());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) entries[static_cast<size_t>(i) * d + j] = m(i, j);
  }
  return DensityMatrix(d, std::move(entries));
}

// Dephasing in the basis given by the columns of `basis_op`, on an arbitrary
// matrix (the fixed-point scan feeds in non-Hermitian matrix units).
Eigen::MatrixXcd pinch(const Eigen::MatrixXcd& basis_op, const Eigen::MatrixXcd& x) {
  const Eigen::MatrixXcd in_basis = basis_op.adjoint() * x * basis_op;
  return basis_op * in_basis.diagonal().asDiagonal() * basis_op.adjoint();
}

Eigen::MatrixXcd apply_channel_matrix(const Eigen::MatrixXcd& step_op,
                                      const Eigen::MatrixXcd& basis_op,
                                      const Eigen::MatrixXcd& x) {
  return pinch(basis_op, step_op * x * step_op.adjoint());
}

bool is_diagonal_within(const Eigen::MatrixXcd& m, double tol) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

}  // namespace

DensityMatrix::DensityMatrix(int dim, std::vector<std::complex<double>> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) throw std::invalid_argument("density matrix needs dimension >= 1");
  if (entries_.size() != static_cast<size_t>(dim) * dim) {
    throw std::invalid_argument("entry count does not match dim^2");
  }
  std::complex<double> trace(0.0, 0.0);
  double herm_defect = 0.0;
  for (int i = 0; i < dim; ++i) {
    trace += entry(i, i);
    for (int j = 0; j < dim; ++j) {
      herm_defect = std::max(herm_defect, std::abs(entry(i, j) - std::conj(entry(j, i))));
    }
  }
  if (herm_defect > kDensityTolerance) {
    throw NumericsError("density matrix is not Hermitian within tolerance");
  }
  if (std::abs(trace - std::complex<double>(1.0, 0.0)) > kDensityTolerance) {
    throw NumericsError("density matrix trace differs from 1");
  }
  Eigen::MatrixXcd m = to_eigen_density(*this);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver((m + m.adjoint()) / 2.0);
  if (solver.eigenvalues().minCoeff() < -kDensityTolerance) {
    throw NumericsError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::pure(const std::vector<std::complex<double>>& state) {
  const int d = static_cast<int>(state.size());
  std::vector<std::complex<double>> entries(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) entries[static_cast<size_t>(i) * d + j] = state[i] * std::conj(state[j]);
  }
  return DensityMatrix(d, std::move(entries));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<std::complex<double>> entries(static_cast<size_t>(dim) * dim, {0.0, 0.0});
  for (int i = 0; i < dim; ++i) entries[static_cast<size_t>(i) * dim + i] = 1.0 / dim;
  return DensityMatrix(dim, std::move(entries));
}

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> d(dim_);
  for (int i = 0; i < dim_; ++i) d[i] = entry(i, i).real();
  return d;
}

double DensityMatrix::purity() const {
  double p = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) p += (entry(i, j) * entry(j, i)).real();
  }
  return p;
}

double DensityMatrix::frobenius_distance(const DensityMatrix& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
  double sum = 0.0;
  for (size_t k = 0; k < entries_.size(); ++k) sum += std::norm(entries_[k] - other.entries_[k]);
  return std::sqrt(sum);
}

DensityMatrix dephase(const DensityMatrix& rho, const SingleParticleUnitary& basis) {
  if (basis.dim() != rho.dim()) throw std::invalid_argument("dimension mismatch");
  return from_eigen_density(pinch(column_operator(basis), to_eigen_density(rho)));
}

DensityMatrix apply_competing_channel(const DensityMatrix& rho,
                                      const SingleParticleUnitary& hamiltonian_step,
                                      const SingleParticleUnitary& complementary_basis) {
  if (hamiltonian_step.dim() != rho.dim() || complementary_basis.dim() != rho.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  return from_eigen_density(apply_channel_matrix(column_operator(hamiltonian_step),
                                                 column_operator(complementary_basis),
                                                 to_eigen_density(rho)));
}

FixedPointReport competing_channel_fixed_point(const SingleParticleUnitary& hamiltonian_step,
                                               const SingleParticleUnitary& complementary_basis) {
  const int d = hamiltonian_step.dim();
  if (complementary_basis.dim() != d) throw std::invalid_argument("dimension mismatch");

  const Eigen::MatrixXcd step_op = column_operator(hamiltonian_step);
  const Eigen::MatrixXcd basis_op = column_operator(complementary_basis);

  // Energy eigenbasis: the computational basis when the step is already
  // diagonal, otherwise its numerically computed eigenvectors.
  Eigen::MatrixXcd energy_basis;
  if (is_diagonal_within(step_op, 1e-12)) {
    energy_basis = Eigen::MatrixXcd::Identity(d, d);
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(step_op);
    energy_basis = es.eigenvectors();
  }
  const Eigen::MatrixXcd overlaps = energy_basis.adjoint() * basis_op;
  bool overlap_ok = true;
  for (int i = 0; i < d && overlap_ok; ++i) {
    for (int k = 0; k < d; ++k) {
      if (std::abs(overlaps(i, k)) <= kOverlapThreshold) {
        overlap_ok = false;
        break;
      }
    }
  }

  // Matrix representation of the channel, built column-by-column from matrix
  // units under column-stacking vectorization.
  const int dd = d * d;
  Eigen::MatrixXcd super(dd, dd);
  for (int b = 0; b < d; ++b) {
    for (int a = 0; a < d; ++a) {
      Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(d, d);
      unit(a, b) = 1.0;
      const Eigen::MatrixXcd image = apply_channel_matrix(step_op, basis_op, unit);
      super.col(b * d + a) = Eigen::Map<const Eigen::VectorXcd>(image.data(), dd);
    }
  }

  Eigen::MatrixXcd shifted = super - Eigen::MatrixXcd::Identity(dd, dd);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
  int nullity = 0;
  for (int i = 0; i < dd; ++i) {
    if (svd.singularValues()(i) < kUniquenessTolerance) ++nullity;
  }
  if (nullity == 0) {
    throw NumericsError("channel has no fixed point within tolerance");
  }

  // The identity is always fixed (both the unitary step and the pinch are
  // unital), so projecting I/d onto the fixed subspace never degenerates.
  const Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
  const Eigen::VectorXcd target = Eigen::Map<const Eigen::VectorXcd>(mixed.data(), dd);
  Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(dd);
  for (int k = dd - nullity; k < dd; ++k) {
    const Eigen::VectorXcd basis_vec = svd.matrixV().col(k);
    projected += basis_vec * basis_vec.dot(target);
  }

  Eigen::MatrixXcd fixed = Eigen::Map<const Eigen::MatrixXcd>(projected.data(), d, d);
  fixed = (fixed + fixed.adjoint()) / 2.0;
  const double trace = fixed.trace().real();
  if (std::abs(trace) < kUniquenessTolerance) {
    throw NumericsError("fixed point has vanishing trace");
  }
  fixed /= trace;

  DensityMatrix fixed_point = from_eigen_density(fixed);
  const double distance = fixed_point.frobenius_distance(DensityMatrix::maximally_mixed(d));
  return FixedPointReport{std::move(fixed_point), nullity, overlap_ok, distance};
}

}  // namespace focksim
