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

#ifndef FOCKSIM_EIGEN_DETAIL_HPP
#define FOCKSIM_EIGEN_DETAIL_HPP

#include <Eigen/Dense>

#include "focksim/matrix.hpp"
#include "focksim/optics.hpp"

namespace focksim::detail {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

// The stored convention has element (n, m) = amplitude n -> m, i.e. states
// live in rows. The operator acting on column vectors is the transpose;
// its column k is the image of basis state k.
inline Eigen::MatrixXcd column_operator(const SingleParticleUnitary& u) {
  return to_eigen(u.matrix()).transpose();
}

}  // namespace focksim::detail

#endif
