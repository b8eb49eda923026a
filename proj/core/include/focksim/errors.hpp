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

#ifndef FOCKSIM_ERRORS_HPP
#define FOCKSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace focksim {

/// Violation of a numerical contract: non-unitary input matrix, norm drift
/// beyond tolerance, non-unique fixed point. Malformed arguments throw
/// std::invalid_argument instead.
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The eigenvalue-1 space of a stochastic map has dimension > 1 within
/// tolerance, so there is no single stationary distribution to return.
class NonUniqueSteadyStateError : public NumericsError {
 public:
  explicit NonUniqueSteadyStateError(int multiplicity)
      : NumericsError("steady state is not unique: eigenvalue-1 multiplicity " +
                      std::to_string(multiplicity)),
        multiplicity_(multiplicity) {}

  int multiplicity() const { return multiplicity_; }

 private:
  int multiplicity_;
};

}  // namespace focksim

#endif
