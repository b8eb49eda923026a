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

#ifndef FOCKSIM_SERIALIZE_HPP
#define FOCKSIM_SERIALIZE_HPP

#include <string>
#include <vector>

#include "focksim/channels.hpp"
#include "focksim/fock.hpp"
#include "focksim/markov.hpp"
#include "focksim/optics.hpp"

// JSON and CSV wire formats. JSON documents are emitted with 2-space
// indentation and alphabetically ordered keys, so re-serializing a parsed
// document reproduces the input bytes. CSV numbers carry full double
// precision. Schema errors throw std::invalid_argument; a matrix that parses
// but fails the unitarity check throws NumericsError.

namespace focksim {

/// Occupation vector <-> JSON array of integers, e.g. [2,0].
std::string occupation_to_json(const OccupationVector& occupation);
OccupationVector occupation_from_json(const std::string& text);

/// Fock vector <-> {"kind", "num_modes", "terms": [{"counts", "re", "im"}]},
/// terms in basis order.
std::string fock_to_json(const FockVector& state);
FockVector fock_from_json(const std::string& text);

/// Unitary <-> {"n": N, "rows": [[[re, im], ...], ...]}.
std::string unitary_to_json(const SingleParticleUnitary& u);
SingleParticleUnitary unitary_from_json(const std::string& text);
SingleParticleUnitary unitary_from_json_file(const std::string& path);

/// Outcome distribution as "occupation,probability" CSV rows (basis order)
/// or as a JSON array of {"counts", "probability"} objects.
std::string distribution_to_csv(const OutcomeDistribution& dist);
std::string distribution_to_json(const OutcomeDistribution& dist);

std::string probability_vector_to_csv(const ProbabilityVector& p);
std::string probability_vector_to_json(const ProbabilityVector& p);

/// Transfer matrix as CSV (header "from:<label>" columns, one row per target
/// class) or as {"labels", "columns"} JSON.
std::string transfer_matrix_to_csv(const TransferMatrix& t);
std::string transfer_matrix_to_json(const TransferMatrix& t);

/// One row of a relaxation trace.
struct TraceRow {
  int step;
  double p_same;
  double p_diff;
  double l1_to_steady;
};

/// "step,P_same,P_diff,l1_distance_to_steady" rows.
std::string trace_to_csv(const std::vector<TraceRow>& rows);
std::string trace_to_json(const std::vector<TraceRow>& rows);

}  // namespace focksim

#endif
