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

#include "focksim/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace focksim {

namespace {

using nlohmann::json;

constexpr int kJsonIndent = 2;

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json occupation_json(const OccupationVector& occupation) { return json(occupation.counts()); }

OccupationVector occupation_from(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("occupation must be a non-empty JSON array");
  }
  std::vector<int> counts;
  counts.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("occupation entries must be integers");
    counts.push_back(v.get<int>());
  }
  return OccupationVector(std::move(counts));
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string occupation_to_json(const OccupationVector& occupation) {
  return occupation_json(occupation).dump();
}

OccupationVector occupation_from_json(const std::string& text) {
  return occupation_from(parse(text));
}

std::string fock_to_json(const FockVector& state) {
  json terms = json::array();
  for (const auto& [occ, amp] : state.amplitudes()) {
    terms.push_back({{"counts", occupation_json(occ)}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  json doc = {{"kind", to_string(state.kind())},
              {"num_modes", state.num_modes()},
              {"terms", std::move(terms)}};
  return doc.dump(kJsonIndent);
}

FockVector fock_from_json(const std::string& text) {
  const json doc = parse(text);
  try {
    const ParticleKind kind = particle_kind_from_string(doc.at("kind").get<std::string>());
    const int num_modes = doc.at("num_modes").get<int>();
    FockVector::AmplitudeMap terms;
    for (const auto& term : doc.at("terms")) {
      terms.emplace(occupation_from(term.at("counts")),
                    std::complex<double>(term.at("re").get<double>(),
                                         term.at("im").get<double>()));
    }
    return FockVector(kind, num_modes, std::move(terms));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad Fock vector document: ") + e.what());
  }
}

std::string unitary_to_json(const SingleParticleUnitary& u) {
  json rows = json::array();
  for (int i = 0; i < u.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < u.dim(); ++j) {
      row.push_back({u.element(i, j).real(), u.element(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  json doc = {{"n", u.dim()}, {"rows", std::move(rows)}};
  return doc.dump(kJsonIndent);
}

SingleParticleUnitary unitary_from_json(const std::string& text) {
  const json doc = parse(text);
  int n = 0;
  ComplexMatrix m(0, 0);
  try {
    n = doc.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    const auto& rows = doc.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw std::invalid_argument("expected " + std::to_string(n) + " rows");
    }
    m = ComplexMatrix(n, n);
    for (int i = 0; i < n; ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw std::invalid_argument("row " + std::to_string(i) + " has wrong length");
      }
      for (int j = 0; j < n; ++j) {
        const auto& pair = row[j];
        if (!pair.is_array() || pair.size() != 2) {
          throw std::invalid_argument("matrix entries must be [re, im] pairs");
        }
        m(i, j) = {pair[0].get<double>(), pair[1].get<double>()};
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad unitary document: ") + e.what());
  }
  return SingleParticleUnitary(std::move(m));  // throws NumericsError if not unitary
}

SingleParticleUnitary unitary_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return unitary_from_json(buf.str());
}

std::string distribution_to_csv(const OutcomeDistribution& dist) {
  std::string out = "occupation,probability\n";
  for (const auto& [occ, p] : dist) {
    out += '"' + occ.to_string() + "\"," + full_precision(p) + '\n';
  }
  return out;
}

std::string distribution_to_json(const OutcomeDistribution& dist) {
  json entries = json::array();
  for (const auto& [occ, p] : dist) {
    entries.push_back({{"counts", occupation_json(occ)}, {"probability", p}});
  }
  return entries.dump(kJsonIndent);
}

std::string probability_vector_to_csv(const ProbabilityVector& p) {
  std::string out = "outcome,probability\n";
  for (int i = 0; i < p.size(); ++i) {
    out += '"' + p.labels()[i] + "\"," + full_precision(p.prob(i)) + '\n';
  }
  return out;
}

std::string probability_vector_to_json(const ProbabilityVector& p) {
  json entries = json::array();
  for (int i = 0; i < p.size(); ++i) {
    entries.push_back({{"outcome", p.labels()[i]}, {"probability", p.prob(i)}});
  }
  return entries.dump(kJsonIndent);
}

std::string transfer_matrix_to_csv(const TransferMatrix& t) {
  std::string out = "class";
  for (const auto& label : t.labels()) out += ",from_" + label;
  out += '\n';
  for (int i = 0; i < t.dim(); ++i) {
    out += t.labels()[i];
    for (int j = 0; j < t.dim(); ++j) out += ',' + full_precision(t.entry(i, j));
    out += '\n';
  }
  return out;
}

std::string transfer_matrix_to_json(const TransferMatrix& t) {
  json columns = json::array();
  for (int j = 0; j < t.dim(); ++j) {
    json col = json::array();
    for (int i = 0; i < t.dim(); ++i) col.push_back(t.entry(i, j));
    columns.push_back(std::move(col));
  }
  json doc = {{"labels", t.labels()}, {"columns", std::move(columns)}};
  return doc.dump(kJsonIndent);
}

std::string trace_to_csv(const std::vector<TraceRow>& rows) {
  std::string out = "step,P_same,P_diff,l1_distance_to_steady\n";
  for (const TraceRow& r : rows) {
    out += std::to_string(r.step) + ',' + full_precision(r.p_same) + ',' +
           full_precision(r.p_diff) + ',' + full_precision(r.l1_to_steady) + '\n';
  }
  return out;
}

std::string trace_to_json(const std::vector<TraceRow>& rows) {
  json entries = json::array();
  for (const TraceRow& r : rows) {
    entries.push_back({{"step", r.step},
                       {"P_same", r.p_same},
                       {"P_diff", r.p_diff},
                       {"l1_distance_to_steady", r.l1_to_steady}});
  }
  return entries.dump(kJsonIndent);
}

}  // namespace focksim
