// Copyright 2026 The steer Authors
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

#ifndef STEER_IO_HPP_
#define STEER_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "steer/linalg.hpp"
#include "steer/parent.hpp"
#include "steer/quantum.hpp"
#include "steer/sdp.hpp"

namespace steer {

using Json = nlohmann::ordered_json;

// Matrices are arrays of rows, each entry a [re, im] pair.
Json to_json(const HermMatrix& m);
HermMatrix herm_from_json(const Json& j);
Json to_json(const Povm& povm);
Povm povm_from_json(const Json& j);
Json to_json(const MeasurementSet& measurements);
MeasurementSet measurements_from_json(const Json& j);
// {"states": [[sigma_{0|0}, ...], ...]} indexed [x][a].
Json to_json(const Assemblage& assemblage);
Assemblage assemblage_from_json(const Json& j);
Json to_json(const ParentMeasurement& parent);
// Block sizes, objective values, status and gap; no witnesses.
Json sdp_summary(const SdpSolution& solution);

// One line of tabular output. Empty optionals render as empty CSV fields and
// JSON nulls.
struct Row {
  std::string table;
  std::optional<int> d;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<double> v;
  std::optional<double> value;
  std::string rendered;
  std::string method;
  std::string source;
  std::string flag;
  std::optional<double> residual;
  std::string status = "ok";
};

const std::vector<std::string>& csv_columns();
void write_csv(std::ostream& out, const std::vector<Row>& rows);
Json rows_to_json(const std::vector<Row>& rows);

}  // namespace steer

#endif  // STEER_IO_HPP_
