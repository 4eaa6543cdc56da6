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

#include "steer/io.hpp"

#include <cstdio>
#include <ostream>

#include "steer/errors.hpp"

namespace steer {

Json to_json(const HermMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

HermMatrix herm_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("matrix: expected a non-empty array of rows");
  const int n = static_cast<int>(j.size());
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n) {
      throw ShapeError("matrix: rows must all have length " + std::to_string(n));
    }
    for (int c = 0; c < n; ++c) {
      const Json& entry = j[r][c];
      if (entry.is_number()) {
        m(r, c) = Complex(entry.get<double>(), 0.0);
      } else if (entry.is_array() && entry.size() == 2) {
        m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
      } else {
        throw ValidationError("matrix: entries must be numbers or [re, im] pairs");
      }
    }
  }
  HermMatrix h(m);
  if (h.input_asymmetry() > tol::kAlgebraic) {
    throw ValidationError("matrix: not Hermitian (asymmetry " + std::to_string(h.input_asymmetry()) +
                          ")");
  }
  return h;
}

Json to_json(const Povm& povm) {
  Json effects = Json::array();
  for (const auto& e : povm.outcomes()) effects.push_back(to_json(e));
  return Json{{"dim", povm.dim()}, {"effects", effects}};
}

Povm povm_from_json(const Json& j) {
  std::vector<HermMatrix> effects;
  for (const auto& e : j.at("effects")) effects.push_back(herm_from_json(e));
  return Povm(std::move(effects));
}

Json to_json(const MeasurementSet& measurements) {
  Json povms = Json::array();
  for (const auto& p : measurements.povms()) povms.push_back(to_json(p));
  return Json{{"dim", measurements.dim()},
              {"settings", measurements.num_settings()},
              {"outcomes", measurements.num_outcomes()},
              {"povms", povms}};
}

MeasurementSet measurements_from_json(const Json& j) {
  std::vector<Povm> povms;
  for (const auto& p : j.at("povms")) povms.push_back(povm_from_json(p));
  return MeasurementSet(std::move(povms));
}

Json to_json(const Assemblage& assemblage) {
  Json states = Json::array();
  for (const auto& row : assemblage.states()) {
    Json per_setting = Json::array();
    for (const auto& s : row) per_setting.push_back(to_json(s));
    states.push_back(std::move(per_setting));
  }
  return Json{{"dim", assemblage.dim()},
              {"settings", assemblage.num_settings()},
              {"outcomes", assemblage.num_outcomes()},
              {"states", states}};
}

Assemblage assemblage_from_json(const Json& j) {
  std::vector<std::vector<HermMatrix>> states;
  for (const auto& row : j.at("states")) {
    std::vector<HermMatrix> per_setting;
    for (const auto& s : row) per_setting.push_back(herm_from_json(s));
    states.push_back(std::move(per_setting));
  }
  return Assemblage(std::move(states));
}

Json to_json(const ParentMeasurement& parent) {
  Json effects = Json::array();
  for (const auto& e : parent.elements) effects.push_back(to_json(e));
  return Json{{"dim", parent.dim},
              {"settings", parent.settings},
              {"outcomes", parent.outcomes},
              {"eta_guarantee", parent.eta_guarantee},
              {"labels", parent.labels},
              {"effects", effects}};
}

Json sdp_summary(const SdpSolution& solution) {
  return Json{{"value", solution.value},
              {"primal_value", solution.primal_value},
              {"dual_value", solution.dual_value},
              {"gap", solution.gap},
              {"status", std::string(conic::to_string(solution.status))},
              {"iterations", solution.iterations},
              {"num_constraints", solution.num_constraints},
              {"block_sizes", solution.block_sizes},
              {"message", solution.message}};
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "table", "d", "k", "n", "v", "value", "rendered", "method", "source", "flag", "residual",
      "status"};
  return columns;
}

namespace {

std::string number(const std::optional<double>& x) {
  if (!x) return "";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.10g", *x);
  return buffer;
}

std::string integer(const std::optional<int>& x) { return x ? std::to_string(*x) : ""; }

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<Row>& rows) {
  const auto& columns = csv_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& r : rows) {
    out << quoted(r.table) << ',' << integer(r.d) << ',' << integer(r.k) << ',' << integer(r.n)
        << ',' << number(r.v) << ',' << number(r.value) << ',' << quoted(r.rendered) << ','
        << quoted(r.method) << ',' << quoted(r.source) << ',' << quoted(r.flag) << ','
        << number(r.residual) << ',' << quoted(r.status) << '\n';
  }
}

Json rows_to_json(const std::vector<Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"table", r.table},
                       {"d", optional_json(r.d)},
                       {"k", optional_json(r.k)},
                       {"n", optional_json(r.n)},
                       {"v", optional_json(r.v)},
                       {"value", optional_json(r.value)},
                       {"rendered", r.rendered},
                       {"method", r.method},
                       {"source", r.source},
                       {"flag", r.flag},
                       {"residual", optional_json(r.residual)},
                       {"status", r.status}});
  }
  return out;
}

}  // namespace steer
