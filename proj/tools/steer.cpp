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

// Command-line front end: table reproduction, one-off SDP runs, certificates
// and JSON import/export.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "steer/bounds.hpp"
#include "steer/certify.hpp"
#include "steer/errors.hpp"
#include "steer/io.hpp"
#include "steer/parent.hpp"
#include "steer/quantum.hpp"
#include "steer/sdp.hpp"
#include "steer/tables.hpp"

namespace {

using steer::Json;
using steer::Row;

struct Common {
  long long max_strategies = steer::kDeskScaleCap;
  int jobs = 1;
  std::string format;
  std::string out;
  std::uint64_t seed = 20240521;
  double gap_tol = 1e-9;
  int max_iters = 100;
};

steer::TableOptions table_options(const Common& c) {
  steer::TableOptions options;
  options.jobs = c.jobs;
  options.sdp.max_strategies = c.max_strategies;
  options.sdp.solver.tolerance = c.gap_tol;
  options.sdp.solver.max_iterations = c.max_iters;
  return options;
}

// Writes to --out when given, stdout otherwise.
void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw std::runtime_error("cannot open " + c.out + " for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing " + c.out);
}

void emit_rows(const Common& c, const std::vector<Row>& rows) {
  if (c.format == "json") {
    emit(c, steer::rows_to_json(rows).dump(2) + "\n");
    return;
  }
  std::ostringstream text;
  steer::write_csv(text, rows);
  emit(c, text.str());
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.10g", x);
  return buffer;
}

Json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return Json::parse(file);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Subcommands share one Common; the format default is applied after parsing.
void add_common(CLI::App* app, Common& c) {
  app->add_option("--max-strategies", c.max_strategies,
                  "Cap on enumerated deterministic strategies (d^k)")
      ->capture_default_str();
  app->add_option("--jobs", c.jobs, "Cells computed in parallel")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "Output file (default: stdout)");
  app->add_option("--gap-tol", c.gap_tol, "Relative SDP stopping tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--max-iters", c.max_iters, "Interior-point iteration limit")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steer: steering robustness, incompatibility bounds and dimension certificates"};
  app.require_subcommand(1);
  Common common;

  // table1
  int t1_kmax = 8;
  int t1_nmax = 6;
  int t1_nmin = 2;
  auto* t1 = app.add_subcommand("table1", "SR ceilings for n-preparable assemblages");
  add_common(t1, common);
  t1->add_option("--kmax", t1_kmax, "Largest number of measurements")->capture_default_str();
  t1->add_option("--nmax", t1_nmax, "Largest dimension")->capture_default_str();
  t1->add_option("--nmin", t1_nmin, "Smallest dimension")->capture_default_str();
  t1->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // table2
  int t2_dmax = 7;
  int t2_kmax = 8;
  auto* t2 = app.add_subcommand("table2", "SR of k MUBs with the maximally entangled state");
  add_common(t2, common);
  t2->add_option("--dmax", t2_dmax, "Largest dimension")->capture_default_str();
  t2->add_option("--kmax", t2_kmax, "Largest number of MUBs")->capture_default_str();
  t2->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // table3
  auto* t3 = app.add_subcommand("table3", "Noise thresholds of the dimension certificates");
  add_common(t3, common);
  t3->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // fig3
  int f3_d = 4;
  std::vector<int> f3_k = {2, 3, 4};
  std::vector<int> f3_n = {2, 3};
  int f3_points = 21;
  auto* f3 = app.add_subcommand("fig3", "SR(v) lines and bound levels");
  add_common(f3, common);
  f3->add_option("--d", f3_d, "Dimension")->capture_default_str();
  f3->add_option("--k", f3_k, "Numbers of MUBs")->delimiter(',')->capture_default_str();
  f3->add_option("--n", f3_n, "Dimensions whose ceilings are drawn")->delimiter(',')
      ->capture_default_str();
  f3->add_option("--points", f3_points, "Grid points on [0, 1]")->capture_default_str()
      ->check(CLI::Range(2, 1001));
  f3->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // certify
  double c_sr = 0.0;
  int c_k = 2;
  int c_limit = 10000;
  auto* cert = app.add_subcommand("certify", "Certified Schmidt number from an SR lower bound");
  add_common(cert, common);
  cert->add_option("--sr", c_sr, "Steering robustness (lower bound)")->required();
  cert->add_option("--k", c_k, "Number of measurements")->required()->check(CLI::Range(2, 1 << 20));
  cert->add_option("--nlimit", c_limit, "Largest n scanned")->capture_default_str();
  cert->add_option("--format", common.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // sr
  int s_d = 2;
  int s_k = 2;
  double s_v = 1.0;
  std::string s_file;
  auto* sr = app.add_subcommand("sr", "Steering robustness of MUB measurements on an isotropic state");
  add_common(sr, common);
  sr->add_option("--d", s_d, "Dimension")->capture_default_str();
  sr->add_option("--k", s_k, "Number of MUBs")->capture_default_str();
  sr->add_option("--v", s_v, "Visibility of the isotropic state")->capture_default_str();
  sr->add_option("--assemblage", s_file, "Read the assemblage from a JSON file instead");
  sr->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // eta
  int e_d = 2;
  int e_k = 2;
  std::string e_file;
  auto* eta = app.add_subcommand("eta", "Generalized incompatibility robustness of MUBs");
  add_common(eta, common);
  eta->add_option("--d", e_d, "Dimension")->capture_default_str();
  eta->add_option("--k", e_k, "Number of MUBs")->capture_default_str();
  eta->add_option("--measurements", e_file, "Read the measurements from a JSON file instead");
  eta->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // export
  std::string x_what;
  int x_d = 2;
  int x_k = 2;
  double x_v = 1.0;
  auto* exp = app.add_subcommand("export", "Write MUBs, assemblages or parents as JSON");
  add_common(exp, common);
  exp->add_option("what", x_what, "mub, assemblage or parent")
      ->required()
      ->check(CLI::IsMember({"mub", "assemblage", "parent"}));
  exp->add_option("--d", x_d, "Dimension")->capture_default_str();
  exp->add_option("--k", x_k, "Number of MUBs")->capture_default_str();
  exp->add_option("--v", x_v, "Visibility (assemblage only)")->capture_default_str();

  // check
  int k_trials = 50;
  auto* chk = app.add_subcommand("check", "Seeded randomized property checks");
  add_common(chk, common);
  chk->add_option("--seed", common.seed, "Random seed")->capture_default_str();
  chk->add_option("--trials", k_trials, "Instances per check")->capture_default_str()
      ->check(CLI::PositiveNumber);
  chk->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);
  if (common.format.empty()) {
    const bool text = *cert || *sr || *eta;
    common.format = *exp ? "json" : (text ? "text" : "csv");
  }

  try {
    const steer::TableOptions options = table_options(common);
    if (*t1) {
      emit_rows(common, steer::table1_rows(t1_kmax, t1_nmax, t1_nmin));
    } else if (*t2) {
      emit_rows(common, steer::table2_rows(options, t2_dmax, t2_kmax));
    } else if (*t3) {
      emit_rows(common, steer::table3_rows(options));
    } else if (*f3) {
      std::vector<double> grid;
      for (int i = 0; i < f3_points; ++i) grid.push_back(static_cast<double>(i) / (f3_points - 1));
      emit_rows(common, steer::fig3_rows(options, f3_d, f3_k, grid, f3_n));
    } else if (*cert) {
      const steer::Certificate c = steer::certified_schmidt_number(c_sr, c_k, c_limit);
      if (common.format == "text") {
        std::ostringstream text;
        text << "SR lower bound " << format_double(c.sr_lower) << " with k = " << c.k << "\n";
        for (const auto& e : c.ceilings) {
          const bool excluded = e.n < c.certified_n;
          text << "  n = " << e.n << ": ceiling " << steer::render_decimal(e.sr_ceiling) << " ("
               << steer::to_string(e.source) << ") " << (excluded ? "excluded" : "not excluded")
               << "\n";
        }
        text << "certified Schmidt number >= " << c.certified_n << "\n";
        if (c.suspicious) text << "warning: " << c.warning << "\n";
        emit(common, text.str());
      } else {
        std::vector<Row> rows;
        for (const auto& e : c.ceilings) {
          Row row;
          row.table = "certify";
          row.k = c.k;
          row.n = e.n;
          row.value = e.sr_ceiling;
          row.rendered = steer::render_decimal(e.sr_ceiling);
          row.method = "closed_form";
          row.source = std::string(steer::to_string(e.source));
          row.flag = e.n < c.certified_n ? "excluded" : "not_excluded";
          rows.push_back(std::move(row));
        }
        Row summary;
        summary.table = "certify";
        summary.k = c.k;
        summary.n = c.certified_n;
        summary.value = c.sr_lower;
        summary.method = "certified_n";
        summary.status = c.suspicious ? "warning" : "ok";
        rows.push_back(std::move(summary));
        emit_rows(common, rows);
      }
    } else if (*sr) {
      const auto start = std::chrono::steady_clock::now();
      const steer::Assemblage assemblage =
          s_file.empty()
              ? steer::make_assemblage(steer::isotropic_state(s_d, s_v),
                                       steer::mub_measurements(s_d, s_k))
              : steer::assemblage_from_json(read_json(s_file));
      const steer::SdpSolution sol = steer::steering_robustness(assemblage, options.sdp);
      const double elapsed = seconds_since(start);
      if (common.format == "json") {
        Json j = steer::sdp_summary(sol);
        j["seconds"] = elapsed;
        emit_json(common, j);
      } else {
        emit(common, "SR = " + format_double(sol.value) + "  gap = " + format_double(sol.gap) +
                         "  status = " + std::string(steer::conic::to_string(sol.status)) +
                         "  iterations = " + std::to_string(sol.iterations) +
                         "  time = " + format_double(elapsed) + " s\n");
      }
      if (sol.status != steer::conic::Status::kOptimal) return 1;
    } else if (*eta) {
      const auto start = std::chrono::steady_clock::now();
      const steer::MeasurementSet m = e_file.empty()
                                          ? steer::mub_measurements(e_d, e_k)
                                          : steer::measurements_from_json(read_json(e_file));
      const steer::SdpSolution sol = steer::incompatibility_eta_g(m, options.sdp);
      const double elapsed = seconds_since(start);
      if (common.format == "json") {
        Json j = steer::sdp_summary(sol);
        j["incompatibility_robustness"] = 1.0 / sol.value - 1.0;
        j["seconds"] = elapsed;
        emit_json(common, j);
      } else {
        emit(common, "eta_g = " + format_double(sol.value) +
                         "  IR = " + format_double(1.0 / sol.value - 1.0) +
                         "  gap = " + format_double(sol.gap) +
                         "  status = " + std::string(steer::conic::to_string(sol.status)) +
                         "  time = " + format_double(elapsed) + " s\n");
      }
      if (sol.status != steer::conic::Status::kOptimal) return 1;
    } else if (*exp) {
      const steer::MeasurementSet m = steer::mub_measurements(x_d, x_k);
      if (x_what == "mub") {
        emit_json(common, steer::to_json(m));
      } else if (x_what == "assemblage") {
        emit_json(common, steer::to_json(steer::make_assemblage(steer::isotropic_state(x_d, x_v), m)));
      } else {
        const steer::RecursiveParent parent = steer::parent_recursive(m);
        Json j = steer::to_json(parent.averaged);
        j["verified"] = parent.verdict.pass;
        j["worst_slack"] = parent.verdict.worst_slack;
        emit_json(common, j);
      }
    } else if (*chk) {
      const auto rows = steer::randomized_checks(common.seed, k_trials, options);
      emit_rows(common, rows);
      for (const auto& r : rows) {
        if (r.status != "pass") return 1;
      }
    }
  } catch (const steer::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
