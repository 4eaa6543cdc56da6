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

#include "steer/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "steer/bounds.hpp"
#include "steer/certify.hpp"
#include "steer/errors.hpp"
#include "steer/parent.hpp"

namespace steer {

namespace {

// Evaluates task(i) for i < count on up to `jobs` threads; results keep the
// index order.
std::vector<std::vector<Row>> parallel_map(int count, int jobs,
                                           const std::function<std::vector<Row>(int)>& task) {
  std::vector<std::vector<Row>> results(count);
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) results[i] = task(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<Row> flatten(std::vector<std::vector<Row>> groups) {
  std::vector<Row> rows;
  for (auto& g : groups) {
    for (auto& r : g) rows.push_back(std::move(r));
  }
  return rows;
}

bool within_cap(int d, int k, long long cap) {
  try {
    strategy_count(d, k, cap);
    return true;
  } catch (const CapacityError&) {
    return false;
  }
}

Row skipped(const std::string& table, int d, int k, std::optional<int> n = std::nullopt) {
  Row row;
  row.table = table;
  row.d = d;
  row.k = k;
  row.n = n;
  row.method = "sdp";
  row.status = "skipped: capacity";
  return row;
}

std::string table1_flag(BoundSource source) {
  switch (source) {
    case BoundSource::kQubitTripletExact:
      return "star";
    case BoundSource::kCloning:
      return "roman";
    default:
      return "bold";
  }
}

}  // namespace

std::vector<Row> table1_rows(int k_max, int n_max, int n_min) {
  std::vector<Row> rows;
  for (const auto& line : table1(k_max, n_max, n_min)) {
    for (const auto& b : line) {
      Row row;
      row.table = "table1";
      row.k = b.k;
      row.n = b.n;
      row.value = b.sr_ceiling;
      row.rendered = render_decimal(b.sr_ceiling);
      row.method = "closed_form";
      row.source = std::string(to_string(b.source));
      row.flag = table1_flag(b.source);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<Row> table2_rows(const TableOptions& options, int d_max, int k_max) {
  std::vector<std::pair<int, int>> cells;
  for (int k = 2; k <= k_max; ++k) {
    for (int d = 2; d <= d_max; ++d) {
      if (k <= max_constructible_mubs(d)) cells.emplace_back(d, k);
    }
  }
  auto task = [&](int i) {
    const auto [d, k] = cells[i];
    if (!within_cap(d, k, options.sdp.max_strategies)) return std::vector<Row>{skipped("table2", d, k)};
    SdpSolution sol;
    const double sr = mub_isotropic_sr(d, k, 1.0, options.sdp, &sol);
    Row row;
    row.table = "table2";
    row.d = d;
    row.k = k;
    row.v = 1.0;
    row.value = sr;
    row.rendered = render_decimal(sr);
    row.method = "sdp";
    row.residual = sol.gap;
    return std::vector<Row>{row};
  };
  return flatten(parallel_map(static_cast<int>(cells.size()), options.jobs, task));
}

std::vector<Row> table3_rows(const TableOptions& options) {
  std::vector<Row> rows;
  for (int d = 3; d <= 7; ++d) {
    for (int n = 2; n < d; ++n) {
      Row row;
      row.table = "table3";
      row.d = d;
      row.k = 2;
      row.n = n;
      row.value = noise_threshold_pairs(d, n);
      row.rendered = render_decimal(*row.value);
      row.method = std::string(to_string(ThresholdMethod::kClosedForm));
      row.source = std::string(to_string(h_best(2, n).source));
      rows.push_back(std::move(row));
    }
  }

  const std::vector<std::pair<int, std::vector<int>>> columns = {
      {3, {3, 4, 5, 6, 7}}, {4, {3, 4, 5, 7, 8}}, {5, {4, 5, 7, 8, 9}}};
  std::vector<std::pair<int, int>> cells;
  for (const auto& [k, dims] : columns) {
    for (int d : dims) cells.emplace_back(d, k);
  }
  auto task = [&](int i) {
    const auto [d, k] = cells[i];
    std::vector<Row> out;
    if (!within_cap(d, k, options.sdp.max_strategies)) {
      for (int n = 2; n < d; ++n) out.push_back(skipped("table3", d, k, n));
      return out;
    }
    const LineFit line = fit_sr_line(d, k, options.sdp);
    for (int n = 2; n < d; ++n) {
      const ThresholdResult result = noise_threshold(d, k, n, options.sdp, &line);
      Row row;
      row.table = "table3";
      row.d = d;
      row.k = k;
      row.n = n;
      row.method = std::string(to_string(result.method));
      row.source = std::string(to_string(h_best(k, n).source));
      row.residual = result.line_fit.residual;
      if (result.v_star) {
        row.value = *result.v_star;
        row.rendered = render_decimal(*result.v_star);
        if (*result.v_star < noise_threshold_pairs(d, n)) row.flag = "bold";
      } else {
        row.status = "absent";
      }
      out.push_back(std::move(row));
    }
    return out;
  };
  for (auto& r : flatten(parallel_map(static_cast<int>(cells.size()), options.jobs, task))) {
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Row> fig3_rows(const TableOptions& options, int d, const std::vector<int>& k_list,
                           const std::vector<double>& v_grid, const std::vector<int>& n_levels) {
  std::vector<double> grid = v_grid;
  if (grid.empty()) {
    for (int i = 0; i <= 20; ++i) grid.push_back(i / 20.0);
  }
  auto task = [&](int i) {
    const int k = k_list[i];
    std::vector<Row> out;
    if (!within_cap(d, k, options.sdp.max_strategies)) {
      out.push_back(skipped("fig3", d, k));
      return out;
    }
    const Fig3Line line = fig3_line(d, k, grid, n_levels, options.sdp);
    for (std::size_t j = 0; j < line.v.size(); ++j) {
      Row row;
      row.table = "fig3";
      row.d = d;
      row.k = k;
      row.v = line.v[j];
      row.value = line.sr[j];
      row.rendered = render_decimal(line.sr[j]);
      row.method = "sdp";
      row.flag = "sample";
      out.push_back(std::move(row));
    }
    for (const auto& [name, value] : {std::pair<std::string, double>{"slope", line.fit.slope},
                                      {"intercept", line.fit.intercept}}) {
      Row row;
      row.table = "fig3";
      row.d = d;
      row.k = k;
      row.value = value;
      row.rendered = render_decimal(value);
      row.method = "line_fit";
      row.flag = name;
      row.residual = line.fit.residual;
      out.push_back(std::move(row));
    }
    for (const auto& [n, level] : line.levels) {
      Row row;
      row.table = "fig3";
      row.d = d;
      row.k = k;
      row.n = n;
      row.value = level;
      row.rendered = render_decimal(level);
      row.method = "closed_form";
      row.source = std::string(to_string(h_best(k, n).source));
      row.flag = "level";
      out.push_back(std::move(row));
    }
    return out;
  };
  return flatten(parallel_map(static_cast<int>(k_list.size()), options.jobs, task));
}

std::vector<Row> randomized_checks(std::uint64_t seed, int trials, const TableOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<Row> rows;
  auto add = [&](const std::string& name, double worst, double floor) {
    Row row;
    row.table = "check";
    row.value = worst;
    row.method = name;
    row.residual = floor;
    row.status = worst >= floor ? "pass" : "fail";
    rows.push_back(std::move(row));
  };
  std::uniform_int_distribution<int> dim(2, 6);

  double worst = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const int n = dim(rng);
    const Povm a = random_rank_one_povm(n, n, rng);
    const Povm b = random_rank_one_povm(n, n, rng);
    worst = std::min(worst, operator_inequality_check(a, b));
  }
  add("operator_inequality", worst, -1e-10);

  worst = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const int n = dim(rng);
    const MeasurementSet m({random_rank_one_povm(n, n, rng), random_rank_one_povm(n, n, rng)});
    const ParentMeasurement parent = parent_pair_rank1(m[0], m[1]);
    worst = std::min(worst, verify_parent(parent, m, h_pair(n)).marginal_slack);
  }
  add("parent_pair_feasibility", worst, -1e-7);

  worst = std::numeric_limits<double>::infinity();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<std::pair<int, int>> setups = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (int t = 0; t < trials; ++t) {
    const auto [d, k] = setups[t % setups.size()];
    const double v = unit(rng);
    const MeasurementSet a = mub_measurements(d, k);
    const BipartiteState state = isotropic_state(d, v);
    const double lower = sr_lower_from_correlations(state, a, transpose_measurements(a));
    const double sr = steering_robustness(make_assemblage(state, a), options.sdp).value;
    worst = std::min(worst, sr - lower);
  }
  add("estimation_chain_soundness", worst, -1e-6);

  worst = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const int n = 2;
    const int k = 3;
    std::vector<Povm> povms;
    for (int x = 0; x < k; ++x) povms.push_back(random_rank_one_povm(n, n, rng));
    const double eta = incompatibility_eta_g(MeasurementSet(povms), options.sdp).value;
    worst = std::min(worst, eta - h_best(k, n).eta_lower);
  }
  add("eta_above_universal_bound", worst, -1e-6);

  worst = std::numeric_limits<double>::infinity();
  const std::vector<std::pair<int, int>> recursive_setups = {{3, 2}, {3, 3}, {4, 3}, {4, 4}};
  for (int t = 0; t < trials; ++t) {
    const auto [k, n] = recursive_setups[t % recursive_setups.size()];
    std::vector<Povm> povms;
    for (int x = 0; x < k; ++x) povms.push_back(random_rank_one_povm(n, n, rng));
    const RecursiveParent parent = parent_recursive(MeasurementSet(povms));
    const double slack = parent.verdict.pass ? parent.verdict.worst_slack
                                             : -std::numeric_limits<double>::infinity();
    worst = std::min(worst, slack);
  }
  add("parent_recursive_feasibility", worst, -1e-7);
  return rows;
}

}  // namespace steer
