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

#include "steer/sdp.hpp"

#include <cmath>
#include <sstream>

#include "hermitian_blocks.hpp"
#include "steer/errors.hpp"

namespace steer {

DeterministicStrategy::DeterministicStrategy(long long index, int outcomes, int settings)
    : index_(index), assignment_(settings, 0) {
  for (int x = settings - 1; x >= 0; --x) {
    assignment_[x] = static_cast<int>(index % outcomes);
    index /= outcomes;
  }
}

long long strategy_count(int outcomes, int settings, long long cap) {
  long long count = 1;
  for (int x = 0; x < settings; ++x) {
    count *= outcomes;
    if (count > cap) {
      std::ostringstream msg;
      msg << "d^k = " << outcomes << "^" << settings << " deterministic strategies exceed the cap of "
          << cap << "; use fewer settings or outcomes";
      throw CapacityError(msg.str(), count, cap);
    }
  }
  return count;
}

namespace {

const conic::Solver& engine(const SdpOptions& options) {
  return options.engine != nullptr ? *options.engine : conic::default_solver();
}

void fill_diagnostics(const conic::Problem& problem, const conic::Solution& raw,
                      SdpSolution& out) {
  out.status = raw.status;
  out.iterations = raw.iterations;
  out.num_constraints = problem.num_constraints();
  out.block_sizes = problem.block_sizes();
  out.message = raw.message;
}

}  // namespace

SdpSolution steering_robustness(const Assemblage& assemblage, const SdpOptions& options) {
  const int k = assemblage.num_settings();
  const int o = assemblage.num_outcomes();
  const int d = assemblage.dim();
  const long long strategies = strategy_count(o, k, options.max_strategies);
  const detail::HermitianBasis basis(d);
  const int params = basis.size();
  auto var = [&](int x, int a, int p) { return (x * o + a) * params + p; };

  conic::Problem problem;
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      for (int p = 0; p < params; ++p) {
        problem.add_constraint(-basis.pair_with(p, assemblage.state(a, x)));
      }
    }
  }
  // F_{a|x} >= 0.
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      const int block = problem.add_block(2 * d);
      for (int p = 0; p < params; ++p) basis.add_element(problem, var(x, a, p), block, p, 1.0);
    }
  }
  // 1 - sum_x F_{s(x)|x} >= 0.
  const HermMatrix identity = HermMatrix::identity(d);
  std::vector<int> strategy_blocks;
  for (long long s = 0; s < strategies; ++s) {
    const DeterministicStrategy strategy(s, o, k);
    const int block = problem.add_block(2 * d);
    strategy_blocks.push_back(block);
    for (int x = 0; x < k; ++x) {
      for (int p = 0; p < params; ++p) {
        basis.add_element(problem, var(x, strategy(x), p), block, p, -1.0);
      }
    }
    detail::add_hermitian(problem, -1, block, identity, -1.0);
  }

  const conic::Solution raw = engine(options).solve(problem, options.solver);

  SdpSolution out;
  fill_diagnostics(problem, raw, out);
  // Conic primal value is -Tr sum_s S_s, conic dual value is -sum Tr(F sigma).
  out.primal_value = -raw.primal_objective - 1.0;
  out.dual_value = -raw.dual_objective - 1.0;
  out.gap = std::abs(out.primal_value - out.dual_value);
  out.value = 0.5 * (out.primal_value + out.dual_value);
  for (int block : strategy_blocks) {
    out.primal_witness.push_back(detail::hermitian_from_block(raw.primal[block]));
  }
  out.dual_witness.resize(k);
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      out.dual_witness[x].push_back(basis.combine(raw.dual.data() + var(x, a, 0)));
    }
  }
  return out;
}

LhsVerdict lhs_membership(const Assemblage& assemblage, const SdpOptions& options,
                          double feasibility) {
  LhsVerdict verdict;
  verdict.solution = steering_robustness(assemblage, options);
  const SdpSolution& sol = verdict.solution;
  const int k = assemblage.num_settings();
  const int o = assemblage.num_outcomes();

  verdict.functional = sol.dual_witness;
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      verdict.functional_value += trace_inner(sol.dual_witness[x][a], assemblage.state(a, x));
    }
  }
  verdict.unsteerable = sol.status == conic::Status::kOptimal && sol.value <= feasibility;
  if (verdict.unsteerable) {
    verdict.decomposition = sol.primal_witness;
    const long long strategies = static_cast<long long>(sol.primal_witness.size());
    for (int x = 0; x < k; ++x) {
      std::vector<HermMatrix> rebuilt(o, HermMatrix::zero(assemblage.dim()));
      for (long long s = 0; s < strategies; ++s) {
        const DeterministicStrategy strategy(s, o, k);
        rebuilt[strategy(x)] = rebuilt[strategy(x)] + sol.primal_witness[s];
      }
      for (int a = 0; a < o; ++a) {
        verdict.reproduction_error = std::max(
            verdict.reproduction_error, max_abs_diff(rebuilt[a], assemblage.state(a, x)));
      }
    }
  }
  return verdict;
}

namespace {

// Minimal white-noise weight making sigma + u + w 1/(o d) an unnormalized LHS
// assemblage, with u an assemblage of total weight t.
double minimal_noise_weight(const Assemblage& assemblage, double t, const SdpOptions& options) {
  const int k = assemblage.num_settings();
  const int o = assemblage.num_outcomes();
  const int d = assemblage.dim();
  const long long strategies = strategy_count(o, k, options.max_strategies);
  const detail::HermitianBasis basis(d);
  const int params = basis.size();
  auto row = [&](int x, int a, int p) { return (x * o + a) * params + p; };

  conic::Problem problem;
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      for (int p = 0; p < params; ++p) {
        problem.add_constraint(-basis.pair_with(p, assemblage.state(a, x)));
      }
    }
  }
  const int normalization = problem.add_constraint(t);

  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      const int block = problem.add_block(2 * d);
      for (int p = 0; p < params; ++p) basis.add_element(problem, row(x, a, p), block, p, 1.0);
      if (x == 0) {
        detail::add_hermitian(problem, normalization, block, HermMatrix::identity(d), 1.0);
      }
    }
  }
  for (long long s = 0; s < strategies; ++s) {
    const DeterministicStrategy strategy(s, o, k);
    const int block = problem.add_block(2 * d);
    for (int x = 0; x < k; ++x) {
      for (int p = 0; p < params; ++p) {
        basis.add_element(problem, row(x, strategy(x), p), block, p, -1.0);
      }
    }
  }
  const int noise = problem.add_block(1);
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      // Tr(B_p 1) / (o d) is nonzero for diagonal basis elements only.
      for (int i = 0; i < d; ++i) {
        problem.add_entry(row(x, a, i), noise, 0, 0, 1.0 / (o * d));
      }
    }
  }
  problem.add_objective_entry(noise, 0, 0, -1.0);

  const conic::Solution raw = engine(options).solve(problem, options.solver);
  if (raw.status == conic::Status::kInfeasible) {
    throw SolverError("bisection oracle: feasibility problem reported infeasible",
                      raw.primal_infeasibility);
  }
  return -0.5 * (raw.primal_objective + raw.dual_objective);
}

}  // namespace

double sr_bisection_oracle(const Assemblage& assemblage, double tolerance,
                           const SdpOptions& options, long long cap) {
  strategy_count(assemblage.num_outcomes(), assemblage.num_settings(), cap);
  constexpr double kNoiseFeasible = 1e-8;
  auto feasible = [&](double t) {
    return minimal_noise_weight(assemblage, t, options) <= kNoiseFeasible;
  };
  double lo = 0.0;
  // The robustness never exceeds k - 1.
  double hi = static_cast<double>(assemblage.num_settings());
  while (!feasible(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw SolverError("bisection oracle: no feasible upper bracket", hi);
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SdpSolution incompatibility_eta_g(const MeasurementSet& measurements, const SdpOptions& options) {
  const int k = measurements.num_settings();
  const int o = measurements.num_outcomes();
  const int d = measurements.dim();
  const long long outcomes = strategy_count(o, k, options.max_strategies);
  const detail::HermitianBasis basis(d);
  const int params = basis.size();
  // y = (Y, X_{a|x}).
  auto y_var = [&](int p) { return p; };
  auto x_var = [&](int x, int a, int p) { return params + (x * o + a) * params + p; };

  conic::Problem problem;
  for (int p = 0; p < params; ++p) problem.add_constraint(p < d ? 1.0 : 0.0);
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      for (int p = 0; p < params; ++p) problem.add_constraint(0.0);
    }
  }
  // X_{a|x} >= 0.
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      const int block = problem.add_block(2 * d);
      for (int p = 0; p < params; ++p) basis.add_element(problem, x_var(x, a, p), block, p, 1.0);
    }
  }
  // Y - sum_x X_{j_x|x} >= 0 for every outcome string j.
  std::vector<int> parent_blocks;
  for (long long j = 0; j < outcomes; ++j) {
    const DeterministicStrategy label(j, o, k);
    const int block = problem.add_block(2 * d);
    parent_blocks.push_back(block);
    for (int p = 0; p < params; ++p) basis.add_element(problem, y_var(p), block, p, 1.0);
    for (int x = 0; x < k; ++x) {
      for (int p = 0; p < params; ++p) {
        basis.add_element(problem, x_var(x, label(x), p), block, p, -1.0);
      }
    }
  }
  // sum Tr(X_{a|x} A_{a|x}) - 1 >= 0; its multiplier is eta.
  const int eta_block = problem.add_block(1);
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      for (int p = 0; p < params; ++p) {
        problem.add_entry(x_var(x, a, p), eta_block, 0, 0,
                          basis.pair_with(p, measurements.effect(a, x)));
      }
    }
  }
  problem.add_objective_entry(eta_block, 0, 0, 1.0);

  const conic::Solution raw = engine(options).solve(problem, options.solver);

  SdpSolution out;
  fill_diagnostics(problem, raw, out);
  out.primal_value = raw.primal_objective;
  out.dual_value = raw.dual_objective;
  out.gap = std::abs(out.primal_value - out.dual_value);
  out.value = 0.5 * (out.primal_value + out.dual_value);
  for (int block : parent_blocks) {
    out.primal_witness.push_back(detail::hermitian_from_block(raw.primal[block]));
  }
  out.dual_witness.resize(k);
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      out.dual_witness[x].push_back(basis.combine(raw.dual.data() + x_var(x, a, 0)));
    }
  }
  return out;
}

double incompatibility_robustness(const MeasurementSet& measurements, const SdpOptions& options) {
  const SdpSolution sol = incompatibility_eta_g(measurements, options);
  if (sol.status != conic::Status::kOptimal) {
    throw SolverError("incompatibility SDP did not converge: " + sol.message, sol.gap);
  }
  return 1.0 / sol.value - 1.0;
}

}  // namespace steer
