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

#include "steer/certify.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "steer/errors.hpp"

namespace steer {

Certificate certified_schmidt_number(double sr_lower, int k, int n_limit, double margin) {
  if (k < 2) throw DomainError("certified_schmidt_number: k must be >= 2");
  if (!(sr_lower >= 0.0)) {
    // Negative estimates certify nothing; they are kept as reported.
    Certificate cert;
    cert.sr_lower = sr_lower;
    cert.k = k;
    cert.ceilings.push_back({1, 0.0, h_best(k, 1).source});
    return cert;
  }
  Certificate cert;
  cert.sr_lower = sr_lower;
  cert.k = k;
  if (sr_lower >= k - 1) {
    cert.suspicious = true;
    std::ostringstream msg;
    msg << "SR = " << sr_lower << " is at or above k - 1 = " << k - 1
        << ", which no finite-dimensional ceiling reaches; scan stopped at n = " << n_limit;
    cert.warning = msg.str();
  }
  for (int n = 1; n <= n_limit; ++n) {
    const BoundValue bound = h_best(k, n);
    const ExcludedDimension entry{n, bound.sr_ceiling, bound.source};
    cert.ceilings.push_back(entry);
    if (!(sr_lower > bound.sr_ceiling + margin)) break;
    cert.excluded.push_back(entry);
    cert.certified_n = n + 1;
  }
  return cert;
}

double witness_pairs(double sr) {
  if (sr < 0.0 || sr >= 1.0) throw DomainError("witness_pairs: need 0 <= sr < 1");
  const double ratio = (1.0 + sr) / (1.0 - sr);
  return ratio * ratio;
}

double witness_cloning(double sr, int k) {
  if (k < 2 || sr < 0.0 || sr >= k - 1) {
    throw DomainError("witness_cloning: need k >= 2 and 0 <= sr < k - 1");
  }
  return 1.0 + 2.0 * k * sr / (k - 1 - sr);
}

double witness_power_two(double sr, int r) {
  if (r < 1 || sr < 0.0) throw DomainError("witness_power_two: need r >= 1 and sr >= 0");
  // c - 1 is formed directly; at r = 1 it is sr itself, so the ratio is
  // computed exactly as in witness_pairs.
  const double excess = r == 1 ? sr : std::expm1(std::log1p(sr) / r);
  if (excess >= 1.0) throw DomainError("witness_power_two: (1 + sr)^(1/r) must stay below 2");
  const double ratio = (1.0 + excess) / (1.0 - excess);
  return ratio * ratio;
}

double witness_three(double sr) {
  if (sr < 0.0 || sr >= 2.0) throw DomainError("witness_three: need 0 <= sr < 2");
  const double s1 = 1.0 + sr;
  return s1 * (17.0 + 5.0 * sr + 3.0 * std::sqrt(s1 * (25.0 + sr))) /
         (8.0 * (2.0 - sr) * (2.0 - sr));
}

double lhs_norm(const MeasurementSet& b, long long cap) {
  const int k = b.num_settings();
  const int o = b.num_outcomes();
  const long long strategies = strategy_count(o, k, cap);
  double best = -std::numeric_limits<double>::infinity();
  for (long long s = 0; s < strategies; ++s) {
    const DeterministicStrategy strategy(s, o, k);
    HermMatrix sum = HermMatrix::zero(b.dim());
    for (int x = 0; x < k; ++x) sum = sum + b.effect(strategy(x), x);
    best = std::max(best, max_eig(sum));
  }
  return best;
}

double sr_lower_from_correlations(const BipartiteState& state, const MeasurementSet& a,
                                  const MeasurementSet& b, long long cap) {
  if (a.num_settings() != b.num_settings() || a.num_outcomes() != b.num_outcomes() ||
      a.dim() != state.dim_a() || b.dim() != state.dim_b()) {
    throw ShapeError("sr_lower_from_correlations: measurement and state shapes differ");
  }
  const double lambda = lhs_norm(b, cap);
  double correlation = 0.0;
  for (int x = 0; x < a.num_settings(); ++x) {
    for (int o = 0; o < a.num_outcomes(); ++o) {
      correlation += trace_inner(kron(a.effect(o, x), b.effect(o, x)), state.matrix());
    }
  }
  return correlation / lambda - 1.0;
}

double mub_isotropic_sr(int d, int k, double v, const SdpOptions& options,
                        SdpSolution* solution) {
  strategy_count(d, k, options.max_strategies);
  const MeasurementSet measurements = mub_measurements(d, k);
  const Assemblage assemblage = make_assemblage(isotropic_state(d, v), measurements);
  SdpSolution sol = steering_robustness(assemblage, options);
  if (sol.status != conic::Status::kOptimal) {
    throw SolverError("steering robustness SDP did not converge: " + sol.message, sol.gap);
  }
  const double value = sol.value;
  if (solution != nullptr) *solution = std::move(sol);
  return value;
}

LineFit fit_sr_line(int d, int k, const SdpOptions& options) {
  // Below this SR the point is treated as lying at or below the onset.
  constexpr double kOnset = 1e-5;
  LineFit fit;
  const double top = mub_isotropic_sr(d, k, 1.0, options);
  if (top <= kOnset) {
    throw DomainError("fit_sr_line: no steering even at v = 1");
  }
  double low_v = 0.9;
  double low = mub_isotropic_sr(d, k, low_v, options);
  while (low <= kOnset) {
    low_v = 0.5 * (low_v + 1.0);
    low = mub_isotropic_sr(d, k, low_v, options);
  }
  const double check_v = 0.5 * (low_v + 1.0);
  const double check = mub_isotropic_sr(d, k, check_v, options);
  fit.slope = (top - low) / (1.0 - low_v);
  fit.intercept = top - fit.slope;
  fit.residual = std::abs(check - (fit.slope * check_v + fit.intercept));
  fit.v = {low_v, 1.0, check_v};
  fit.sr = {low, top, check};
  return fit;
}

std::string_view to_string(ThresholdMethod method) {
  switch (method) {
    case ThresholdMethod::kClosedForm:
      return "closed_form";
    case ThresholdMethod::kSdpScan:
      return "sdp_scan";
    case ThresholdMethod::kBisection:
      return "bisection";
  }
  return "unknown";
}

ThresholdResult noise_threshold(int d, int k, int n, const SdpOptions& options,
                                const LineFit* line) {
  if (n < 1) throw DomainError("noise_threshold: n must be >= 1");
  ThresholdResult result;
  result.d = d;
  result.k = k;
  result.n = n;
  result.ceiling = sr_ceiling(k, n);
  result.line_fit = line != nullptr ? *line : fit_sr_line(d, k, options);
  result.sr_at_one = result.line_fit.sr[1];
  if (result.sr_at_one <= result.ceiling + kSrComparisonTolerance) return result;

  const LineFit& fit = result.line_fit;
  if (fit.residual <= kLinearityTolerance) {
    const double v = (result.ceiling - fit.intercept) / fit.slope;
    const double sr = mub_isotropic_sr(d, k, v, options);
    if (std::abs(sr - result.ceiling) <= 1e-6) {
      result.method = ThresholdMethod::kSdpScan;
      result.v_star = v;
      result.sr_at_v_star = sr;
      return result;
    }
  }
  // SR(0) = 0 lies below any ceiling for n >= 2, SR(1) above it.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    if (mub_isotropic_sr(d, k, mid, options) > result.ceiling) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.method = ThresholdMethod::kBisection;
  result.v_star = 0.5 * (lo + hi);
  result.sr_at_v_star = mub_isotropic_sr(d, k, *result.v_star, options);
  return result;
}

double noise_threshold_pairs(int d, int n) {
  if (d < 2 || n < 1 || n >= d) throw DomainError("noise_threshold_pairs: need d >= 2, 1 <= n < d");
  const double sd = std::sqrt(static_cast<double>(d));
  const double sn = std::sqrt(static_cast<double>(n));
  return ((d + sd - 1.0) * sn - 1.0) / ((d - 1.0) * (sn + 1.0));
}

Fig3Line fig3_line(int d, int k, const std::vector<double>& v_grid,
                   const std::vector<int>& n_levels, const SdpOptions& options) {
  Fig3Line line;
  line.k = k;
  for (double v : v_grid) {
    line.v.push_back(v);
    line.sr.push_back(mub_isotropic_sr(d, k, v, options));
  }
  line.fit = fit_sr_line(d, k, options);
  for (int n : n_levels) line.levels.emplace_back(n, sr_ceiling(k, n));
  return line;
}

std::vector<Fig3Line> fig3_data(int d, const std::vector<int>& k_list,
                                const std::vector<double>& v_grid,
                                const std::vector<int>& n_levels, const SdpOptions& options) {
  std::vector<Fig3Line> lines;
  for (int k : k_list) lines.push_back(fig3_line(d, k, v_grid, n_levels, options));
  return lines;
}

}  // namespace steer
