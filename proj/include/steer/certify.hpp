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

#ifndef STEER_CERTIFY_HPP_
#define STEER_CERTIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steer/bounds.hpp"
#include "steer/quantum.hpp"
#include "steer/sdp.hpp"

namespace steer {

struct ExcludedDimension {
  int n = 0;
  double sr_ceiling = 0.0;
  BoundSource source = BoundSource::kCloning;
};

struct Certificate {
  double sr_lower = 0.0;
  int k = 0;
  // Every n that was compared, excluded or not, in increasing order.
  std::vector<ExcludedDimension> ceilings;
  // The subset of `ceilings` ruled out by sr_lower.
  std::vector<ExcludedDimension> excluded;
  int certified_n = 1;
  bool suspicious = false;  // sr_lower >= k - 1, no finite ceiling reached
  std::string warning;
};

// Excludes n while sr_lower > sr_ceiling(k, n) + margin, scanning n = 1, 2, ...
// up to n_limit. certified_n is one more than the largest excluded n.
Certificate certified_schmidt_number(double sr_lower, int k, int n_limit = 10000,
                                     double margin = 1e-12);

// Minimal dimension (continuous) compatible with an observed SR.
double witness_pairs(double sr);
double witness_cloning(double sr, int k);
double witness_power_two(double sr, int r);
double witness_three(double sr);

// max over deterministic strategies s of max_eig(sum_x B_{s(x)|x}).
double lhs_norm(const MeasurementSet& b, long long cap = kDefaultStrategyCap);

// (1/lhs_norm(B)) sum_{a,x} Tr[(A_{a|x} (x) B_{a|x}) rho] - 1.
double sr_lower_from_correlations(const BipartiteState& state, const MeasurementSet& a,
                                  const MeasurementSet& b, long long cap = kDefaultStrategyCap);

// SR of the isotropic state at visibility v measured in the first k MUBs.
double mub_isotropic_sr(int d, int k, double v, const SdpOptions& options = {},
                        SdpSolution* solution = nullptr);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // |SR(v_check) - line(v_check)|
  std::vector<double> v;  // sample points, the last one is the check point
  std::vector<double> sr;
};

// Fits SR(v) = slope v + intercept through v = 1 and a point above the
// steering onset, validated by a third sample between them.
LineFit fit_sr_line(int d, int k, const SdpOptions& options = {});

enum class ThresholdMethod { kClosedForm, kSdpScan, kBisection };
std::string_view to_string(ThresholdMethod method);

struct ThresholdResult {
  int d = 0;
  int k = 0;
  int n = 0;
  std::optional<double> v_star;
  ThresholdMethod method = ThresholdMethod::kSdpScan;
  LineFit line_fit;
  double ceiling = 0.0;
  double sr_at_one = 0.0;
  double sr_at_v_star = 0.0;
};

inline constexpr double kLinearityTolerance = 1e-6;
// SR values closer than this to a ceiling count as reaching it, not exceeding.
inline constexpr double kSrComparisonTolerance = 1e-6;

// v where SR(v) of the MUB/isotropic setup reaches sr_ceiling(k, n); absent
// when SR(1) does not exceed the ceiling by kSrComparisonTolerance. A precomputed line may be passed to
// share the SR scan between several n.
ThresholdResult noise_threshold(int d, int k, int n, const SdpOptions& options = {},
                                const LineFit* line = nullptr);

// ((d + sqrt(d) - 1) sqrt(n) - 1) / ((d - 1)(sqrt(n) + 1)).
double noise_threshold_pairs(int d, int n);

struct Fig3Line {
  int k = 0;
  std::vector<double> v;
  std::vector<double> sr;
  LineFit fit;
  // Horizontal levels sr_ceiling(k, n) for each requested n.
  std::vector<std::pair<int, double>> levels;
};

Fig3Line fig3_line(int d, int k, const std::vector<double>& v_grid,
                   const std::vector<int>& n_levels, const SdpOptions& options = {});

std::vector<Fig3Line> fig3_data(int d, const std::vector<int>& k_list,
                                const std::vector<double>& v_grid,
                                const std::vector<int>& n_levels = {2, 3},
                                const SdpOptions& options = {});

}  // namespace steer

#endif  // STEER_CERTIFY_HPP_
