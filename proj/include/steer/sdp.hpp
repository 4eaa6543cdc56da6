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

#ifndef STEER_SDP_HPP_
#define STEER_SDP_HPP_

#include <string>
#include <vector>

#include "steer/conic.hpp"
#include "steer/linalg.hpp"
#include "steer/quantum.hpp"

namespace steer {

inline constexpr long long kDefaultStrategyCap = 100000;

// Deterministic response function x -> a. Strategies are numbered in
// lexicographic order of (a_0, ..., a_{k-1}), outcomes 0-based.
class DeterministicStrategy {
 public:
  DeterministicStrategy(long long index, int outcomes, int settings);

  long long index() const { return index_; }
  int operator()(int x) const { return assignment_[x]; }
  const std::vector<int>& assignment() const { return assignment_; }

 private:
  long long index_;
  std::vector<int> assignment_;
};

// outcomes^settings; throws CapacityError when above `cap`.
long long strategy_count(int outcomes, int settings, long long cap);

struct SdpOptions {
  conic::Settings solver;
  long long max_strategies = kDefaultStrategyCap;
  // Engine to use; nullptr selects conic::default_solver().
  const conic::Solver* engine = nullptr;
};

struct SdpSolution {
  double value = 0.0;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;  // |primal_value - dual_value|
  conic::Status status = conic::Status::kInaccurate;
  // steering_robustness: unnormalized LHS states per strategy, trace 1 + SR.
  // incompatibility_eta_g: parent effects G_j per outcome string j.
  std::vector<HermMatrix> primal_witness;
  // steering_robustness: F_{a|x} as [x][a].
  // incompatibility_eta_g: dual multipliers of the marginal constraints.
  std::vector<std::vector<HermMatrix>> dual_witness;
  int iterations = 0;
  int num_constraints = 0;
  std::vector<int> block_sizes;
  std::string message;
};

// min t such that (sigma + t tau) / (1 + t) has a local hidden state model.
// Solved in the form
//   max sum Tr(F_{a|x} sigma_{a|x}) - 1,  F >= 0,
//       sum_x F_{s(x)|x} <= 1 for every deterministic strategy s,
// whose conic dual is min Tr sum_s S_s - 1, sum_s delta S_s >= sigma_{a|x}.
SdpSolution steering_robustness(const Assemblage& assemblage, const SdpOptions& options = {});

struct LhsVerdict {
  bool unsteerable = false;
  // Local states (weights absorbed) per strategy.
  std::vector<HermMatrix> decomposition;
  double reproduction_error = 0.0;
  // Steering functional F_{a|x} as [x][a] and its value sum Tr(F sigma).
  std::vector<std::vector<HermMatrix>> functional;
  double functional_value = 0.0;
  SdpSolution solution;
};

// Unsteerable iff the steering robustness is at most `feasibility` (1e-7).
LhsVerdict lhs_membership(const Assemblage& assemblage, const SdpOptions& options = {},
                          double feasibility = 1e-7);

// Independent evaluation of the robustness by bisection on t. For fixed t it
// minimizes the weight w of white noise needed so that
//   sigma + u + w 1/(o d) = sum_s delta S_s,  Tr sum_a u_{a|0} = t,
// with u = t tau a valid assemblage; t is feasible iff w = 0.
double sr_bisection_oracle(const Assemblage& assemblage, double tolerance,
                           const SdpOptions& options = {}, long long cap = 1000);

// max eta s.t. G_j >= 0, sum_j G_j = 1, sum_j delta_{j_x,a} G_j >= eta A_{a|x}.
SdpSolution incompatibility_eta_g(const MeasurementSet& measurements,
                                  const SdpOptions& options = {});

// 1 / eta_g - 1.
double incompatibility_robustness(const MeasurementSet& measurements,
                                  const SdpOptions& options = {});

}  // namespace steer

#endif  // STEER_SDP_HPP_
