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

#ifndef STEER_PARENT_HPP_
#define STEER_PARENT_HPP_

#include <string>
#include <vector>

#include "steer/linalg.hpp"
#include "steer/quantum.hpp"

namespace steer {

// Joint measurement over the grid of child outcome strings. Element j carries
// the label labels[j] = (j_0, ..., j_{k-1}); the grid is lexicographic, so
// it matches DeterministicStrategy numbering.
struct ParentMeasurement {
  int dim = 0;
  int settings = 0;
  int outcomes = 0;
  std::vector<std::vector<int>> labels;
  std::vector<HermMatrix> elements;
  double eta_guarantee = 0.0;
};

// A_a B_b anticommutator plus trace and square-root terms, normalized by
// 1/(2 + 2 sqrt(n)). Children must be rank-one with the same dimension.
ParentMeasurement parent_pair_rank1(const Povm& a, const Povm& b);

// min over a of min_eig(sum_b B_b^{1/2} A_a B_b^{1/2} - A_a / n).
double operator_inequality_check(const Povm& a, const Povm& b);

struct ParentVerdict {
  bool pass = false;
  double worst_slack = 0.0;          // min of the two slacks below
  double marginal_slack = 0.0;       // min_eig(sum delta G - eta A)
  double positivity_slack = 0.0;     // min_eig(G_j)
  double normalization_error = 0.0;  // max |sum_j G_j - 1|
  int worst_setting = -1;
  int worst_outcome = -1;
};

// Checks G_j >= 0, sum_j G_j = 1 and sum_j delta_{j_x,a} G_j >= eta A_{a|x}.
// Marginal slack down to -slack_tolerance still passes.
ParentVerdict verify_parent(const ParentMeasurement& parent, const MeasurementSet& measurements,
                            double eta, double slack_tolerance = 1e-7);

struct RecursiveParent {
  // One term per cyclic shift of the settings (a single term for k = 2).
  std::vector<ParentMeasurement> terms;
  ParentMeasurement averaged;
  double eta_guarantee = 0.0;  // h_recursive(k, n)
  ParentVerdict verdict;       // averaged parent at eta_guarantee
  std::string report;          // empty unless verification failed
};

// Pairs the first 2l settings of each cyclic shift (k = 2^r + l), then pairs
// neighbours up a balanced tree, feeding intermediate parents back into the
// pair formula.
// How a composite (non-rank-one) child is fed to the pair formula.
enum class IntermediateMode {
  // Split into rank-one eigen-pieces, pair, then coarse-grain back.
  kRankOneRefinement,
  // Apply the formula to the composite effects as they are.
  kDirectFormula,
};

RecursiveParent parent_recursive(const MeasurementSet& measurements,
                                 IntermediateMode mode = IntermediateMode::kRankOneRefinement);

// True when every effect has numerical rank at most one.
bool is_rank_one(const Povm& povm, double tolerance = tol::kFeasibility);

}  // namespace steer

#endif  // STEER_PARENT_HPP_
