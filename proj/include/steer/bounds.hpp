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

#ifndef STEER_BOUNDS_HPP_
#define STEER_BOUNDS_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace steer {

// Which closed form realizes h_best. Declaration order is the tie-break
// order (earlier wins).
enum class BoundSource { kPairExact, kQubitTripletExact, kRecursive, kCloning };

std::string_view to_string(BoundSource source);

struct BoundValue {
  int k = 0;
  int n = 0;
  double eta_lower = 1.0;
  BoundSource source = BoundSource::kCloning;
  double sr_ceiling = 0.0;  // 1 / eta_lower - 1
};

// (1 + 1/sqrt(n)) / 2, exact for k = 2.
double h_pair(int n);
// (1/k) (1 + 2(k-1)/(n+1)).
double h_cloning(int k, int n);
// H^r [1 - 2(1 - H)(1 - 2^r/k)] with H = h_pair(n), r = floor(log2 k).
double h_recursive(int k, int n);
// (1 + 1/sqrt(3)) / 2, the exact value for three qubit measurements.
double h_qubit_triplet();

BoundValue h_best(int k, int n);
double sr_ceiling(int k, int n);

// Rows k = 2..k_max, columns n = n_min..n_max. Both maxima must be <= 32.
std::vector<std::vector<BoundValue>> table1(int k_max, int n_max, int n_min = 2);

// Four decimals, rounded half up, trailing zeros stripped ("0.6", "1").
std::string render_decimal(double value, int decimals = 4);

// Largest k with h_recursive(k, n) > h_cloning(k, n).
int crossover_k(int n);

}  // namespace steer

#endif  // STEER_BOUNDS_HPP_
