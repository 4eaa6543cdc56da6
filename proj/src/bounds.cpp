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

#include "steer/bounds.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <string>

#include "steer/errors.hpp"

namespace steer {

std::string_view to_string(BoundSource source) {
  switch (source) {
    case BoundSource::kPairExact:
      return "pair_exact";
    case BoundSource::kQubitTripletExact:
      return "qubit_triplet_exact";
    case BoundSource::kRecursive:
      return "recursive";
    case BoundSource::kCloning:
      return "cloning";
  }
  return "unknown";
}

double h_pair(int n) {
  if (n < 1) throw DomainError("h_pair: n must be >= 1");
  return 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(n)));
}

double h_cloning(int k, int n) {
  if (k < 1 || n < 1) throw DomainError("h_cloning: k and n must be >= 1");
  return (1.0 + 2.0 * (k - 1) / (n + 1.0)) / k;
}

double h_recursive(int k, int n) {
  if (k < 2) throw DomainError("h_recursive: k must be >= 2");
  const double h = h_pair(n);
  const int r = std::bit_width(static_cast<unsigned>(k)) - 1;
  const double power = static_cast<double>(1u << r);
  return std::pow(h, r) * (1.0 - 2.0 * (1.0 - h) * (1.0 - power / k));
}

double h_qubit_triplet() { return 0.5 * (1.0 + 1.0 / std::sqrt(3.0)); }

BoundValue h_best(int k, int n) {
  if (k < 2 || n < 1) throw DomainError("h_best: need k >= 2 and n >= 1");
  // Candidates in tie-break order; a later one must be strictly larger.
  constexpr double kTie = 1e-12;
  BoundValue best{k, n, 0.0, BoundSource::kCloning, 0.0};
  auto consider = [&](double eta, BoundSource source) {
    if (eta > best.eta_lower + kTie) {
      best.eta_lower = eta;
      best.source = source;
    }
  };
  if (k == 2) consider(h_pair(n), BoundSource::kPairExact);
  if (k == 3 && n == 2) consider(h_qubit_triplet(), BoundSource::kQubitTripletExact);
  consider(h_recursive(k, n), BoundSource::kRecursive);
  consider(h_cloning(k, n), BoundSource::kCloning);
  best.sr_ceiling = 1.0 / best.eta_lower - 1.0;
  return best;
}

double sr_ceiling(int k, int n) { return h_best(k, n).sr_ceiling; }

std::vector<std::vector<BoundValue>> table1(int k_max, int n_max, int n_min) {
  if (k_max < 2 || k_max > 32 || n_max > 32 || n_min < 1 || n_min > n_max) {
    throw DomainError("table1: need 2 <= k_max <= 32 and 1 <= n_min <= n_max <= 32");
  }
  std::vector<std::vector<BoundValue>> grid;
  for (int k = 2; k <= k_max; ++k) {
    std::vector<BoundValue> row;
    for (int n = n_min; n <= n_max; ++n) row.push_back(h_best(k, n));
    grid.push_back(std::move(row));
  }
  return grid;
}

std::string render_decimal(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // The small nudge keeps exact halves such as 0.12345 from rounding down.
  const double rounded = std::floor(value * scale + 0.5 + 1e-9) / scale;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, rounded);
  std::string text(buffer);
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  if (text == "-0") text = "0";
  return text;
}

int crossover_k(int n) {
  if (n < 2) throw DomainError("crossover_k: n must be >= 2");
  // The recursive bound decays like a power of k while cloning decays like
  // 1/k, so the last crossing lies well below this limit for desk-scale n.
  constexpr int kLimit = 1 << 16;
  int last = 0;
  for (int k = 2; k <= kLimit; ++k) {
    if (h_recursive(k, n) > h_cloning(k, n)) last = k;
  }
  return last;
}

}  // namespace steer
