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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "steer/bounds.hpp"
#include "steer/errors.hpp"
#include "steer/quantum.hpp"
#include "steer/sdp.hpp"

namespace steer {
namespace {

// Reference SR ceilings to four decimals, k = 2..8 (rows) and n = 2..6 (columns).
constexpr double kTable1[7][5] = {
    {0.1716, 0.2679, 0.3333, 0.3820, 0.4202}, {0.2679, 0.4759, 0.6, 0.6941, 0.7692},
    {0.3333, 0.6, 0.7778, 0.9098, 1.0170},    {0.3636, 0.6667, 0.9231, 1.1429, 1.2877},
    {0.3846, 0.7143, 1.0, 1.25, 1.4706},      {0.4, 0.75, 1.0588, 1.3333, 1.5790},
    {0.4118, 0.7778, 1.1053, 1.4, 1.6667}};

TEST(Bounds, PairExamples) {
  EXPECT_DOUBLE_EQ(h_pair(1), 1.0);
  EXPECT_NEAR(h_pair(2), 0.853553, 1e-6);
  EXPECT_NEAR(sr_ceiling(2, 2), 0.1716, 1e-4);
  EXPECT_NEAR(h_pair(4), 0.75, 1e-15);
  EXPECT_NEAR(sr_ceiling(2, 4), 1.0 / 3.0, 1e-12);
}

TEST(Bounds, CloningExamples) {
  EXPECT_DOUBLE_EQ(h_cloning(1, 7), 1.0);
  EXPECT_NEAR(h_cloning(5, 2), 11.0 / 15.0, 1e-15);
  EXPECT_NEAR(sr_ceiling(5, 2), 0.3636, 1e-4);
  EXPECT_NEAR(1.0 / h_cloning(8, 3) - 1.0, 0.7778, 1e-4);
}

TEST(Bounds, RecursiveExamples) {
  for (int n = 1; n <= 20; ++n) EXPECT_DOUBLE_EQ(h_recursive(2, n), h_pair(n));
  EXPECT_NEAR(h_recursive(3, 3), 0.67757, 1e-5);
  EXPECT_NEAR(1.0 / h_recursive(3, 3) - 1.0, 0.4759, 1e-4);
  EXPECT_NEAR(h_recursive(4, 4), 0.5625, 1e-15);
  // Three measurements reduce to h (2h + 1) / 3.
  for (int n = 2; n <= 10; ++n) {
    const double h = h_pair(n);
    EXPECT_NEAR(h_recursive(3, n), h * (2 * h + 1) / 3, 1e-15);
  }
  EXPECT_NEAR(h_recursive(3, 2), 0.7702200573, 1e-9);
  EXPECT_THROW(h_recursive(1, 2), DomainError);
}

TEST(Bounds, BestExamples) {
  const BoundValue triplet = h_best(3, 2);
  EXPECT_EQ(triplet.source, BoundSource::kQubitTripletExact);
  EXPECT_NEAR(triplet.eta_lower, 0.788675, 1e-6);
  EXPECT_NEAR(triplet.sr_ceiling, 0.2679, 1e-4);
  const BoundValue cloning = h_best(5, 2);
  EXPECT_EQ(cloning.source, BoundSource::kCloning);
  EXPECT_NEAR(cloning.sr_ceiling, 0.3636, 1e-4);
  const BoundValue recursive = h_best(5, 6);
  EXPECT_EQ(recursive.source, BoundSource::kRecursive);
  EXPECT_NEAR(recursive.sr_ceiling, 1.2877, 1e-4);
  EXPECT_EQ(h_best(2, 5).source, BoundSource::kPairExact);
  EXPECT_THROW(h_best(1, 2), DomainError);
  EXPECT_THROW(h_best(2, 0), DomainError);
}

TEST(Bounds, Table1Grid) {
  const auto grid = table1(8, 6);
  ASSERT_EQ(grid.size(), 7u);
  for (int k = 2; k <= 8; ++k) {
    ASSERT_EQ(grid[k - 2].size(), 5u);
    for (int n = 2; n <= 6; ++n) {
      const BoundValue& cell = grid[k - 2][n - 2];
      EXPECT_EQ(cell.k, k);
      EXPECT_EQ(cell.n, n);
      EXPECT_NEAR(cell.sr_ceiling, kTable1[k - 2][n - 2], 1e-4) << "k=" << k << " n=" << n;
    }
  }
  // Cloning wins exactly in the lower-left region of the grid.
  for (int k = 4; k <= 8; ++k) {
    for (int n = 2; n <= 6; ++n) {
      const bool improved = (k == 4 && n >= 4) || (k == 5 && n == 6);
      EXPECT_EQ(grid[k - 2][n - 2].source == BoundSource::kCloning, !improved)
          << "k=" << k << " n=" << n;
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const double root = std::sqrt(static_cast<double>(n));
    EXPECT_NEAR(grid[0][n - 2].sr_ceiling, (root - 1) / (root + 1), 1e-12);
  }
  for (const auto& row : table1(8, 3, 1)) EXPECT_DOUBLE_EQ(row[0].sr_ceiling, 0.0);
  EXPECT_THROW(table1(33, 6), DomainError);
}

TEST(Bounds, RenderDecimal) {
  EXPECT_EQ(render_decimal(1.0 / 3.0), "0.3333");
  EXPECT_EQ(render_decimal(0.6), "0.6");
  EXPECT_EQ(render_decimal(1.0), "1");
  EXPECT_EQ(render_decimal(0.47587529), "0.4759");
  EXPECT_EQ(render_decimal(1.25), "1.25");
}

TEST(Bounds, Crossover) {
  EXPECT_EQ(crossover_k(100), 31);
  EXPECT_EQ(crossover_k(6), 5);
  // Direct evaluation gives 2 at n = 2: recursion already loses to cloning at k = 3.
  EXPECT_EQ(crossover_k(2), 2);
  EXPECT_LT(h_recursive(3, 2), h_cloning(3, 2));
}

TEST(BoundsProperties, RangeAndMonotonicity) {
  for (int k = 2; k <= 32; ++k) {
    for (int n = 1; n <= 100; ++n) {
      EXPECT_GT(h_cloning(k, n), 0.0);
      EXPECT_LE(h_cloning(k, n), 1.0 + 1e-15);
      EXPECT_GT(h_recursive(k, n), 0.0);
      EXPECT_LE(h_recursive(k, n), 1.0 + 1e-15);
      const BoundValue best = h_best(k, n);
      EXPECT_NEAR(best.sr_ceiling, 1.0 / best.eta_lower - 1.0, 1e-12);
      if (k > 2) {
        EXPECT_LE(best.eta_lower, h_best(k - 1, n).eta_lower + 1e-15);
        EXPECT_GE(best.sr_ceiling, h_best(k - 1, n).sr_ceiling - 1e-12);
      }
      if (n > 1) {
        EXPECT_LE(best.eta_lower, h_best(k, n - 1).eta_lower + 1e-15);
        EXPECT_GE(best.sr_ceiling, h_best(k, n - 1).sr_ceiling - 1e-12);
      }
    }
  }
}

TEST(BoundsProperties, PowerOfTwoIdentity) {
  for (int r = 1; r <= 5; ++r) {
    for (int n = 1; n <= 100; ++n) {
      EXPECT_NEAR(h_recursive(1 << r, n), std::pow(h_pair(n), r), 1e-15);
    }
  }
}

TEST(BoundsProperties, PairBoundIsTightForMubs) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_NEAR(incompatibility_eta_g(mub_measurements(n, 2)).value, h_pair(n), 1e-4);
  }
}

TEST(BoundsProperties, ValidAgainstSdpOnRandomSets) {
  std::mt19937_64 rng(41);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Povm> povms;
      for (int x = 0; x < k; ++x) povms.push_back(random_povm(n, n, rng));
      const double eta = incompatibility_eta_g(MeasurementSet(povms)).value;
      EXPECT_GE(eta, h_best(k, n).eta_lower - 1e-6) << "k=" << k << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace steer
