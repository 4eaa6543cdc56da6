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

#ifndef STEER_TABLES_HPP_
#define STEER_TABLES_HPP_

#include <cstdint>
#include <vector>

#include "steer/io.hpp"
#include "steer/sdp.hpp"

namespace steer {

struct TableOptions {
  SdpOptions sdp;
  int jobs = 1;
};

// Default strategy cap for table and figure commands.
inline constexpr long long kDeskScaleCap = 4000;

// SR ceilings for k = 2..k_max, n = n_min..n_max. flag is "bold" for
// improvements over cloning, "star" for the exact qubit-triplet value and
// "roman" otherwise.
std::vector<Row> table1_rows(int k_max, int n_max, int n_min = 2);

// SR of k MUBs in dimension d with the maximally entangled state, for
// d = 2..d_max and k = 2..min(k_max, constructible MUBs). Cells above the
// strategy cap are emitted with status "skipped: capacity".
std::vector<Row> table2_rows(const TableOptions& options, int d_max = 7, int k_max = 8);

// Noise thresholds: closed form for k = 2, SDP line scans for k = 3, 4, 5 on
// the dimensions that the reference tables list. flag "bold" marks cells that
// beat the k = 2 threshold at the same (d, n).
std::vector<Row> table3_rows(const TableOptions& options);

// SR(v) samples, fitted line and bound levels for d = 4 by default.
std::vector<Row> fig3_rows(const TableOptions& options, int d = 4,
                           const std::vector<int>& k_list = {2, 3, 4},
                           const std::vector<double>& v_grid = {},
                           const std::vector<int>& n_levels = {2, 3});

// Seeded property checks on random instances; one row per check with the
// worst observed slack in `value` and pass/fail in `status`.
std::vector<Row> randomized_checks(std::uint64_t seed, int trials, const TableOptions& options);

}  // namespace steer

#endif  // STEER_TABLES_HPP_
