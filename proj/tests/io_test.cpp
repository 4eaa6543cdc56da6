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

#include <random>
#include <sstream>

#include "steer/errors.hpp"
#include "steer/io.hpp"
#include "steer/tables.hpp"
#include "test_util.hpp"

namespace steer {
namespace {

TEST(Json, HermitianRoundTrip) {
  std::mt19937_64 rng(71);
  const HermMatrix m = random_hermitian(3, rng);
  const Json j = to_json(m);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0][1].size(), 2u);
  EXPECT_EQ(max_abs_diff(herm_from_json(j), m), 0.0);
  EXPECT_EQ(max_abs_diff(herm_from_json(Json::parse(j.dump())), m), 0.0);
}

TEST(Json, MeasurementRoundTrip) {
  const MeasurementSet m = mub_measurements(3, 3);
  const MeasurementSet back = measurements_from_json(Json::parse(to_json(m).dump()));
  ASSERT_EQ(back.num_settings(), 3);
  for (int x = 0; x < 3; ++x) {
    for (int a = 0; a < 3; ++a) EXPECT_EQ(max_abs_diff(back.effect(a, x), m.effect(a, x)), 0.0);
  }
  EXPECT_EQ(to_json(back).dump(), to_json(m).dump());
}

TEST(Json, AssemblageRoundTrip) {
  const Assemblage a = make_assemblage(isotropic_state(2, 0.7), mub_measurements(2, 3));
  const Assemblage back = assemblage_from_json(Json::parse(to_json(a).dump()));
  EXPECT_EQ(back.num_settings(), 3);
  EXPECT_EQ(back.num_outcomes(), 2);
  EXPECT_EQ(max_abs_diff(back.state(1, 2), a.state(1, 2)), 0.0);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(herm_from_json(Json::parse("[[[1,0],[0,0]],[[0,1],[1,0]]]")), ValidationError);
  // A POVM whose effects do not sum to the identity.
  Json bad = to_json(mub_measurements(2, 1));
  bad["povms"][0]["effects"][0][0][0] = Json::array({0.5, 0.0});
  EXPECT_THROW(measurements_from_json(bad), ValidationError);
}

TEST(Json, ParentAndSolverSummary) {
  const MeasurementSet m = mub_measurements(2, 2);
  const Json parent = to_json(parent_pair_rank1(m.povms()[0], m.povms()[1]));
  EXPECT_EQ(parent["labels"].size(), 4u);
  EXPECT_EQ(parent["effects"].size(), 4u);
  EXPECT_NEAR(parent["eta_guarantee"].get<double>(), 0.853553, 1e-6);
  const Json summary = sdp_summary(steering_robustness(make_assemblage(isotropic_state(2, 1), m)));
  EXPECT_EQ(summary["status"], "optimal");
  EXPECT_NEAR(summary["value"].get<double>(), 0.1716, 1e-4);
}

TEST(Csv, HeaderAndEmptyFields) {
  Row row;
  row.table = "table1";
  row.k = 2;
  row.n = 3;
  row.value = 0.2679491924;
  row.rendered = "0.2679";
  row.flag = "bold";
  std::ostringstream out;
  write_csv(out, {row});
  EXPECT_EQ(out.str(),
            "table,d,k,n,v,value,rendered,method,source,flag,residual,status\n"
            "table1,,2,3,,0.2679491924,0.2679,,,bold,,ok\n");
  const Json j = rows_to_json({row});
  EXPECT_TRUE(j[0]["d"].is_null());
  EXPECT_EQ(j[0]["k"], 2);
  EXPECT_EQ(csv_columns().size(), 12u);
}

TEST(Tables, Table1RowsCarryAttribution) {
  const auto rows = table1_rows(8, 6);
  ASSERT_EQ(rows.size(), 35u);
  EXPECT_EQ(rows[5].k, 3);
  EXPECT_EQ(rows[5].n, 2);
  EXPECT_EQ(rows[5].flag, "star");
  EXPECT_EQ(rows[5].source, "qubit_triplet_exact");
  EXPECT_EQ(rows[5].rendered, "0.2679");
  EXPECT_EQ(rows[0].flag, "bold");
  EXPECT_EQ(rows[10].flag, "roman");
}

TEST(Tables, Table2MarksCapacitySkips) {
  TableOptions options;
  options.sdp.max_strategies = 20;
  const auto rows = table2_rows(options, 3, 3);
  int skipped = 0;
  for (const auto& row : rows) {
    if (row.status == "skipped: capacity") {
      ++skipped;
      EXPECT_FALSE(row.value.has_value());
    } else {
      EXPECT_EQ(row.status, "ok");
      EXPECT_TRUE(row.value.has_value());
    }
  }
  EXPECT_GT(skipped, 0);
}

TEST(Tables, RandomizedChecksAreDeterministic) {
  TableOptions options;
  const auto first = randomized_checks(123, 3, options);
  const auto second = randomized_checks(123, 3, options);
  std::ostringstream a;
  std::ostringstream b;
  write_csv(a, first);
  write_csv(b, second);
  EXPECT_EQ(a.str(), b.str());
  for (const auto& row : first) EXPECT_EQ(row.status, "pass") << row.method;
}

TEST(Tables, ParallelMatchesSerial) {
  TableOptions serial;
  TableOptions parallel;
  parallel.jobs = 3;
  std::ostringstream a;
  std::ostringstream b;
  write_csv(a, table2_rows(serial, 3, 3));
  write_csv(b, table2_rows(parallel, 3, 3));
  EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace steer
