// Copyright 2026 The ghzpur Authors
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

#include "ghzpur/efficiency.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace ghzpur {
namespace {

EfficiencyParams at(int photons, double length_km) {
  EfficiencyParams p;
  p.photons = photons;
  p.length_km = length_km;
  return p;
}

// Reference values evaluated independently in double precision.
TEST(Efficiency, FrozenValues) {
  EXPECT_NEAR(ratio_R(at(6, 100)) / 271225718675.93146, 1.0, 1e-12);
  EXPECT_NEAR(ratio_R(at(3, 25)) / 128.54201183550163, 1.0, 1e-12);
  EXPECT_NEAR(p_one(at(3, 25)) / 0.031118230863843167, 1.0, 1e-12);
  EXPECT_NEAR(p_two(at(3, 25)) / 0.0002420860730238604, 1.0, 1e-12);
  EXPECT_GT(ratio_R(at(6, 100)), 1e10);
}

TEST(Efficiency, RatioTimesTwoCopyEqualsOneCopy) {
  for (int n = 2; n <= 10; ++n) {
    for (double l = 0; l <= 100; l += 5) {
      const auto p = at(n, l);
      EXPECT_NEAR(ratio_R(p) * p_two(p) / p_one(p), 1.0, 1e-12);
    }
  }
}

TEST(Efficiency, ZeroDistanceHasNoTransmissionLoss) { EXPECT_DOUBLE_EQ(eta_t(at(3, 0)), 1.0); }

TEST(Efficiency, ValidatesParameters) {
  auto p = at(3, 25);
  p.eta_d = 1.5;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = at(3, -1);
  EXPECT_THROW(ratio_R(p), std::invalid_argument);
  p = at(1, 10);
  EXPECT_THROW(ratio_R(p), std::invalid_argument);
  p = at(3, 10);
  p.attenuation_km = 0;
  EXPECT_THROW(ratio_R(p), std::invalid_argument);
  p = at(3, 10);
  p.eta_c = 0;
  EXPECT_THROW(ratio_R(p), std::domain_error);
}

TEST(Sweep, LengthAxisReferenceRange) {
  const auto rows = sweep(at(6, 0), SweepAxis::length, 20, 100, 1);
  ASSERT_EQ(rows.size(), 81u);
  EXPECT_DOUBLE_EQ(rows.front().axis_value, 20.0);
  EXPECT_DOUBLE_EQ(rows.back().axis_value, 100.0);
  EXPECT_NEAR(rows.back().ratio / 2.71e11, 1.0, 1e-3);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].ratio, rows[i - 1].ratio);
}

TEST(Sweep, PhotonAxisIsStrictlyIncreasing) {
  const auto rows = sweep(at(3, 50), SweepAxis::photons, 2, 12, 1);
  ASSERT_EQ(rows.size(), 11u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].ratio, rows[i - 1].ratio);
}

TEST(Sweep, SinglePointMatchesDirectEvaluation) {
  const auto rows = sweep(at(4, 0), SweepAxis::length, 30, 30, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].ratio, ratio_R(at(4, 30)));
}

TEST(Sweep, FractionalStepsIncludeEndpoint) {
  EXPECT_EQ(sweep_point_count(0.1, 0.9, 0.1), 9u);
  EXPECT_EQ(sweep_point_count(0, 1, 0.3), 4u);
}

TEST(Sweep, EmptyRangeIsRejected) {
  EXPECT_THROW(sweep(at(3, 0), SweepAxis::length, 5, 1, 1), std::invalid_argument);
  EXPECT_THROW(sweep(at(3, 0), SweepAxis::length, 1, 5, 0), std::invalid_argument);
}

}  // namespace
}  // namespace ghzpur
