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

#include "ghzpur/noise.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace ghzpur {
namespace {

TEST(MixTwo, EndpointsCollapseToPureStates) {
  const auto good = make_ghz_pol(3, 0, Sign::plus);
  const auto bad = make_ghz_pol(3, 1, Sign::plus);
  EXPECT_EQ(mix_two(good, bad, 1.0).size(), 1u);
  EXPECT_EQ(mix_two(good, bad, 0.0).size(), 1u);
  EXPECT_NEAR(fidelity(mix_two(good, bad, 0.8), good), 0.8, 1e-15);
}

TEST(MixTwo, RejectsOverlappingComponents) {
  const auto a = make_ghz_pol(3, 0, Sign::plus);
  EXPECT_THROW(mix_two(a, a, 0.5), NonOrthogonalError);
  EXPECT_THROW(mix_two(a, make_ghz_pol(3, 0, Sign::minus), 1.5), std::invalid_argument);
}

TEST(MixGeneral, ChecksWeights) {
  const PureState states[] = {make_ghz_pol(3, 0, Sign::plus), make_ghz_pol(3, 2, Sign::plus)};
  const double short_weights[] = {0.5, 0.4};
  EXPECT_THROW(mix_general(states, short_weights), std::invalid_argument);
  const double weights[] = {0.7, 0.3};
  EXPECT_NEAR(fidelity(mix_general(states, weights), states[1]), 0.3, 1e-15);
}

TEST(NoisyGhz, BitAndPhaseFlipComponents) {
  const NoiseSpec bit[] = {{Dof::polarization, NoiseKind::bit_flip, 1, 0.2}};
  const auto e = noisy_ghz(3, Dof::polarization, bit);
  EXPECT_NEAR(fidelity(e, make_ghz_pol(3, 0, Sign::plus)), 0.8, 1e-15);
  EXPECT_NEAR(fidelity(e, make_ghz_pol(3, 1, Sign::plus)), 0.2, 1e-15);

  const NoiseSpec phase[] = {{Dof::spatial, NoiseKind::phase_flip, 0, 0.4}};
  const auto s = noisy_ghz(4, Dof::spatial, phase);
  EXPECT_NEAR(fidelity(s, make_ghz_spatial(4, 0, Sign::minus)), 0.4, 1e-15);
}

TEST(NoisyGhz, RejectsInvalidSpecs) {
  const NoiseSpec too_heavy[] = {{Dof::polarization, NoiseKind::bit_flip, 1, 0.7},
                                 {Dof::polarization, NoiseKind::bit_flip, 2, 0.4}};
  EXPECT_THROW(noisy_ghz(3, Dof::polarization, too_heavy), std::invalid_argument);
  const NoiseSpec out_of_range[] = {{Dof::polarization, NoiseKind::bit_flip, 4, 0.1}};
  EXPECT_THROW(noisy_ghz(3, Dof::polarization, out_of_range), std::out_of_range);
  const NoiseSpec ideal_flip[] = {{Dof::polarization, NoiseKind::bit_flip, 0, 0.1}};
  EXPECT_THROW(noisy_ghz(3, Dof::polarization, ideal_flip), std::out_of_range);
  const NoiseSpec wrong_dof[] = {{Dof::spatial, NoiseKind::bit_flip, 1, 0.1}};
  EXPECT_THROW(noisy_ghz(3, Dof::polarization, wrong_dof), std::invalid_argument);
}

TEST(ProductEnsemble, WeightsMultiply) {
  const auto input = testing::two_term_input(3, NoiseKind::bit_flip, 1, 0.8, 1, 0.7);
  EXPECT_EQ(input.size(), 4u);
  double total = 0.0;
  for (const auto& member : input.members()) total += member.probability;
  EXPECT_NEAR(total, 1.0, 1e-15);
  const auto ideal = tensor_hyper(make_ghz_pol(3, 0, Sign::plus), make_ghz_spatial(3, 0, Sign::plus));
  EXPECT_NEAR(fidelity(input, ideal), 0.56, 1e-15);
}

}  // namespace
}  // namespace ghzpur
