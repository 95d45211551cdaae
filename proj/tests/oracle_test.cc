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

#include "ghzpur/oracle.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "ghzpur/runner.hpp"
#include "test_util.hpp"

namespace ghzpur {
namespace {

using testing::two_term_input;

TEST(Densify, ProducesUnitTracePositiveMatrix) {
  const auto dense = oracle::densify(two_term_input(3, NoiseKind::bit_flip, 1, 0.8, 2, 0.6));
  EXPECT_EQ(dense.rho.rows(), 64);
  EXPECT_NEAR(dense.rho.trace().real(), 1.0, 1e-14);
  EXPECT_LT((dense.rho - dense.rho.adjoint()).norm(), 1e-14);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense.rho);
  EXPECT_GT(solver.eigenvalues().minCoeff(), -1e-14);
  // Four orthogonal pure members give rank four.
  int rank = 0;
  for (int i = 0; i < solver.eigenvalues().size(); ++i) rank += solver.eigenvalues()(i) > 1e-12;
  EXPECT_EQ(rank, 4);
}

TEST(Densify, RejectsOversizedOrSingleDofInput) {
  EXPECT_THROW(oracle::densify(two_term_input(6, NoiseKind::bit_flip, 1, 0.8, 1, 0.7)), CapacityError);
  EXPECT_THROW(oracle::densify(Ensemble::pure(make_ghz_pol(3, 0, Sign::plus))), StageError);
}

TEST(NetworkUnitary, IsAPermutationMatrix) {
  for (int m = 2; m <= 4; ++m) {
    const Eigen::MatrixXd u = oracle::network_unitary(m, standard_element_chain());
    const auto dim = u.rows();
    EXPECT_LT((u.transpose() * u - Eigen::MatrixXd::Identity(dim, dim)).norm(), 1e-15);
    for (Eigen::Index r = 0; r < dim; ++r) EXPECT_EQ(u.row(r).sum(), 1.0);
  }
}

TEST(NetworkUnitary, AgreesWithGateTablePerPhoton) {
  // One photon in (pol, mode) goes to (pol', port) per the gate table.
  const auto perm = oracle::network_permutation(2, standard_element_chain());
  const auto table = LocalGateTable::standard();
  for (std::uint32_t pol = 0; pol < 4; ++pol) {
    for (std::uint32_t mode = 0; mode < 4; ++mode) {
      Ket in{pol, mode};
      Ket expected{};
      for (int k = 0; k < 2; ++k) {
        const std::uint32_t bit = photon_bit(2, k);
        const auto row = table.row((pol & bit) ? PolBit::V : PolBit::H,
                                   (mode & bit) ? SpatialBit::mode2 : SpatialBit::mode1);
        if (row.pol == PolBit::V) expected.pol |= bit;
        if (row.port == PortBit::swap) expected.aux |= bit;
      }
      EXPECT_EQ(perm[oracle::dense_index(2, in)], oracle::dense_index(2, expected));
    }
  }
}

TEST(OracleRun, ReproducesReferenceFidelity) {
  oracle::Options options;
  options.acceptance = AcceptanceRule::bitflip();
  const auto r = oracle::run(oracle::densify(two_term_input(3, NoiseKind::bit_flip, 1, 0.8, 1, 0.7)), options);
  EXPECT_NEAR(r.output_fidelity, 0.903225806451613, 1e-12);
  EXPECT_NEAR(r.success_probability, 0.62, 1e-12);
  EXPECT_NEAR(r.total_probability, 1.0, 1e-12);
}

TEST(OracleRun, NoiselessTwoPhotonBitflipIsPerfect) {
  oracle::Options options;
  options.acceptance = AcceptanceRule::bitflip();
  const auto input = Ensemble::pure(
      tensor_hyper(make_ghz_pol(2, 0, Sign::plus), make_ghz_spatial(2, 0, Sign::plus)));
  const auto o = oracle::run(oracle::densify(input), options);
  const auto e = run_bitflip(input);
  EXPECT_NEAR(o.output_fidelity, 1.0, 1e-12);
  EXPECT_NEAR(e.output_fidelity, 1.0, 1e-12);
}

TEST(OracleRun, MatchesEngineForEveryVerifyScenario) {
  for (int m = 2; m <= 4; ++m) {
    const auto report = verify(m);
    EXPECT_TRUE(report.passed) << "m=" << m;
    for (const auto& [mode, worst] : report.worst_by_mode) EXPECT_LT(worst, kVerifyTolerance) << mode;
  }
}

TEST(OracleRun, CorruptedGateIsDetected) {
  for (int row = 0; row < 4; ++row) {
    const auto gate = LocalGateTable::standard().with_swapped_rows(row, (row + 1) % 4);
    EXPECT_FALSE(verify(3, gate).passed) << "row " << row;
  }
}

TEST(OracleRun, CapacityLimit) { EXPECT_THROW(verify(6), CapacityError); }

}  // namespace
}  // namespace ghzpur
