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

#ifndef GHZPUR_ORACLE_HPP_
#define GHZPUR_ORACLE_HPP_

#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ghzpur/optics.hpp"
#include "ghzpur/protocol.hpp"
#include "ghzpur/state.hpp"

namespace ghzpur::oracle {

inline constexpr int kMaxPhotons = 5;

/// Density operator over the 4^m joint space. Index of a basis ket is
/// sum_k (2 pol_k + aux_k) 4^(m-1-k), i.e. lexicographic over (pol, aux) per photon.
struct DenseState {
  int photons = 0;
  Space space = Space::hyper;
  Eigen::MatrixXcd rho;
};

std::size_t dense_index(int photons, Ket ket);

/// sum_k p_k |psi_k><psi_k|. Throws CapacityError for m > 5.
DenseState densify(const Ensemble& ensemble);

/// Permutation taking input index to output index for the whole network,
/// assembled from the element-level optics chain.
std::vector<std::size_t> network_permutation(int photons, const ElementChain& chain);

/// The same permutation as an explicit real matrix, for inspection.
Eigen::MatrixXd network_unitary(int photons, const ElementChain& chain);

struct Options {
  bool hadamard_layers = false;
  AcceptanceRule acceptance = AcceptanceRule::general();
  CorrectionPlan corrections = CorrectionPlan::identity();
  std::optional<PureState> target;
  ElementChain chain = standard_element_chain();
};

struct PatternOutcome {
  double probability;
  double fidelity;
  Eigen::MatrixXcd polarization;  // normalized, post-correction, 2^m x 2^m
};

struct Result {
  int photons = 0;
  std::map<PortPattern, PatternOutcome> accepted;
  std::map<PortPattern, double> pattern_probabilities;
  double total_probability = 0.0;  // trace before projection
  double success_probability = 0.0;
  double rejected_probability = 0.0;
  double output_fidelity = 0.0;
};

Result run(const DenseState& input, const Options& options);

/// Worst absolute deviation between engine and oracle over success,
/// rejection, fidelity and every pattern probability.
double max_deviation(const ProtocolResult& engine, const Result& oracle);

}  // namespace ghzpur::oracle

#endif  // GHZPUR_ORACLE_HPP_
