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

#ifndef GHZPUR_NOISE_HPP_
#define GHZPUR_NOISE_HPP_

#include <span>
#include <string>
#include <vector>

#include "ghzpur/state.hpp"

namespace ghzpur {

enum class Dof : std::uint8_t { polarization, spatial };
enum class NoiseKind : std::uint8_t { bit_flip, phase_flip };

std::string to_string(Dof dof);
std::string to_string(NoiseKind kind);

/// One error component of a GHZ channel, modelled at the state level.
///
/// A bit-flip with index i in [1, 2^(m-1)) turns the ideal state into the
/// index-i GHZ state of the same sign. A phase-flip turns it into the
/// opposite-sign companion of GHZ state `index` (0 by default). `weight` is
/// the probability of that component.
struct NoiseSpec {
  Dof dof = Dof::polarization;
  NoiseKind kind = NoiseKind::bit_flip;
  unsigned index = 1;
  double weight = 0.0;
};

class NonOrthogonalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {F: good, 1-F: bad}. Weights of exactly 0 or 1 collapse to one member.
Ensemble mix_two(const PureState& good, const PureState& bad, double fidelity);

/// General orthogonal mixture; zero weights are dropped.
Ensemble mix_general(std::span<const PureState> states, std::span<const double> weights);

/// Ensemble over tensor_hyper of every (pol, spatial) member pair.
Ensemble product_ensemble(const Ensemble& pol, const Ensemble& spatial);

/// GHZ state of one DOF for a given photon count.
PureState ghz_for(Dof dof, int photons, unsigned index, Sign sign);

/// The ideal index-0 '+' GHZ state degraded by the listed error components.
/// The ideal component keeps weight 1 - sum(weights).
Ensemble noisy_ghz(int photons, Dof dof, std::span<const NoiseSpec> noise);

}  // namespace ghzpur

#endif  // GHZPUR_NOISE_HPP_
