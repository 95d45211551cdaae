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

#include <cmath>
#include <sstream>

namespace ghzpur {

std::string to_string(Dof dof) {
  return dof == Dof::polarization ? "polarization" : "spatial";
}

std::string to_string(NoiseKind kind) {
  return kind == NoiseKind::bit_flip ? "bit-flip" : "phase-flip";
}

namespace {

constexpr double kOrthogonalityTolerance = 1e-12;

void check_weight(double w) {
  if (!(w >= 0.0 && w <= 1.0)) {
    std::ostringstream msg;
    msg << "mixture weight " << w << " outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

Ensemble mix_two(const PureState& good, const PureState& bad, double fidelity) {
  check_weight(fidelity);
  if (std::abs(inner(good, bad)) > kOrthogonalityTolerance) {
    throw NonOrthogonalError("mix_two: components are not orthogonal");
  }
  std::vector<Ensemble::Member> members;
  if (fidelity > 0.0) members.push_back({fidelity, good});
  if (fidelity < 1.0) members.push_back({1.0 - fidelity, bad});
  return Ensemble(std::move(members));
}

Ensemble mix_general(std::span<const PureState> states, std::span<const double> weights) {
  if (states.size() != weights.size() || states.empty()) {
    throw std::invalid_argument("mix_general: need one weight per state");
  }
  double total = 0.0;
  for (double w : weights) {
    check_weight(w);
    total += w;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "mix_general: weights sum to " << total;
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (std::abs(inner(states[i], states[j])) > kOrthogonalityTolerance) {
        throw NonOrthogonalError("mix_general: states " + std::to_string(i) + " and " +
                                 std::to_string(j) + " are not orthogonal");
      }
    }
  }
  std::vector<Ensemble::Member> members;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (weights[i] > 0.0) members.push_back({weights[i], states[i]});
  }
  return Ensemble(std::move(members));
}

Ensemble product_ensemble(const Ensemble& pol, const Ensemble& spatial) {
  if (pol.photons() != spatial.photons()) {
    throw DimensionError("product_ensemble: photon counts differ");
  }
  std::vector<Ensemble::Member> members;
  members.reserve(pol.size() * spatial.size());
  for (const auto& p : pol.members()) {
    for (const auto& s : spatial.members()) {
      members.push_back({p.probability * s.probability, tensor_hyper(p.state, s.state)});
    }
  }
  return Ensemble(std::move(members));
}

PureState ghz_for(Dof dof, int photons, unsigned index, Sign sign) {
  return dof == Dof::polarization ? make_ghz_pol(photons, index, sign)
                                  : make_ghz_spatial(photons, index, sign);
}

Ensemble noisy_ghz(int photons, Dof dof, std::span<const NoiseSpec> noise) {
  check_photon_count(photons);
  std::vector<PureState> states{ghz_for(dof, photons, 0, Sign::plus)};
  std::vector<double> weights{1.0};
  const unsigned classes = 1u << (photons - 1);
  for (const auto& spec : noise) {
    if (spec.dof != dof) {
      throw std::invalid_argument("noise spec for " + to_string(spec.dof) + " applied to " +
                                  to_string(dof));
    }
    check_weight(spec.weight);
    if (spec.index >= classes) {
      throw std::out_of_range(to_string(spec.kind) + " index " + std::to_string(spec.index) +
                              " out of range for m = " + std::to_string(photons));
    }
    if (spec.kind == NoiseKind::bit_flip && spec.index == 0) {
      throw std::out_of_range("bit-flip index must be >= 1 (index 0 is the ideal state)");
    }
    const Sign sign = spec.kind == NoiseKind::bit_flip ? Sign::plus : Sign::minus;
    states.push_back(ghz_for(dof, photons, spec.index, sign));
    weights.push_back(spec.weight);
    weights.front() -= spec.weight;
  }
  if (weights.front() < -kNormTolerance) {
    throw std::invalid_argument("noise weights for " + to_string(dof) + " exceed 1");
  }
  if (weights.front() < 0.0) weights.front() = 0.0;
  return mix_general(states, weights);
}

}  // namespace ghzpur
