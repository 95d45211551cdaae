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

#ifndef GHZPUR_TESTS_TEST_UTIL_HPP_
#define GHZPUR_TESTS_TEST_UTIL_HPP_

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ghzpur/noise.hpp"
#include "ghzpur/state.hpp"

namespace ghzpur::testing {

// Three-photon ket from a letter string: "HVV" for polarization, "122" for
// spatial modes. The first letter is photon A.
inline std::uint32_t bits_from(const std::string& word) {
  std::uint32_t mask = 0;
  for (char c : word) mask = (mask << 1) | ((c == 'V' || c == '2') ? 1u : 0u);
  return mask;
}

inline PureState literal_state(Space space, double scale,
                               const std::vector<std::pair<std::string, double>>& terms) {
  std::vector<PureState::Term> out;
  for (const auto& [word, sign] : terms) {
    const std::uint32_t bits = bits_from(word);
    const Ket ket = space == Space::spatial ? Ket{0, bits} : Ket{bits, 0};
    out.push_back({ket, Amplitude(sign * scale, 0.0)});
  }
  return PureState::from_terms(static_cast<int>(terms.front().first.size()), space, out);
}

// The three-photon GHZ basis exactly as printed in the reference tables.
inline PureState printed_ghz(Space space, int index, int sign) {
  static const std::array<std::array<const char*, 2>, 4> kPol = {
      {{"HHH", "VVV"}, {"HHV", "VVH"}, {"HVH", "VHV"}, {"VHH", "HVV"}}};
  static const std::array<std::array<const char*, 2>, 4> kSpatial = {
      {{"111", "222"}, {"112", "221"}, {"121", "212"}, {"211", "122"}}};
  const auto& row = space == Space::spatial ? kSpatial[index] : kPol[index];
  return literal_state(space, 1.0 / std::sqrt(2.0), {{row[0], 1.0}, {row[1], sign}});
}

// The Hadamard-basis table as printed: index i, sign s.
inline PureState printed_hadamard(Space space, int index, int sign) {
  static const std::array<std::array<double, 4>, 4> kSigns = {
      {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};
  const bool spatial = space == Space::spatial;
  const std::array<const char*, 4> even =
      spatial ? std::array<const char*, 4>{"111", "122", "212", "221"}
              : std::array<const char*, 4>{"HHH", "HVV", "VHV", "VVH"};
  const std::array<const char*, 4> odd =
      spatial ? std::array<const char*, 4>{"112", "121", "211", "222"}
              : std::array<const char*, 4>{"HHV", "HVH", "VHH", "VVV"};
  const auto& words = sign > 0 ? even : odd;
  std::vector<std::pair<std::string, double>> terms;
  for (int t = 0; t < 4; ++t) terms.push_back({words[t], kSigns[index][t]});
  return literal_state(space, 0.5, terms);
}

// Two-term noisy GHZ input of the kind used throughout the tests.
inline Ensemble two_term_input(int m, NoiseKind kind, unsigned pol_index, double fa,
                               unsigned spatial_index, double fb) {
  const NoiseSpec pol[] = {{Dof::polarization, kind, pol_index, 1.0 - fa}};
  const NoiseSpec sp[] = {{Dof::spatial, kind, spatial_index, 1.0 - fb}};
  return product_ensemble(noisy_ghz(m, Dof::polarization, pol), noisy_ghz(m, Dof::spatial, sp));
}

inline std::vector<double> unit_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 9; ++i) out.push_back(i / 10.0);
  return out;
}

}  // namespace ghzpur::testing

#endif  // GHZPUR_TESTS_TEST_UTIL_HPP_
