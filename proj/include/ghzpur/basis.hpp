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

#ifndef GHZPUR_BASIS_HPP_
#define GHZPUR_BASIS_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghzpur {

/// Largest photon count any bit-mask based state supports.
inline constexpr int kMaxPhotons = 16;

enum class PolBit : std::uint8_t { H = 0, V = 1 };
enum class SpatialBit : std::uint8_t { mode1 = 0, mode2 = 1 };
enum class PortBit : std::uint8_t { keep = 0, swap = 1 };
enum class Sign : std::int8_t { plus = 1, minus = -1 };

/// Which degrees of freedom a state carries.
///
/// `polarization` and `spatial` hold a single qubit per photon. `hyper` holds
/// (polarization, spatial mode) per photon before the purification network;
/// `ported` holds (polarization, detector port group) after it.
enum class Space : std::uint8_t { polarization, spatial, hyper, ported };

enum class Stage : std::uint8_t { input, output };

constexpr Stage stage_of(Space space) {
  return space == Space::ported ? Stage::output : Stage::input;
}

constexpr bool has_polarization(Space space) { return space != Space::spatial; }

std::string to_string(Space space);

/// One computational basis ket over m photons.
///
/// Photon k (0-based, photon 0 = the first party) lives at bit (m - 1 - k) of
/// each mask, so the mask read as a binary number lists photons left to right.
/// `pol` holds polarization bits (V = 1). `aux` holds the spatial-mode bits
/// (mode2 = 1) or the port bits (swap = 1), depending on the owning Space.
/// Single-DOF spaces keep the unused mask at zero.
struct Ket {
  std::uint32_t pol = 0;
  std::uint32_t aux = 0;

  friend constexpr auto operator<=>(const Ket&, const Ket&) = default;
};

constexpr std::uint32_t photon_bit(int photons, int photon) {
  return std::uint32_t{1} << (photons - 1 - photon);
}

constexpr std::uint32_t full_mask(int photons) {
  return photons >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << photons) - 1;
}

// Error taxonomy. Every library failure derives from std::invalid_argument or
// std::out_of_range so callers can treat them as domain errors.

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void check_photon_count(int photons);

}  // namespace ghzpur

#endif  // GHZPUR_BASIS_HPP_
