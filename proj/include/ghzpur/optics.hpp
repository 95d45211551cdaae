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

#ifndef GHZPUR_OPTICS_HPP_
#define GHZPUR_OPTICS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghzpur/state.hpp"

namespace ghzpur {

struct GateOutput {
  PolBit pol;
  PortBit port;

  friend constexpr bool operator==(const GateOutput&, const GateOutput&) = default;
};

/// Per-party action of the purification network on one photon:
/// (polarization, spatial mode) in, (polarization, detector group) out.
class LocalGateTable {
 public:
  /// (H,1)->(V,keep), (H,2)->(H,swap), (V,1)->(V,swap), (V,2)->(H,keep).
  static LocalGateTable standard();

  /// Rows in (pol, spatial) order: (H,1), (H,2), (V,1), (V,2).
  static LocalGateTable from_rows(const std::array<GateOutput, 4>& rows);

  GateOutput row(PolBit pol, SpatialBit spatial) const {
    return rows_[row_index(pol, spatial)];
  }

  /// Inverse lookup. Only valid for bijective tables.
  std::pair<PolBit, SpatialBit> invert(PolBit pol, PortBit port) const;

  bool is_bijection() const;

  /// Test hook: exchanges the outputs of two rows. The result is still a
  /// bijection, so it runs through the engine but computes the wrong physics.
  LocalGateTable with_swapped_rows(int a, int b) const;

  std::span<const GateOutput> rows() const { return rows_; }

  friend bool operator==(const LocalGateTable&, const LocalGateTable&) = default;

  static constexpr int row_index(PolBit pol, SpatialBit spatial) {
    return (static_cast<int>(pol) << 1) | static_cast<int>(spatial);
  }

 private:
  explicit LocalGateTable(const std::array<GateOutput, 4>& rows) : rows_(rows) {}
  std::array<GateOutput, 4> rows_;
};

GateOutput local_gate_row(PolBit pol, SpatialBit spatial);

// Element-level model of one party's optics: PBS on each input mode, HWP45 on
// two of the four internal paths, then one beam displacer per detector group.

enum class Path : std::uint8_t {
  in1,     // mode 1 (a1)
  in2,     // mode 2 (a2)
  mid3,    // a3: H from mode 1 after its PBS
  mid4,    // a4: V from mode 2
  mid5,    // a5: V from mode 1
  mid6,    // a6: H from mode 2
  d_keep,  // detector group D1..Dm
  d_swap,  // detector group Dm+1..D2m
};

struct PathState {
  PolBit pol;
  Path path;

  friend constexpr bool operator==(const PathState&, const PathState&) = default;
};

class OpticalElement {
 public:
  enum class Kind : std::uint8_t { pbs, hwp45, beam_displacer };

  /// Splits `input` by polarization: H continues on `transmit`, V on `reflect`.
  static OpticalElement pbs(Path input, Path transmit, Path reflect);
  /// Swaps H and V on `path`.
  static OpticalElement hwp45(Path path);
  /// Merges V from `v_input` and H from `h_input` onto `output`.
  static OpticalElement beam_displacer(Path v_input, Path h_input, Path output);

  /// Photons not on one of this element's input paths pass through unchanged.
  /// Throws std::logic_error if a beam displacer receives the wrong polarization.
  PathState apply(PathState in) const;

  Kind kind() const { return kind_; }

 private:
  OpticalElement(Kind kind, Path a, Path b, Path c) : kind_(kind), a_(a), b_(b), c_(c) {}
  Kind kind_;
  Path a_;
  Path b_;
  Path c_;
};

using ElementChain = std::vector<OpticalElement>;

ElementChain standard_element_chain();

/// Pushes a photon through the chain; the photon must end on a detector path.
GateOutput propagate(const ElementChain& chain, PolBit pol, SpatialBit spatial);

/// Builds the 4-row table by propagating every input through the chain.
LocalGateTable table_from_chain(const ElementChain& chain);

/// Rewrites every hyper-space term photon-by-photon through `table`.
/// Amplitudes are unchanged; the result lives in Space::ported.
PureState apply_network(const PureState& state,
                        const LocalGateTable& table = LocalGateTable::standard());

/// Inverse of apply_network for a bijective table.
PureState invert_network(const PureState& state,
                         const LocalGateTable& table = LocalGateTable::standard());

/// H -> (H+V)/sqrt2, V -> (H-V)/sqrt2 on every photon's polarization.
PureState hadamard_pol(const PureState& state);

/// mode1 -> (mode1+mode2)/sqrt2, mode2 -> (mode1-mode2)/sqrt2 on every photon.
PureState hadamard_spatial(const PureState& state);

/// Complements polarization on the listed photons (0-based).
PureState bit_flip_pol(const PureState& state, std::span<const int> photons);

/// Complements polarization wherever `mask` has a bit set (photon layout as Ket).
PureState bit_flip_pol_mask(const PureState& state, std::uint32_t mask);

}  // namespace ghzpur

#endif  // GHZPUR_OPTICS_HPP_
