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

#include "ghzpur/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace ghzpur {

LocalGateTable LocalGateTable::standard() {
  return LocalGateTable({{
      {PolBit::V, PortBit::keep},  // (H, mode1)
      {PolBit::H, PortBit::swap},  // (H, mode2)
      {PolBit::V, PortBit::swap},  // (V, mode1)
      {PolBit::H, PortBit::keep},  // (V, mode2)
  }});
}

LocalGateTable LocalGateTable::from_rows(const std::array<GateOutput, 4>& rows) {
  return LocalGateTable(rows);
}

bool LocalGateTable::is_bijection() const {
  bool seen[4] = {false, false, false, false};
  for (const auto& out : rows_) {
    const int idx = (static_cast<int>(out.pol) << 1) | static_cast<int>(out.port);
    if (seen[idx]) return false;
    seen[idx] = true;
  }
  return true;
}

std::pair<PolBit, SpatialBit> LocalGateTable::invert(PolBit pol, PortBit port) const {
  for (int idx = 0; idx < 4; ++idx) {
    if (rows_[idx] == GateOutput{pol, port}) {
      return {static_cast<PolBit>(idx >> 1), static_cast<SpatialBit>(idx & 1)};
    }
  }
  throw std::logic_error("gate table has no row producing the requested output");
}

LocalGateTable LocalGateTable::with_swapped_rows(int a, int b) const {
  if (a < 0 || a > 3 || b < 0 || b > 3) throw std::out_of_range("gate row index must be 0..3");
  auto rows = rows_;
  std::swap(rows[a], rows[b]);
  return LocalGateTable(rows);
}

GateOutput local_gate_row(PolBit pol, SpatialBit spatial) {
  return LocalGateTable::standard().row(pol, spatial);
}

OpticalElement OpticalElement::pbs(Path input, Path transmit, Path reflect) {
  return OpticalElement(Kind::pbs, input, transmit, reflect);
}

OpticalElement OpticalElement::hwp45(Path path) {
  return OpticalElement(Kind::hwp45, path, path, path);
}

OpticalElement OpticalElement::beam_displacer(Path v_input, Path h_input, Path output) {
  return OpticalElement(Kind::beam_displacer, v_input, h_input, output);
}

PathState OpticalElement::apply(PathState in) const {
  switch (kind_) {
    case Kind::pbs:
      if (in.path != a_) return in;
      return {in.pol, in.pol == PolBit::H ? b_ : c_};
    case Kind::hwp45:
      if (in.path != a_) return in;
      return {in.pol == PolBit::H ? PolBit::V : PolBit::H, in.path};
    case Kind::beam_displacer:
      if (in.path == a_) {
        if (in.pol != PolBit::V) throw std::logic_error("beam displacer: H on the V input");
        return {in.pol, c_};
      }
      if (in.path == b_) {
        if (in.pol != PolBit::H) throw std::logic_error("beam displacer: V on the H input");
        return {in.pol, c_};
      }
      return in;
  }
  return in;
}

ElementChain standard_element_chain() {
  return {
      OpticalElement::pbs(Path::in1, Path::mid3, Path::mid5),
      OpticalElement::pbs(Path::in2, Path::mid6, Path::mid4),
      OpticalElement::hwp45(Path::mid3),
      OpticalElement::hwp45(Path::mid4),
      OpticalElement::beam_displacer(Path::mid3, Path::mid4, Path::d_keep),
      OpticalElement::beam_displacer(Path::mid5, Path::mid6, Path::d_swap),
  };
}

GateOutput propagate(const ElementChain& chain, PolBit pol, SpatialBit spatial) {
  PathState st{pol, spatial == SpatialBit::mode1 ? Path::in1 : Path::in2};
  for (const auto& element : chain) st = element.apply(st);
  if (st.path == Path::d_keep) return {st.pol, PortBit::keep};
  if (st.path == Path::d_swap) return {st.pol, PortBit::swap};
  throw std::logic_error("photon did not reach a detector group");
}

LocalGateTable table_from_chain(const ElementChain& chain) {
  std::array<GateOutput, 4> rows{};
  for (int pol = 0; pol < 2; ++pol) {
    for (int sp = 0; sp < 2; ++sp) {
      rows[(pol << 1) | sp] =
          propagate(chain, static_cast<PolBit>(pol), static_cast<SpatialBit>(sp));
    }
  }
  return LocalGateTable::from_rows(rows);
}

PureState apply_network(const PureState& state, const LocalGateTable& table) {
  if (state.space() != Space::hyper) {
    throw StageError("apply_network expects an input-stage hyper state, got " +
                     to_string(state.space()));
  }
  const int m = state.photons();
  std::vector<PureState::Term> terms;
  terms.reserve(state.size());
  for (const auto& [ket, amp] : state.terms()) {
    Ket out{};
    for (int k = 0; k < m; ++k) {
      const std::uint32_t bit = photon_bit(m, k);
      const auto row = table.row(static_cast<PolBit>((ket.pol & bit) != 0),
                                 static_cast<SpatialBit>((ket.aux & bit) != 0));
      if (row.pol == PolBit::V) out.pol |= bit;
      if (row.port == PortBit::swap) out.aux |= bit;
    }
    terms.emplace_back(out, amp);
  }
  // A non-bijective table can merge terms, so renormalize rather than assert.
  if (!table.is_bijection()) return PureState::normalized(m, Space::ported, terms);
  return PureState::from_terms(m, Space::ported, terms);
}

PureState invert_network(const PureState& state, const LocalGateTable& table) {
  if (state.space() != Space::ported) {
    throw StageError("invert_network expects an output-stage state");
  }
  if (!table.is_bijection()) throw std::invalid_argument("gate table is not invertible");
  const int m = state.photons();
  std::vector<PureState::Term> terms;
  terms.reserve(state.size());
  for (const auto& [ket, amp] : state.terms()) {
    Ket in{};
    for (int k = 0; k < m; ++k) {
      const std::uint32_t bit = photon_bit(m, k);
      const auto [pol, sp] = table.invert(static_cast<PolBit>((ket.pol & bit) != 0),
                                          static_cast<PortBit>((ket.aux & bit) != 0));
      if (pol == PolBit::V) in.pol |= bit;
      if (sp == SpatialBit::mode2) in.aux |= bit;
    }
    terms.emplace_back(in, amp);
  }
  return PureState::from_terms(m, Space::hyper, terms);
}

namespace {

// Applies the 2x2 Hadamard to one bit of every photon, selected by `on_pol`.
PureState hadamard_layer(const PureState& state, bool on_pol) {
  const int m = state.photons();
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<PureState::Term> current(state.terms().begin(), state.terms().end());
  for (int k = 0; k < m; ++k) {
    const std::uint32_t bit = photon_bit(m, k);
    std::vector<PureState::Term> next;
    next.reserve(current.size() * 2);
    for (const auto& [ket, amp] : current) {
      const std::uint32_t value = on_pol ? ket.pol : ket.aux;
      const bool one = (value & bit) != 0;
      Ket zero_ket = ket;
      Ket one_ket = ket;
      (on_pol ? zero_ket.pol : zero_ket.aux) &= ~bit;
      (on_pol ? one_ket.pol : one_ket.aux) |= bit;
      next.emplace_back(zero_ket, amp * r);
      next.emplace_back(one_ket, one ? -amp * r : amp * r);
    }
    // Merge after each photon so interference cancels before the next split.
    const auto merged = PureState::normalized(m, state.space(), next);
    current.assign(merged.terms().begin(), merged.terms().end());
  }
  return PureState::from_terms(m, state.space(), current);
}

}  // namespace

PureState hadamard_pol(const PureState& state) {
  if (!has_polarization(state.space())) {
    throw StageError("hadamard_pol needs a polarization qubit, got " + to_string(state.space()));
  }
  return hadamard_layer(state, true);
}

PureState hadamard_spatial(const PureState& state) {
  if (state.space() != Space::spatial && state.space() != Space::hyper) {
    throw StageError("hadamard_spatial needs an input-stage spatial qubit, got " +
                     to_string(state.space()));
  }
  return hadamard_layer(state, false);
}

PureState bit_flip_pol_mask(const PureState& state, std::uint32_t mask) {
  if (!has_polarization(state.space())) {
    throw StageError("bit_flip_pol needs a polarization qubit");
  }
  if ((mask & ~full_mask(state.photons())) != 0) {
    throw std::out_of_range("bit-flip mask addresses photons beyond the state");
  }
  std::vector<PureState::Term> terms;
  terms.reserve(state.size());
  for (const auto& [ket, amp] : state.terms()) terms.emplace_back(Ket{ket.pol ^ mask, ket.aux}, amp);
  return PureState::from_terms(state.photons(), state.space(), terms);
}

PureState bit_flip_pol(const PureState& state, std::span<const int> photons) {
  std::uint32_t mask = 0;
  for (int k : photons) {
    if (k < 0 || k >= state.photons()) {
      throw std::out_of_range("photon index " + std::to_string(k) + " out of range for m = " +
                              std::to_string(state.photons()));
    }
    mask |= photon_bit(state.photons(), k);
  }
  return bit_flip_pol_mask(state, mask);
}

}  // namespace ghzpur
