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

#ifndef GHZPUR_PROTOCOL_HPP_
#define GHZPUR_PROTOCOL_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghzpur/optics.hpp"
#include "ghzpur/state.hpp"

namespace ghzpur {

/// Which detector group each photon reached. Bit layout matches Ket::aux.
struct PortPattern {
  int photons = 0;
  std::uint32_t swaps = 0;

  int swap_count() const;
  /// One character per photon: 'k' (D1..Dm) or 's' (Dm+1..D2m).
  std::string to_string() const;
  static PortPattern parse(std::string_view text);

  friend auto operator<=>(const PortPattern&, const PortPattern&) = default;
};

class AcceptanceRule {
 public:
  enum class Kind : std::uint8_t {
    matched,      // every photon in the keep group, or every photon in the swap group
    even_swaps,   // an even number of photons in the swap group
    all,          // every pattern
  };

  static AcceptanceRule bitflip() { return AcceptanceRule(Kind::matched); }
  static AcceptanceRule phaseflip() { return AcceptanceRule(Kind::even_swaps); }
  static AcceptanceRule general() { return AcceptanceRule(Kind::all); }

  explicit AcceptanceRule(Kind kind) : kind_(kind) {}

  Kind kind() const { return kind_; }
  bool accepts(const PortPattern& pattern) const;
  std::string name() const;

 private:
  Kind kind_;
};

struct CorrectionOp {
  enum class Kind : std::uint8_t { flip, hadamard };
  Kind kind = Kind::flip;
  std::uint32_t mask = 0;  // photons flipped; unused for hadamard

  friend bool operator==(const CorrectionOp&, const CorrectionOp&) = default;
};

/// Deterministic, pattern-conditioned local unitaries applied after post-selection.
class CorrectionPlan {
 public:
  enum class Policy : std::uint8_t {
    identity,
    flip_all_then_hadamard,  // undoes the Hadamard basis change of the phase-flip pipeline
    minority_flip,           // flip polarization of the smaller port group (keep group on ties)
    table,                   // explicit per-pattern ops, identity elsewhere
  };

  static CorrectionPlan identity() { return CorrectionPlan(Policy::identity); }
  static CorrectionPlan phaseflip_standard() { return CorrectionPlan(Policy::flip_all_then_hadamard); }
  static CorrectionPlan minority_flip() { return CorrectionPlan(Policy::minority_flip); }
  static CorrectionPlan from_table(std::map<PortPattern, std::vector<CorrectionOp>> table);

  Policy policy() const { return policy_; }
  std::vector<CorrectionOp> ops_for(const PortPattern& pattern) const;
  const std::map<PortPattern, std::vector<CorrectionOp>>& table() const { return table_; }
  std::string name() const;

 private:
  explicit CorrectionPlan(Policy policy) : policy_(policy) {}
  Policy policy_;
  std::map<PortPattern, std::vector<CorrectionOp>> table_;
};

/// Applies a correction sequence to a polarization-space state.
PureState apply_corrections(const PureState& state, const std::vector<CorrectionOp>& ops);

struct PatternOutcome {
  double probability;
  Ensemble polarization;  // post-correction, normalized
  double fidelity;        // against the run's target
};

struct ProtocolResult {
  int photons = 0;
  std::map<PortPattern, PatternOutcome> accepted;
  std::map<PortPattern, double> pattern_probabilities;  // every pattern with nonzero weight
  double success_probability = 0.0;
  double rejected_probability = 0.0;
  double output_fidelity = 0.0;

  /// Accepted patterns merged into one polarization ensemble.
  Ensemble merged() const;
};

struct ProtocolOptions {
  bool hadamard_layers = false;  // Hadamard on both DOFs before the network
  AcceptanceRule acceptance = AcceptanceRule::general();
  CorrectionPlan corrections = CorrectionPlan::identity();
  std::optional<PureState> target;  // defaults to the index-0 '+' polarization GHZ state
  LocalGateTable gate = LocalGateTable::standard();
  int threads = 1;
};

/// Full pipeline: optional Hadamard layers, network, post-selection by port
/// pattern, per-pattern corrections, fidelity against the target.
/// Throws std::domain_error when no accepted pattern has nonzero probability.
ProtocolResult run_protocol(const Ensemble& input, const ProtocolOptions& options);

ProtocolResult run_bitflip(const Ensemble& input);
ProtocolResult run_phaseflip(const Ensemble& input);
ProtocolResult run_general(const Ensemble& input, const CorrectionPlan& corrections,
                           const AcceptanceRule& acceptance = AcceptanceRule::general());

/// Per-pattern bit-flip corrections chosen to maximize fidelity with the
/// target, given the input ensemble (i.e. knowledge of the noise model).
/// Among equally good masks the one with fewer flips, then the smaller mask, wins.
CorrectionPlan posterior_flip_plan(const Ensemble& input, const ProtocolOptions& options);

/// F' = FaFb / (FaFb + (1-Fa)(1-Fb)). Throws std::domain_error when the
/// denominator vanishes ({Fa, Fb} = {0, 1}).
double closed_form_fidelity_pair(double fa, double fb);

/// FaFb + (1-Fa)(1-Fb).
double closed_form_success_pair(double fa, double fb);

/// F'_i = F_i F_{i+4} / sum_j F_j F_{j+4}, polarization weights first.
std::array<double, 4> closed_form_fidelity_general(const std::array<double, 4>& pol_weights,
                                                   const std::array<double, 4>& spatial_weights);

}  // namespace ghzpur

#endif  // GHZPUR_PROTOCOL_HPP_
