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

#ifndef GHZPUR_STATE_HPP_
#define GHZPUR_STATE_HPP_

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ghzpur/basis.hpp"

namespace ghzpur {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPruneTolerance = 1e-14;

/// A normalized superposition of basis kets over a fixed photon count.
///
/// Terms are kept sorted by Ket with no duplicates. Instances are immutable;
/// every transformation returns a new state.
class PureState {
 public:
  using Term = std::pair<Ket, Amplitude>;

  /// Merges duplicate kets by amplitude addition, prunes |amp| < 1e-14 and
  /// checks the result is normalized to within 1e-12.
  static PureState from_terms(int photons, Space space, std::span<const Term> terms);

  /// Same as from_terms but rescales to unit norm instead of checking it.
  /// Throws NormalizationError when every amplitude cancels.
  static PureState normalized(int photons, Space space, std::span<const Term> terms);

  int photons() const { return photons_; }
  Space space() const { return space_; }
  Stage stage() const { return stage_of(space_); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Amplitude amplitude(Ket ket) const;
  double norm_squared() const;

  std::string to_string() const;

 private:
  PureState(int photons, Space space, std::vector<Term> terms)
      : photons_(photons), space_(space), terms_(std::move(terms)) {}

  static std::vector<Term> canonicalize(int photons, Space space, std::span<const Term> terms);

  int photons_;
  Space space_;
  std::vector<Term> terms_;
};

/// <a|b>. Throws DimensionError/StageError when the states live in different spaces.
Amplitude inner(const PureState& a, const PureState& b);

/// |<a|b>| == 1 within tolerance, i.e. equal up to a global phase.
bool same_ray(const PureState& a, const PureState& b, double tolerance = kNormTolerance);

/// Amplitude-wise equality within tolerance.
bool approx_equal(const PureState& a, const PureState& b, double tolerance = kNormTolerance);

/// Probability-weighted list of pure states sharing photon count and space.
class Ensemble {
 public:
  struct Member {
    double probability;
    PureState state;
  };

  /// Requires at least one member, probabilities in (0, 1] summing to 1
  /// within 1e-12, and a common photon count and space.
  explicit Ensemble(std::vector<Member> members);

  static Ensemble pure(PureState state);

  int photons() const { return members_.front().state.photons(); }
  Space space() const { return members_.front().state.space(); }
  std::span<const Member> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<Member> members_;
};

/// Index-i GHZ state in polarization.
///
/// Index i in [0, 2^(m-1)) names the class {i, ~i} of flip patterns, read as
/// an m-bit mask with the first photon as the most significant bit (so index 1
/// flips the last photon). The leading +1 term is the lighter of the two
/// patterns; ties keep the pattern of i itself. For m = 3 this gives exactly
/// the printed Phi_0..Phi_3 family including sign placement.
PureState make_ghz_pol(int photons, unsigned index, Sign sign);

/// Same construction over the spatial-mode qubit (mode1 = 0, mode2 = 1).
PureState make_ghz_spatial(int photons, unsigned index, Sign sign);

/// The flip pattern carrying the +1 amplitude of GHZ state `index`.
std::uint32_t ghz_leading_pattern(int photons, unsigned index);

/// Joint (polarization, spatial) product state.
PureState tensor_hyper(const PureState& pol, const PureState& spatial);

/// Sum over the spatial label of |amp|^2 (or over polarization when
/// `keep_polarization` is false). Returns the reduced diagonal keyed by mask.
std::vector<std::pair<std::uint32_t, double>> reduced_diagonal(const PureState& hyper,
                                                               bool keep_polarization);

/// Sum_k p_k |<target|state_k>|^2.
double fidelity(const Ensemble& ensemble, const PureState& target);

}  // namespace ghzpur

#endif  // GHZPUR_STATE_HPP_
