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

#include "ghzpur/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

namespace ghzpur {

std::string to_string(Space space) {
  switch (space) {
    case Space::polarization:
      return "polarization";
    case Space::spatial:
      return "spatial";
    case Space::hyper:
      return "hyper";
    case Space::ported:
      return "ported";
  }
  return "?";
}

void check_photon_count(int photons) {
  if (photons < 2 || photons > kMaxPhotons) {
    throw DimensionError("photon count must be in [2, " + std::to_string(kMaxPhotons) +
                         "], got " + std::to_string(photons));
  }
}

namespace {

void require_same_space(const PureState& a, const PureState& b, const char* what) {
  if (a.photons() != b.photons()) {
    throw DimensionError(std::string(what) + ": photon counts differ (" +
                         std::to_string(a.photons()) + " vs " + std::to_string(b.photons()) + ")");
  }
  if (a.space() != b.space()) {
    throw StageError(std::string(what) + ": spaces differ (" + to_string(a.space()) + " vs " +
                     to_string(b.space()) + ")");
  }
}

}  // namespace

std::vector<PureState::Term> PureState::canonicalize(int photons, Space space,
                                                     std::span<const Term> terms) {
  check_photon_count(photons);
  const std::uint32_t mask = full_mask(photons);
  std::map<Ket, Amplitude> merged;
  for (const auto& [ket, amp] : terms) {
    if ((ket.pol & ~mask) != 0 || (ket.aux & ~mask) != 0) {
      throw DimensionError("basis ket has bits beyond photon count " + std::to_string(photons));
    }
    if ((space == Space::polarization && ket.aux != 0) ||
        (space == Space::spatial && ket.pol != 0)) {
      throw StageError("single-DOF state carries a label for the other DOF");
    }
    merged[ket] += amp;
  }
  std::vector<Term> out;
  out.reserve(merged.size());
  for (const auto& [ket, amp] : merged) {
    if (std::abs(amp) >= kPruneTolerance) out.emplace_back(ket, amp);
  }
  return out;
}

PureState PureState::from_terms(int photons, Space space, std::span<const Term> terms) {
  PureState state(photons, space, canonicalize(photons, space, terms));
  const double norm2 = state.norm_squared();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state is not normalized: sum |amp|^2 = " << norm2;
    throw NormalizationError(msg.str());
  }
  return state;
}

PureState PureState::normalized(int photons, Space space, std::span<const Term> terms) {
  auto canon = canonicalize(photons, space, terms);
  double norm2 = 0.0;
  for (const auto& term : canon) norm2 += std::norm(term.second);
  if (canon.empty() || norm2 <= 0.0) {
    throw NormalizationError("cannot normalize the zero vector");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& term : canon) term.second *= scale;
  return PureState(photons, space, std::move(canon));
}

Amplitude PureState::amplitude(Ket ket) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), ket,
                             [](const Term& t, const Ket& k) { return t.first < k; });
  if (it == terms_.end() || it->first != ket) return {};
  return it->second;
}

double PureState::norm_squared() const {
  double sum = 0.0;
  for (const auto& term : terms_) sum += std::norm(term.second);
  return sum;
}

std::string PureState::to_string() const {
  std::ostringstream out;
  out.precision(6);
  bool first = true;
  for (const auto& [ket, amp] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << amp.real();
    if (amp.imag() != 0.0) out << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i";
    out << ")|";
    for (int k = 0; k < photons_; ++k) {
      const std::uint32_t bit = photon_bit(photons_, k);
      if (k > 0) out << ' ';
      switch (space_) {
        case Space::polarization:
          out << ((ket.pol & bit) ? 'V' : 'H');
          break;
        case Space::spatial:
          out << ((ket.aux & bit) ? '2' : '1');
          break;
        case Space::hyper:
          out << ((ket.pol & bit) ? 'V' : 'H') << ((ket.aux & bit) ? '2' : '1');
          break;
        case Space::ported:
          out << ((ket.pol & bit) ? 'V' : 'H') << ((ket.aux & bit) ? 's' : 'k');
          break;
      }
    }
    out << ">";
  }
  return out.str();
}

Amplitude inner(const PureState& a, const PureState& b) {
  require_same_space(a, b, "inner");
  Amplitude sum{};
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ta.size() && j < tb.size()) {
    if (ta[i].first < tb[j].first) {
      ++i;
    } else if (tb[j].first < ta[i].first) {
      ++j;
    } else {
      sum += std::conj(ta[i].second) * tb[j].second;
      ++i;
      ++j;
    }
  }
  return sum;
}

bool same_ray(const PureState& a, const PureState& b, double tolerance) {
  return std::abs(std::abs(inner(a, b)) - 1.0) <= tolerance;
}

bool approx_equal(const PureState& a, const PureState& b, double tolerance) {
  if (a.photons() != b.photons() || a.space() != b.space()) return false;
  for (const auto& [ket, amp] : a.terms()) {
    if (std::abs(amp - b.amplitude(ket)) > tolerance) return false;
  }
  for (const auto& [ket, amp] : b.terms()) {
    if (std::abs(amp - a.amplitude(ket)) > tolerance) return false;
  }
  return true;
}

Ensemble::Ensemble(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("ensemble has no members");
  double total = 0.0;
  for (const auto& member : members_) {
    if (!(member.probability > 0.0) || member.probability > 1.0 + kNormTolerance) {
      throw std::invalid_argument("ensemble probabilities must lie in (0, 1]");
    }
    if (member.state.photons() != members_.front().state.photons()) {
      throw DimensionError("ensemble members disagree on photon count");
    }
    if (member.state.space() != members_.front().state.space()) {
      throw StageError("ensemble members disagree on space");
    }
    total += member.probability;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ensemble probabilities sum to " << total;
    throw std::invalid_argument(msg.str());
  }
}

Ensemble Ensemble::pure(PureState state) {
  std::vector<Member> members;
  members.push_back({1.0, std::move(state)});
  return Ensemble(std::move(members));
}

std::uint32_t ghz_leading_pattern(int photons, unsigned index) {
  check_photon_count(photons);
  if (index >= (1u << (photons - 1))) {
    throw std::out_of_range("GHZ index " + std::to_string(index) + " out of range [0, " +
                            std::to_string(1u << (photons - 1)) + ") for m = " +
                            std::to_string(photons));
  }
  const std::uint32_t pattern = index;
  const std::uint32_t complement = ~pattern & full_mask(photons);
  return std::popcount(complement) < std::popcount(pattern) ? complement : pattern;
}

namespace {

PureState make_ghz(int photons, unsigned index, Sign sign, Space space) {
  const std::uint32_t lead = ghz_leading_pattern(photons, index);
  const std::uint32_t tail = ~lead & full_mask(photons);
  const double r = 1.0 / std::sqrt(2.0);
  const double s = sign == Sign::plus ? r : -r;
  auto ket = [space](std::uint32_t mask) {
    return space == Space::polarization ? Ket{mask, 0} : Ket{0, mask};
  };
  const PureState::Term terms[] = {{ket(lead), r}, {ket(tail), s}};
  return PureState::from_terms(photons, space, terms);
}

}  // namespace

PureState make_ghz_pol(int photons, unsigned index, Sign sign) {
  return make_ghz(photons, index, sign, Space::polarization);
}

PureState make_ghz_spatial(int photons, unsigned index, Sign sign) {
  return make_ghz(photons, index, sign, Space::spatial);
}

PureState tensor_hyper(const PureState& pol, const PureState& spatial) {
  if (pol.photons() != spatial.photons()) {
    throw DimensionError("tensor_hyper: photon counts differ (" + std::to_string(pol.photons()) +
                         " vs " + std::to_string(spatial.photons()) + ")");
  }
  if (pol.space() != Space::polarization || spatial.space() != Space::spatial) {
    throw StageError("tensor_hyper expects a polarization state and a spatial state");
  }
  std::vector<PureState::Term> terms;
  terms.reserve(pol.size() * spatial.size());
  for (const auto& [pk, pa] : pol.terms()) {
    for (const auto& [sk, sa] : spatial.terms()) {
      terms.emplace_back(Ket{pk.pol, sk.aux}, pa * sa);
    }
  }
  return PureState::from_terms(pol.photons(), Space::hyper, terms);
}

std::vector<std::pair<std::uint32_t, double>> reduced_diagonal(const PureState& hyper,
                                                               bool keep_polarization) {
  if (hyper.space() != Space::hyper && hyper.space() != Space::ported) {
    throw StageError("reduced_diagonal expects a two-DOF state");
  }
  std::map<std::uint32_t, double> diag;
  for (const auto& [ket, amp] : hyper.terms()) {
    diag[keep_polarization ? ket.pol : ket.aux] += std::norm(amp);
  }
  return {diag.begin(), diag.end()};
}

double fidelity(const Ensemble& ensemble, const PureState& target) {
  double sum = 0.0;
  for (const auto& member : ensemble.members()) {
    sum += member.probability * std::norm(inner(target, member.state));
  }
  return sum;
}

}  // namespace ghzpur
