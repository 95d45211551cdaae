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

#include "ghzpur/protocol.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ghzpur {

int PortPattern::swap_count() const { return std::popcount(swaps); }

std::string PortPattern::to_string() const {
  std::string out(static_cast<std::size_t>(photons), 'k');
  for (int k = 0; k < photons; ++k) {
    if (swaps & photon_bit(photons, k)) out[static_cast<std::size_t>(k)] = 's';
  }
  return out;
}

PortPattern PortPattern::parse(std::string_view text) {
  const int m = static_cast<int>(text.size());
  check_photon_count(m);
  PortPattern pattern{m, 0};
  for (int k = 0; k < m; ++k) {
    const char c = text[static_cast<std::size_t>(k)];
    if (c == 's') {
      pattern.swaps |= photon_bit(m, k);
    } else if (c != 'k') {
      throw std::invalid_argument("port pattern characters must be 'k' or 's'");
    }
  }
  return pattern;
}

bool AcceptanceRule::accepts(const PortPattern& pattern) const {
  switch (kind_) {
    case Kind::matched:
      return pattern.swaps == 0 || pattern.swaps == full_mask(pattern.photons);
    case Kind::even_swaps:
      return pattern.swap_count() % 2 == 0;
    case Kind::all:
      return true;
  }
  return false;
}

std::string AcceptanceRule::name() const {
  switch (kind_) {
    case Kind::matched:
      return "matched";
    case Kind::even_swaps:
      return "even";
    case Kind::all:
      return "all";
  }
  return "?";
}

CorrectionPlan CorrectionPlan::from_table(std::map<PortPattern, std::vector<CorrectionOp>> table) {
  CorrectionPlan plan(Policy::table);
  plan.table_ = std::move(table);
  return plan;
}

std::vector<CorrectionOp> CorrectionPlan::ops_for(const PortPattern& pattern) const {
  const std::uint32_t all = full_mask(pattern.photons);
  switch (policy_) {
    case Policy::identity:
      return {};
    case Policy::flip_all_then_hadamard:
      return {{CorrectionOp::Kind::flip, all}, {CorrectionOp::Kind::hadamard, 0}};
    case Policy::minority_flip: {
      const int swaps = pattern.swap_count();
      const int keeps = pattern.photons - swaps;
      const std::uint32_t mask = swaps < keeps ? pattern.swaps : (~pattern.swaps & all);
      if (mask == 0) return {};
      return {{CorrectionOp::Kind::flip, mask}};
    }
    case Policy::table: {
      auto it = table_.find(pattern);
      if (it == table_.end()) return {};
      return it->second;
    }
  }
  return {};
}

std::string CorrectionPlan::name() const {
  switch (policy_) {
    case Policy::identity:
      return "none";
    case Policy::flip_all_then_hadamard:
      return "flip-all-hadamard";
    case Policy::minority_flip:
      return "minority";
    case Policy::table:
      return "table";
  }
  return "?";
}

PureState apply_corrections(const PureState& state, const std::vector<CorrectionOp>& ops) {
  PureState out = state;
  for (const auto& op : ops) {
    out = op.kind == CorrectionOp::Kind::flip ? bit_flip_pol_mask(out, op.mask) : hadamard_pol(out);
  }
  return out;
}

Ensemble ProtocolResult::merged() const {
  std::vector<Ensemble::Member> members;
  for (const auto& [pattern, outcome] : accepted) {
    for (const auto& member : outcome.polarization.members()) {
      members.push_back({member.probability * outcome.probability / success_probability,
                         member.state});
    }
  }
  return Ensemble(std::move(members));
}

namespace {

// One conditional branch: input member `member` landing on port mask `ports`.
struct Branch {
  std::uint32_t ports;
  double weight;  // member probability times branch norm
  PureState state;
};

std::vector<Branch> split_member(const Ensemble::Member& member, const ProtocolOptions& options) {
  PureState state = member.state;
  if (options.hadamard_layers) state = hadamard_spatial(hadamard_pol(state));
  const PureState out = apply_network(state, options.gate);
  const int m = out.photons();

  std::map<std::uint32_t, std::vector<PureState::Term>> groups;
  for (const auto& [ket, amp] : out.terms()) groups[ket.aux].emplace_back(Ket{ket.pol, 0}, amp);

  std::vector<Branch> branches;
  for (const auto& [ports, terms] : groups) {
    double norm2 = 0.0;
    for (const auto& term : terms) norm2 += std::norm(term.second);
    if (norm2 <= 0.0) continue;
    branches.push_back(
        {ports, member.probability * norm2, PureState::normalized(m, Space::polarization, terms)});
  }
  return branches;
}

std::vector<std::vector<Branch>> split_all(const Ensemble& input, const ProtocolOptions& options) {
  const auto members = input.members();
  std::vector<std::vector<Branch>> per_member(members.size());
  const int threads = std::clamp(options.threads, 1, static_cast<int>(members.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < members.size(); ++i) per_member[i] = split_member(members[i], options);
    return per_member;
  }
  // Each worker writes only its own slots; merging happens afterwards in member order.
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = static_cast<std::size_t>(t); i < members.size();
               i += static_cast<std::size_t>(threads)) {
            per_member[i] = split_member(members[i], options);
          }
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return per_member;
}

struct PatternMix {
  double probability = 0.0;
  std::vector<Ensemble::Member> members;  // unnormalized weights
};

// Groups branches by port pattern, folding states equal up to phase together.
std::map<std::uint32_t, PatternMix> collect(const std::vector<std::vector<Branch>>& per_member) {
  std::map<std::uint32_t, PatternMix> patterns;
  for (const auto& branches : per_member) {
    for (const auto& branch : branches) {
      auto& mix = patterns[branch.ports];
      mix.probability += branch.weight;
      auto same = std::find_if(mix.members.begin(), mix.members.end(),
                               [&](const Ensemble::Member& m) { return same_ray(m.state, branch.state); });
      if (same != mix.members.end()) {
        same->probability += branch.weight;
      } else {
        mix.members.push_back({branch.weight, branch.state});
      }
    }
  }
  return patterns;
}

Ensemble normalize_mix(const PatternMix& mix, const std::vector<CorrectionOp>& ops) {
  std::vector<Ensemble::Member> members;
  members.reserve(mix.members.size());
  for (const auto& member : mix.members) {
    members.push_back({member.probability / mix.probability, apply_corrections(member.state, ops)});
  }
  return Ensemble(std::move(members));
}

void check_input(const Ensemble& input) {
  if (input.space() != Space::hyper) {
    throw StageError("protocol input must be an input-stage hyper ensemble, got " +
                     to_string(input.space()));
  }
}

constexpr double kNegligibleProbability = 1e-15;

}  // namespace

ProtocolResult run_protocol(const Ensemble& input, const ProtocolOptions& options) {
  check_input(input);
  const int m = input.photons();
  const PureState target = options.target ? *options.target : make_ghz_pol(m, 0, Sign::plus);
  if (target.space() != Space::polarization || target.photons() != m) {
    throw DimensionError("target must be an m-photon polarization state");
  }

  const auto patterns = collect(split_all(input, options));

  ProtocolResult result;
  result.photons = m;
  double weighted_fidelity = 0.0;
  for (const auto& [ports, mix] : patterns) {
    if (mix.probability < kNegligibleProbability) continue;
    const PortPattern pattern{m, ports};
    result.pattern_probabilities[pattern] = mix.probability;
    if (!options.acceptance.accepts(pattern)) {
      result.rejected_probability += mix.probability;
      continue;
    }
    Ensemble corrected = normalize_mix(mix, options.corrections.ops_for(pattern));
    const double fid = fidelity(corrected, target);
    result.success_probability += mix.probability;
    weighted_fidelity += mix.probability * fid;
    result.accepted.emplace(pattern, PatternOutcome{mix.probability, std::move(corrected), fid});
  }
  if (result.success_probability <= 0.0) {
    throw std::domain_error("no accepted port pattern has nonzero probability");
  }
  result.output_fidelity = weighted_fidelity / result.success_probability;
  return result;
}

ProtocolResult run_bitflip(const Ensemble& input) {
  ProtocolOptions options;
  options.acceptance = AcceptanceRule::bitflip();
  return run_protocol(input, options);
}

ProtocolResult run_phaseflip(const Ensemble& input) {
  ProtocolOptions options;
  options.hadamard_layers = true;
  options.acceptance = AcceptanceRule::phaseflip();
  options.corrections = CorrectionPlan::phaseflip_standard();
  return run_protocol(input, options);
}

ProtocolResult run_general(const Ensemble& input, const CorrectionPlan& corrections,
                           const AcceptanceRule& acceptance) {
  ProtocolOptions options;
  options.acceptance = acceptance;
  options.corrections = corrections;
  return run_protocol(input, options);
}

CorrectionPlan posterior_flip_plan(const Ensemble& input, const ProtocolOptions& options) {
  check_input(input);
  const int m = input.photons();
  const PureState target = options.target ? *options.target : make_ghz_pol(m, 0, Sign::plus);
  const auto patterns = collect(split_all(input, options));

  std::map<PortPattern, std::vector<CorrectionOp>> table;
  for (const auto& [ports, mix] : patterns) {
    if (mix.probability < kNegligibleProbability) continue;
    const Ensemble conditional = normalize_mix(mix, {});
    std::uint32_t best_mask = 0;
    double best = -1.0;
    for (std::uint32_t mask = 0; mask <= full_mask(m); ++mask) {
      double fid = 0.0;
      for (const auto& member : conditional.members()) {
        fid += member.probability * std::norm(inner(target, bit_flip_pol_mask(member.state, mask)));
      }
      const bool better =
          fid > best + kNormTolerance ||
          (std::abs(fid - best) <= kNormTolerance &&
           std::popcount(mask) < std::popcount(best_mask));
      if (better) {
        best = fid;
        best_mask = mask;
      }
    }
    if (best_mask != 0) table[PortPattern{m, ports}] = {{CorrectionOp::Kind::flip, best_mask}};
  }
  return CorrectionPlan::from_table(std::move(table));
}

double closed_form_fidelity_pair(double fa, double fb) {
  const double good = fa * fb;
  const double denom = good + (1.0 - fa) * (1.0 - fb);
  if (denom <= 0.0) throw std::domain_error("closed-form fidelity: zero success probability");
  return good / denom;
}

double closed_form_success_pair(double fa, double fb) { return fa * fb + (1.0 - fa) * (1.0 - fb); }

std::array<double, 4> closed_form_fidelity_general(const std::array<double, 4>& pol_weights,
                                                   const std::array<double, 4>& spatial_weights) {
  std::array<double, 4> products{};
  double denom = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    products[i] = pol_weights[i] * spatial_weights[i];
    denom += products[i];
  }
  if (denom <= 0.0) throw std::domain_error("closed-form fidelity: every matched product vanishes");
  for (auto& p : products) p /= denom;
  return products;
}

}  // namespace ghzpur
