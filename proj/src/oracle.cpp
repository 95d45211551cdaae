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

#include "ghzpur/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace ghzpur::oracle {

namespace {

void check_capacity(int photons) {
  if (photons > kMaxPhotons) {
    throw CapacityError("dense oracle supports at most " + std::to_string(kMaxPhotons) +
                        " photons, got " + std::to_string(photons));
  }
  check_photon_count(photons);
}

// rho <- G rho G^dagger for a 2x2 gate G on the qubit at bit position `bit`.
void apply_gate(Eigen::MatrixXcd& rho, const Eigen::Matrix2cd& gate, int bit) {
  const Eigen::Index dim = rho.rows();
  const Eigen::Index stride = Eigen::Index{1} << bit;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & stride) continue;
    const Eigen::RowVectorXcd r0 = rho.row(i);
    const Eigen::RowVectorXcd r1 = rho.row(i | stride);
    rho.row(i) = gate(0, 0) * r0 + gate(0, 1) * r1;
    rho.row(i | stride) = gate(1, 0) * r0 + gate(1, 1) * r1;
  }
  const Eigen::Matrix2cd adj = gate.adjoint();
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (j & stride) continue;
    const Eigen::VectorXcd c0 = rho.col(j);
    const Eigen::VectorXcd c1 = rho.col(j | stride);
    rho.col(j) = c0 * adj(0, 0) + c1 * adj(1, 0);
    rho.col(j | stride) = c0 * adj(0, 1) + c1 * adj(1, 1);
  }
}

Eigen::Matrix2cd hadamard_gate() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << r, r, r, -r;
  return h;
}

Eigen::MatrixXcd permute(const Eigen::MatrixXcd& rho, const std::vector<std::size_t>& perm) {
  const Eigen::Index dim = rho.rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      out(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]),
          static_cast<Eigen::Index>(perm[static_cast<std::size_t>(j)])) = rho(i, j);
    }
  }
  return out;
}

// Polarization-only register: bit (m-1-k) is photon k, same layout as Ket::pol.
Eigen::MatrixXcd correct(const Eigen::MatrixXcd& rho, int photons,
                         const std::vector<CorrectionOp>& ops) {
  Eigen::MatrixXcd out = rho;
  for (const auto& op : ops) {
    if (op.kind == CorrectionOp::Kind::flip) {
      std::vector<std::size_t> perm(static_cast<std::size_t>(out.rows()));
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i ^ op.mask;
      out = permute(out, perm);
    } else {
      for (int bit = 0; bit < photons; ++bit) apply_gate(out, hadamard_gate(), bit);
    }
  }
  return out;
}

}  // namespace

std::size_t dense_index(int photons, Ket ket) {
  std::size_t index = 0;
  for (int k = 0; k < photons; ++k) {
    const std::uint32_t bit = photon_bit(photons, k);
    const std::size_t local = (((ket.pol & bit) ? 2u : 0u) | ((ket.aux & bit) ? 1u : 0u));
    index = index * 4 + local;
  }
  return index;
}

DenseState densify(const Ensemble& ensemble) {
  const int m = ensemble.photons();
  check_capacity(m);
  if (ensemble.space() != Space::hyper && ensemble.space() != Space::ported) {
    throw StageError("densify expects a two-DOF ensemble");
  }
  const Eigen::Index dim = Eigen::Index{1} << (2 * m);
  DenseState out{m, ensemble.space(), Eigen::MatrixXcd::Zero(dim, dim)};
  for (const auto& member : ensemble.members()) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    for (const auto& [ket, amp] : member.state.terms()) {
      psi(static_cast<Eigen::Index>(dense_index(m, ket))) = amp;
    }
    out.rho += member.probability * psi * psi.adjoint();
  }
  return out;
}

std::vector<std::size_t> network_permutation(int photons, const ElementChain& chain) {
  check_capacity(photons);
  // Local 4x4 action on (pol, mode) -> (pol, port), local index 2*pol + aux.
  std::size_t local[4];
  for (std::size_t in = 0; in < 4; ++in) {
    PathState st{(in & 2) ? PolBit::V : PolBit::H, (in & 1) ? Path::in2 : Path::in1};
    for (const auto& element : chain) st = element.apply(st);
    if (st.path != Path::d_keep && st.path != Path::d_swap) {
      throw std::logic_error("oracle: photon left the network on an internal path");
    }
    local[in] = (st.pol == PolBit::V ? 2u : 0u) | (st.path == Path::d_swap ? 1u : 0u);
  }
  const std::size_t dim = std::size_t{1} << (2 * photons);
  std::vector<std::size_t> perm(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t out = 0;
    for (int k = 0; k < photons; ++k) {
      const int shift = 2 * (photons - 1 - k);
      out |= local[(idx >> shift) & 3u] << shift;
    }
    perm[idx] = out;
  }
  return perm;
}

Eigen::MatrixXd network_unitary(int photons, const ElementChain& chain) {
  const auto perm = network_permutation(photons, chain);
  const auto dim = static_cast<Eigen::Index>(perm.size());
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) u(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]), i) = 1.0;
  return u;
}

Result run(const DenseState& input, const Options& options) {
  const int m = input.photons;
  check_capacity(m);
  if (input.space != Space::hyper) throw StageError("oracle run expects an input-stage state");

  Eigen::MatrixXcd rho = input.rho;
  if (options.hadamard_layers) {
    for (int bit = 0; bit < 2 * m; ++bit) apply_gate(rho, hadamard_gate(), bit);
  }
  rho = permute(rho, network_permutation(m, options.chain));

  const PureState target = options.target ? *options.target : make_ghz_pol(m, 0, Sign::plus);
  const Eigen::Index pol_dim = Eigen::Index{1} << m;
  Eigen::VectorXcd t = Eigen::VectorXcd::Zero(pol_dim);
  for (const auto& [ket, amp] : target.terms()) t(static_cast<Eigen::Index>(ket.pol)) = amp;

  Result result;
  result.photons = m;
  result.total_probability = rho.trace().real();
  double weighted = 0.0;
  for (std::uint32_t ports = 0; ports <= full_mask(m); ++ports) {
    Eigen::MatrixXcd block(pol_dim, pol_dim);
    for (Eigen::Index p = 0; p < pol_dim; ++p) {
      for (Eigen::Index q = 0; q < pol_dim; ++q) {
        const auto i = dense_index(m, Ket{static_cast<std::uint32_t>(p), ports});
        const auto j = dense_index(m, Ket{static_cast<std::uint32_t>(q), ports});
        block(p, q) = rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
    const double prob = block.trace().real();
    if (prob < 1e-15) continue;
    const PortPattern pattern{m, ports};
    result.pattern_probabilities[pattern] = prob;
    if (!options.acceptance.accepts(pattern)) {
      result.rejected_probability += prob;
      continue;
    }
    Eigen::MatrixXcd reduced = correct(block / prob, m, options.corrections.ops_for(pattern));
    const double fid = (t.adjoint() * reduced * t)(0, 0).real();
    result.success_probability += prob;
    weighted += prob * fid;
    result.accepted.emplace(pattern, PatternOutcome{prob, fid, std::move(reduced)});
  }
  if (result.success_probability <= 0.0) {
    throw std::domain_error("oracle: no accepted port pattern has nonzero probability");
  }
  result.output_fidelity = weighted / result.success_probability;
  return result;
}

double max_deviation(const ProtocolResult& engine, const Result& oracle) {
  double worst = std::abs(engine.success_probability - oracle.success_probability);
  worst = std::max(worst, std::abs(engine.rejected_probability - oracle.rejected_probability));
  worst = std::max(worst, std::abs(engine.output_fidelity - oracle.output_fidelity));
  // Patterns missing on one side count with probability zero.
  for (std::uint32_t ports = 0; ports <= full_mask(engine.photons); ++ports) {
    const PortPattern pattern{engine.photons, ports};
    auto e = engine.pattern_probabilities.find(pattern);
    auto o = oracle.pattern_probabilities.find(pattern);
    const double pe = e == engine.pattern_probabilities.end() ? 0.0 : e->second;
    const double po = o == oracle.pattern_probabilities.end() ? 0.0 : o->second;
    worst = std::max(worst, std::abs(pe - po));
  }
  for (const auto& [pattern, outcome] : engine.accepted) {
    auto o = oracle.accepted.find(pattern);
    if (o == oracle.accepted.end()) {
      worst = std::max(worst, outcome.probability);
      continue;
    }
    worst = std::max(worst, std::abs(outcome.fidelity - o->second.fidelity));
  }
  return worst;
}

}  // namespace ghzpur::oracle
