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

#include "ghzpur/efficiency.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ghzpur {

namespace {

void require_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void EfficiencyParams::validate() const {
  require_unit(eta_d, "eta_d");
  require_unit(eta_c, "eta_c");
  require_unit(p1, "p1");
  if (!(length_km >= 0.0) || !std::isfinite(length_km)) {
    throw std::invalid_argument("L must be a finite distance >= 0");
  }
  if (!(attenuation_km > 0.0) || !std::isfinite(attenuation_km)) {
    throw std::invalid_argument("L0 must be > 0");
  }
  if (photons < 2) throw std::invalid_argument("N must be >= 2");
}

double eta_t(const EfficiencyParams& params) {
  params.validate();
  return std::exp(-params.length_km / params.attenuation_km);
}

double p_one(const EfficiencyParams& params) {
  const double per_photon = eta_t(params) * params.eta_d * params.eta_c;
  return params.p1 * std::pow(per_photon, params.photons);
}

double p_two(const EfficiencyParams& params) {
  const double per_photon = eta_t(params) * params.eta_d * params.eta_c;
  return 0.25 * params.p1 * std::pow(per_photon, 2 * params.photons);
}

double ratio_R(const EfficiencyParams& params) {
  const double per_photon = eta_t(params) * params.eta_d * params.eta_c;
  if (per_photon <= 0.0) throw std::domain_error("ratio R diverges: zero per-photon efficiency");
  return 4.0 / std::pow(per_photon, params.photons);
}

std::size_t sweep_point_count(double from, double to, double step) {
  if (!(step > 0.0) || !std::isfinite(from) || !std::isfinite(to) || to < from) {
    throw std::invalid_argument("sweep range is empty");
  }
  const double span = (to - from) / step;
  return static_cast<std::size_t>(std::floor(span + 1e-6)) + 1;
}

std::vector<SweepRow> sweep(const EfficiencyParams& base, SweepAxis axis, double from, double to,
                            double step) {
  const std::size_t count = sweep_point_count(from, to, step);
  std::vector<SweepRow> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double value = from + static_cast<double>(i) * step;
    EfficiencyParams params = base;
    if (axis == SweepAxis::length) {
      params.length_km = value;
      rows.push_back({value, ratio_R(params)});
    } else {
      params.photons = static_cast<int>(std::lround(value));
      rows.push_back({static_cast<double>(params.photons), ratio_R(params)});
    }
  }
  return rows;
}

}  // namespace ghzpur
