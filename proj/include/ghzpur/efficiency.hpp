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

#ifndef GHZPUR_EFFICIENCY_HPP_
#define GHZPUR_EFFICIENCY_HPP_

#include <vector>

namespace ghzpur {

/// Practical-efficiency inputs. Distances in km.
struct EfficiencyParams {
  double eta_d = 0.9;         // detector efficiency
  double eta_c = 0.95;        // fibre-to-detector coupling probability
  double length_km = 25.0;    // transmission distance L
  double attenuation_km = 25.0;  // attenuation length L0
  int photons = 3;            // N
  double p1 = 1.0;            // protocol success probability

  /// Throws std::invalid_argument when any field is out of range.
  void validate() const;
};

/// e^(-L/L0).
double eta_t(const EfficiencyParams& params);

/// One-copy efficiency p1 (eta_t eta_d eta_c)^N.
double p_one(const EfficiencyParams& params);

/// Two-copy efficiency (1/4) p1 (eta_t eta_d eta_c)^(2N).
double p_two(const EfficiencyParams& params);

/// p_one / p_two = 4 / (eta_t eta_d eta_c)^N, evaluated directly.
double ratio_R(const EfficiencyParams& params);

enum class SweepAxis { length, photons };

struct SweepRow {
  double axis_value;
  double ratio;
};

/// Evaluates ratio_R at from, from+step, ..., to (inclusive, within step/1e6).
/// For the photon axis values are rounded to integers.
std::vector<SweepRow> sweep(const EfficiencyParams& base, SweepAxis axis, double from, double to,
                            double step);

/// Number of points `sweep` produces; throws std::invalid_argument on an empty range.
std::size_t sweep_point_count(double from, double to, double step);

}  // namespace ghzpur

#endif  // GHZPUR_EFFICIENCY_HPP_
