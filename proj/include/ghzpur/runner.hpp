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

#ifndef GHZPUR_RUNNER_HPP_
#define GHZPUR_RUNNER_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ghzpur/efficiency.hpp"
#include "ghzpur/noise.hpp"
#include "ghzpur/optics.hpp"
#include "ghzpur/protocol.hpp"

namespace ghzpur {

inline constexpr int kRecordSchemaVersion = 1;
std::string tool_version();

/// Malformed or schema-invalid configuration. `where` names the line/column
/// or the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum class RunMode { bitflip, phaseflip, general, deterministic_demo };

std::string to_string(RunMode mode);

struct ProtocolConfig {
  int photons = 3;
  RunMode mode = RunMode::bitflip;
  std::vector<NoiseSpec> polarization_noise;
  std::vector<NoiseSpec> spatial_noise;
  unsigned target_index = 0;
  Sign target_sign = Sign::plus;
  std::string acceptance;  // "matched" | "even" | "all"; empty = mode default
  std::string correction;  // "none" | "minority" | "posterior" | "flip-all-hadamard"; empty = mode default
  std::uint64_t seed = 0;  // reserved; exact runs ignore it
};

/// Parses the JSON config document. Unknown keys are rejected.
ProtocolConfig parse_config(std::string_view text);

/// Canonical JSON text of a config (keys in fixed order).
std::string config_to_json(const ProtocolConfig& config);

struct PatternRow {
  std::string pattern;
  double probability = 0.0;
  bool accepted = false;
  std::optional<double> fidelity;  // accepted patterns only
};

struct RunRecord {
  int schema_version = kRecordSchemaVersion;
  std::string tool_version;
  std::optional<std::string> timestamp;
  ProtocolConfig config;
  std::string acceptance;
  std::string correction;
  double success_probability = 0.0;
  double rejected_probability = 0.0;
  double fidelity = 0.0;
  std::vector<PatternRow> patterns;
  std::optional<double> closed_form_fidelity;
  std::optional<double> closed_form_success;
  std::optional<double> fidelity_deviation;
  std::optional<double> success_deviation;
};

/// Builds the input ensemble, options and correction plan a config describes.
struct PreparedRun {
  Ensemble input;
  ProtocolOptions options;
};
PreparedRun prepare_run(const ProtocolConfig& config,
                        const LocalGateTable& gate = LocalGateTable::standard());

/// Executes the configured protocol and attaches closed-form comparisons where
/// one applies. With `reproducible` the timestamp is left empty.
RunRecord simulate(const ProtocolConfig& config, bool reproducible);

std::string record_to_json(const RunRecord& record);
RunRecord record_from_json(std::string_view text);
std::string record_to_csv(const RunRecord& record);

/// CSV field formatting: 12 significant digits.
std::string format_csv_number(double value);

// Sweeps --------------------------------------------------------------------

std::string efficiency_sweep_csv(const std::vector<SweepRow>& rows);
std::string efficiency_sweep_json(const std::vector<SweepRow>& rows);

struct FidelitySweepRow {
  double fa;
  double fb;
  double fidelity;
  double closed_form_fidelity;
  double fidelity_deviation;
  double success;
  double closed_form_success;
  double success_deviation;
};

/// Runs the bit-flip (or phase-flip) protocol over the (Fa, Fb) grid.
std::vector<FidelitySweepRow> fidelity_sweep(RunMode mode, int photons, double from, double to,
                                             double step);
std::string fidelity_sweep_csv(const std::vector<FidelitySweepRow>& rows);
std::string fidelity_sweep_json(const std::vector<FidelitySweepRow>& rows);

// Engine-vs-oracle verification ---------------------------------------------

inline constexpr double kVerifyTolerance = 1e-10;

struct VerifyCase {
  std::string mode;
  std::string description;
  double deviation;
};

struct VerifyReport {
  int photons = 0;
  std::vector<VerifyCase> cases;
  std::vector<std::pair<std::string, double>> worst_by_mode;
  bool passed = true;
};

/// Cross-checks the engine (using `gate`) against the dense oracle (using the
/// element chain) across the standard grid for every mode.
/// Throws CapacityError above the oracle's photon limit.
VerifyReport verify(int photons, const LocalGateTable& gate = LocalGateTable::standard());

}  // namespace ghzpur

#endif  // GHZPUR_RUNNER_HPP_
