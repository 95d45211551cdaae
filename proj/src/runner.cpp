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

#include "ghzpur/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <map>
#include <sstream>

#include "ghzpur/oracle.hpp"
#include "json.hpp"

#ifndef GHZPUR_VERSION
#define GHZPUR_VERSION "0.0.0"
#endif

namespace ghzpur {

using Json = nlohmann::ordered_json;

std::string tool_version() { return GHZPUR_VERSION; }

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::bitflip:
      return "bitflip";
    case RunMode::phaseflip:
      return "phaseflip";
    case RunMode::general:
      return "general";
    case RunMode::deterministic_demo:
      return "deterministic-demo";
  }
  return "?";
}

namespace {

// Config parsing -------------------------------------------------------------

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

RunMode parse_mode(const std::string& text, const std::string& field) {
  if (text == "bitflip") return RunMode::bitflip;
  if (text == "phaseflip") return RunMode::phaseflip;
  if (text == "general") return RunMode::general;
  if (text == "deterministic-demo") return RunMode::deterministic_demo;
  throw ConfigError(field, "unknown mode '" + text +
                               "' (expected bitflip, phaseflip, general or deterministic-demo)");
}

std::string target_label(unsigned index, Sign sign) {
  return "Phi" + std::to_string(index) + (sign == Sign::plus ? "+" : "-");
}

void parse_target(const std::string& text, ProtocolConfig& config) {
  if (text.size() < 5 || text.rfind("Phi", 0) != 0 || (text.back() != '+' && text.back() != '-')) {
    throw ConfigError("target", "expected a label like 'Phi0+' or 'Phi3-', got '" + text + "'");
  }
  const std::string digits = text.substr(3, text.size() - 4);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 6) {
    throw ConfigError("target", "bad GHZ index in '" + text + "'");
  }
  config.target_index = static_cast<unsigned>(std::stoul(digits));
  config.target_sign = text.back() == '+' ? Sign::plus : Sign::minus;
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(where + key, "required field is missing");
  return *it;
}

std::vector<NoiseSpec> parse_noise(const Json& list, Dof dof, const std::string& field) {
  if (!list.is_array()) throw ConfigError(field, "expected a list of noise entries");
  std::vector<NoiseSpec> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    const Json& entry = list[i];
    if (!entry.is_object()) throw ConfigError(where, "expected an object");
    for (const auto& item : entry.items()) {
      if (item.key() != "kind" && item.key() != "index" && item.key() != "weight") {
        throw ConfigError(where + "." + item.key(), "unknown field");
      }
    }
    NoiseSpec spec;
    spec.dof = dof;
    const Json& kind = require(entry, "kind", where + ".");
    if (!kind.is_string()) throw ConfigError(where + ".kind", "expected a string");
    if (kind == "bit-flip") {
      spec.kind = NoiseKind::bit_flip;
      spec.index = 1;
    } else if (kind == "phase-flip") {
      spec.kind = NoiseKind::phase_flip;
      spec.index = 0;
    } else {
      throw ConfigError(where + ".kind", "expected 'bit-flip' or 'phase-flip'");
    }
    if (auto it = entry.find("index"); it != entry.end()) {
      if (!it->is_number_unsigned()) throw ConfigError(where + ".index", "expected an integer >= 0");
      spec.index = it->get<unsigned>();
    }
    const Json& weight = require(entry, "weight", where + ".");
    if (!weight.is_number()) throw ConfigError(where + ".weight", "expected a number");
    spec.weight = weight.get<double>();
    if (!(spec.weight >= 0.0 && spec.weight <= 1.0)) {
      throw ConfigError(where + ".weight", "must lie in [0, 1]");
    }
    out.push_back(spec);
  }
  return out;
}

Json noise_to_json(const std::vector<NoiseSpec>& list) {
  Json out = Json::array();
  for (const auto& spec : list) {
    out.push_back({{"kind", to_string(spec.kind)}, {"index", spec.index}, {"weight", spec.weight}});
  }
  return out;
}

Json config_json(const ProtocolConfig& config) {
  Json out;
  out["m"] = config.photons;
  out["mode"] = to_string(config.mode);
  out["polarization_noise"] = noise_to_json(config.polarization_noise);
  out["spatial_noise"] = noise_to_json(config.spatial_noise);
  out["target"] = target_label(config.target_index, config.target_sign);
  out["acceptance"] = config.acceptance;
  out["correction"] = config.correction;
  out["seed"] = config.seed;
  return out;
}

ProtocolConfig config_from_json(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("document", "expected a JSON object at top level");
  static const char* const kKnown[] = {"m",      "mode",       "polarization_noise",
                                       "spatial_noise", "target", "acceptance",
                                       "correction",    "seed"};
  for (const auto& item : doc.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), item.key()) == std::end(kKnown)) {
      throw ConfigError(item.key(), "unknown field");
    }
  }
  ProtocolConfig config;
  const Json& m = require(doc, "m", "");
  if (!m.is_number_integer()) throw ConfigError("m", "expected an integer");
  config.photons = m.get<int>();
  if (config.photons < 2 || config.photons > kMaxPhotons) {
    throw ConfigError("m", "photon count must be in [2, " + std::to_string(kMaxPhotons) + "]");
  }
  const Json& mode = require(doc, "mode", "");
  if (!mode.is_string()) throw ConfigError("mode", "expected a string");
  config.mode = parse_mode(mode.get<std::string>(), "mode");
  if (auto it = doc.find("polarization_noise"); it != doc.end()) {
    config.polarization_noise = parse_noise(*it, Dof::polarization, "polarization_noise");
  }
  if (auto it = doc.find("spatial_noise"); it != doc.end()) {
    config.spatial_noise = parse_noise(*it, Dof::spatial, "spatial_noise");
  }
  if (auto it = doc.find("target"); it != doc.end()) {
    if (!it->is_string()) throw ConfigError("target", "expected a string");
    parse_target(it->get<std::string>(), config);
  }
  if (auto it = doc.find("acceptance"); it != doc.end()) {
    if (!it->is_string()) throw ConfigError("acceptance", "expected a string");
    config.acceptance = it->get<std::string>();
    if (!config.acceptance.empty() && config.acceptance != "matched" && config.acceptance != "even" &&
        config.acceptance != "all") {
      throw ConfigError("acceptance", "expected 'matched', 'even' or 'all'");
    }
  }
  if (auto it = doc.find("correction"); it != doc.end()) {
    if (!it->is_string()) throw ConfigError("correction", "expected a string");
    config.correction = it->get<std::string>();
    if (!config.correction.empty() && config.correction != "none" &&
        config.correction != "minority" && config.correction != "posterior" &&
        config.correction != "flip-all-hadamard") {
      throw ConfigError("correction",
                        "expected 'none', 'minority', 'posterior' or 'flip-all-hadamard'");
    }
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) throw ConfigError("seed", "expected an integer >= 0");
    config.seed = it->get<std::uint64_t>();
  }
  return config;
}

// Mode defaults --------------------------------------------------------------

std::string effective_acceptance(const ProtocolConfig& config) {
  if (!config.acceptance.empty()) return config.acceptance;
  switch (config.mode) {
    case RunMode::bitflip:
      return "matched";
    case RunMode::phaseflip:
      return "even";
    default:
      return "all";
  }
}

std::string effective_correction(const ProtocolConfig& config) {
  if (!config.correction.empty()) return config.correction;
  switch (config.mode) {
    case RunMode::bitflip:
      return "none";
    case RunMode::phaseflip:
      return "flip-all-hadamard";
    default:
      return "posterior";
  }
}

AcceptanceRule acceptance_from(const std::string& name) {
  if (name == "matched") return AcceptanceRule::bitflip();
  if (name == "even") return AcceptanceRule::phaseflip();
  return AcceptanceRule::general();
}

ProtocolConfig with_demo_defaults(ProtocolConfig config) {
  if (config.mode != RunMode::deterministic_demo) return config;
  if (config.photons < 3) {
    throw std::invalid_argument("deterministic-demo needs m >= 3 (spatial error on the second-to-last photon)");
  }
  if (config.polarization_noise.empty() && config.spatial_noise.empty()) {
    config.polarization_noise = {{Dof::polarization, NoiseKind::bit_flip, 1, 0.2}};
    config.spatial_noise = {{Dof::spatial, NoiseKind::bit_flip, 2, 0.3}};
  }
  return config;
}

// Weight of each GHZ class for an all-bit-flip noise list; nullopt otherwise.
std::optional<std::map<unsigned, double>> bitflip_class_weights(const std::vector<NoiseSpec>& noise) {
  std::map<unsigned, double> weights{{0u, 1.0}};
  for (const auto& spec : noise) {
    if (spec.kind != NoiseKind::bit_flip) return std::nullopt;
    weights[spec.index] += spec.weight;
    weights[0] -= spec.weight;
  }
  return weights;
}

struct ClosedForm {
  double fidelity;
  double success;
};

// Closed-form expectations for the configurations that have one.
std::optional<ClosedForm> closed_form_for(const ProtocolConfig& config, const std::string& acceptance,
                                          const std::string& correction) {
  const bool plus_target = config.target_sign == Sign::plus;
  if (config.mode == RunMode::phaseflip) {
    if (acceptance != "even" || correction != "flip-all-hadamard" || config.target_index != 0 ||
        !plus_target || config.polarization_noise.size() > 1 || config.spatial_noise.size() > 1) {
      return std::nullopt;
    }
    for (const auto* list : {&config.polarization_noise, &config.spatial_noise}) {
      for (const auto& spec : *list) {
        if (spec.kind != NoiseKind::phase_flip || spec.index != 0) return std::nullopt;
      }
    }
    const double f3 = 1.0 - (config.polarization_noise.empty() ? 0.0 : config.polarization_noise[0].weight);
    const double f4 = 1.0 - (config.spatial_noise.empty() ? 0.0 : config.spatial_noise[0].weight);
    return ClosedForm{closed_form_fidelity_pair(f3, f4), closed_form_success_pair(f3, f4)};
  }

  const auto pol = bitflip_class_weights(config.polarization_noise);
  const auto spatial = bitflip_class_weights(config.spatial_noise);
  if (!pol || !spatial || !plus_target) return std::nullopt;
  auto weight = [](const std::map<unsigned, double>& w, unsigned k) {
    auto it = w.find(k);
    return it == w.end() ? 0.0 : it->second;
  };

  if (acceptance == "matched" && correction == "none") {
    // Only equal-class pairs reach all-keep/all-swap; they emerge as that class.
    double success = 0.0;
    for (const auto& [k, w] : *pol) success += w * weight(*spatial, k);
    if (success <= 0.0) return std::nullopt;
    return ClosedForm{weight(*pol, config.target_index) * weight(*spatial, config.target_index) / success,
                      success};
  }
  if (acceptance == "all" && correction == "posterior" && config.target_index == 0) {
    // Pair (x, y) lands on port class x^y carrying polarization class y; the
    // best flip per port class keeps the heaviest y.
    std::map<unsigned, std::map<unsigned, double>> by_port;
    for (const auto& [x, wx] : *pol) {
      for (const auto& [y, wy] : *spatial) by_port[x ^ y][y] += wx * wy;
    }
    double fid = 0.0;
    for (const auto& [port, classes] : by_port) {
      double best = 0.0;
      for (const auto& [y, w] : classes) best = std::max(best, w);
      fid += best;
    }
    return ClosedForm{fid, 1.0};
  }
  if (acceptance == "all" && correction == "minority" && config.target_index == 0) {
    // Flipping the minority group maps the output back onto the input polarization class.
    return ClosedForm{weight(*pol, 0), 1.0};
  }
  return std::nullopt;
}

// Record JSON ------------------------------------------------------------------

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> read_optional(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(fields[i]);
  }
  return out + "\r\n";
}

}  // namespace

ProtocolConfig parse_config(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  try {
    return config_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("document", e.what());
  }
}

std::string config_to_json(const ProtocolConfig& config) { return config_json(config).dump(2); }

PreparedRun prepare_run(const ProtocolConfig& raw, const LocalGateTable& gate) {
  const ProtocolConfig config = with_demo_defaults(raw);
  const int m = config.photons;
  Ensemble input = product_ensemble(noisy_ghz(m, Dof::polarization, config.polarization_noise),
                                    noisy_ghz(m, Dof::spatial, config.spatial_noise));
  ProtocolOptions options;
  options.gate = gate;
  options.hadamard_layers = config.mode == RunMode::phaseflip;
  options.acceptance = acceptance_from(effective_acceptance(config));
  options.target = make_ghz_pol(m, config.target_index, config.target_sign);
  const std::string correction = effective_correction(config);
  if (correction == "flip-all-hadamard") {
    options.corrections = CorrectionPlan::phaseflip_standard();
  } else if (correction == "minority") {
    options.corrections = CorrectionPlan::minority_flip();
  } else if (correction == "posterior") {
    options.corrections = posterior_flip_plan(input, options);
  }
  return {std::move(input), std::move(options)};
}

RunRecord simulate(const ProtocolConfig& raw, bool reproducible) {
  const ProtocolConfig config = with_demo_defaults(raw);
  const PreparedRun run = prepare_run(config);
  const ProtocolResult result = run_protocol(run.input, run.options);

  RunRecord record;
  record.tool_version = tool_version();
  if (!reproducible) record.timestamp = utc_timestamp();
  record.config = config;
  record.acceptance = effective_acceptance(config);
  record.correction = effective_correction(config);
  record.success_probability = result.success_probability;
  record.rejected_probability = result.rejected_probability;
  record.fidelity = result.output_fidelity;
  for (const auto& [pattern, prob] : result.pattern_probabilities) {
    PatternRow row{pattern.to_string(), prob, false, std::nullopt};
    if (auto it = result.accepted.find(pattern); it != result.accepted.end()) {
      row.accepted = true;
      row.fidelity = it->second.fidelity;
    }
    record.patterns.push_back(row);
  }
  if (auto cf = closed_form_for(config, record.acceptance, record.correction)) {
    record.closed_form_fidelity = cf->fidelity;
    record.closed_form_success = cf->success;
    record.fidelity_deviation = std::abs(result.output_fidelity - cf->fidelity);
    record.success_deviation = std::abs(result.success_probability - cf->success);
  }
  return record;
}

std::string record_to_json(const RunRecord& record) {
  Json out;
  out["schema_version"] = record.schema_version;
  out["tool_version"] = record.tool_version;
  out["timestamp"] = record.timestamp ? Json(*record.timestamp) : Json(nullptr);
  out["config"] = config_json(record.config);
  out["acceptance"] = record.acceptance;
  out["correction"] = record.correction;
  Json result;
  result["success_probability"] = record.success_probability;
  result["rejected_probability"] = record.rejected_probability;
  result["fidelity"] = record.fidelity;
  Json patterns = Json::array();
  for (const auto& row : record.patterns) {
    patterns.push_back({{"pattern", row.pattern},
                        {"probability", row.probability},
                        {"accepted", row.accepted},
                        {"fidelity", optional_number(row.fidelity)}});
  }
  result["patterns"] = std::move(patterns);
  out["result"] = std::move(result);
  if (record.closed_form_fidelity) {
    out["closed_form"] = {{"fidelity", optional_number(record.closed_form_fidelity)},
                          {"success_probability", optional_number(record.closed_form_success)},
                          {"fidelity_deviation", optional_number(record.fidelity_deviation)},
                          {"success_deviation", optional_number(record.success_deviation)}};
  } else {
    out["closed_form"] = nullptr;
  }
  return out.dump(2) + "\n";
}

RunRecord record_from_json(std::string_view text) {
  const Json doc = Json::parse(text.begin(), text.end());
  RunRecord record;
  record.schema_version = doc.at("schema_version").get<int>();
  if (record.schema_version != kRecordSchemaVersion) {
    throw ConfigError("schema_version", "unsupported record schema " +
                                            std::to_string(record.schema_version));
  }
  record.tool_version = doc.at("tool_version").get<std::string>();
  if (!doc.at("timestamp").is_null()) record.timestamp = doc.at("timestamp").get<std::string>();
  record.config = config_from_json(doc.at("config"));
  record.acceptance = doc.at("acceptance").get<std::string>();
  record.correction = doc.at("correction").get<std::string>();
  const Json& result = doc.at("result");
  record.success_probability = result.at("success_probability").get<double>();
  record.rejected_probability = result.at("rejected_probability").get<double>();
  record.fidelity = result.at("fidelity").get<double>();
  for (const auto& row : result.at("patterns")) {
    record.patterns.push_back({row.at("pattern").get<std::string>(),
                               row.at("probability").get<double>(), row.at("accepted").get<bool>(),
                               read_optional(row.at("fidelity"))});
  }
  const Json& cf = doc.at("closed_form");
  if (!cf.is_null()) {
    record.closed_form_fidelity = read_optional(cf.at("fidelity"));
    record.closed_form_success = read_optional(cf.at("success_probability"));
    record.fidelity_deviation = read_optional(cf.at("fidelity_deviation"));
    record.success_deviation = read_optional(cf.at("success_deviation"));
  }
  return record;
}

std::string format_csv_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string record_to_csv(const RunRecord& record) {
  auto opt = [](const std::optional<double>& v) { return v ? format_csv_number(*v) : std::string(); };
  std::vector<std::string> header = {"schema_version", "tool_version",        "timestamp",
                                     "m",              "mode",                "acceptance",
                                     "correction",     "success_probability", "rejected_probability",
                                     "fidelity",       "closed_form_fidelity", "closed_form_success",
                                     "fidelity_deviation", "success_deviation"};
  std::vector<std::string> row = {std::to_string(record.schema_version),
                                  record.tool_version,
                                  record.timestamp.value_or(""),
                                  std::to_string(record.config.photons),
                                  to_string(record.config.mode),
                                  record.acceptance,
                                  record.correction,
                                  format_csv_number(record.success_probability),
                                  format_csv_number(record.rejected_probability),
                                  format_csv_number(record.fidelity),
                                  opt(record.closed_form_fidelity),
                                  opt(record.closed_form_success),
                                  opt(record.fidelity_deviation),
                                  opt(record.success_deviation)};
  for (const auto& p : record.patterns) {
    header.push_back("p_" + p.pattern);
    row.push_back(format_csv_number(p.probability));
    header.push_back("f_" + p.pattern);
    row.push_back(opt(p.fidelity));
  }
  return csv_line(header) + csv_line(row);
}

std::string efficiency_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = csv_line({"axis_value", "R"});
  for (const auto& row : rows) out += csv_line({format_csv_number(row.axis_value), format_csv_number(row.ratio)});
  return out;
}

std::string efficiency_sweep_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back({{"axis_value", row.axis_value}, {"R", row.ratio}});
  return out.dump(2) + "\n";
}

std::vector<FidelitySweepRow> fidelity_sweep(RunMode mode, int photons, double from, double to,
                                             double step) {
  if (mode != RunMode::bitflip && mode != RunMode::phaseflip) {
    throw std::invalid_argument("fidelity sweep supports bitflip and phaseflip modes");
  }
  const std::size_t count = sweep_point_count(from, to, step);
  if (from < 0.0 || to > 1.0) throw std::invalid_argument("fidelity grid must lie in [0, 1]");
  const NoiseKind kind = mode == RunMode::bitflip ? NoiseKind::bit_flip : NoiseKind::phase_flip;
  const unsigned index = mode == RunMode::bitflip ? 1 : 0;
  std::vector<FidelitySweepRow> rows;
  rows.reserve(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const double fa = from + static_cast<double>(i) * step;
      const double fb = from + static_cast<double>(j) * step;
      const NoiseSpec pol[] = {{Dof::polarization, kind, index, 1.0 - fa}};
      const NoiseSpec sp[] = {{Dof::spatial, kind, index, 1.0 - fb}};
      const Ensemble input = product_ensemble(noisy_ghz(photons, Dof::polarization, pol),
                                              noisy_ghz(photons, Dof::spatial, sp));
      const ProtocolResult result = mode == RunMode::bitflip ? run_bitflip(input) : run_phaseflip(input);
      const double cf = closed_form_fidelity_pair(fa, fb);
      const double cs = closed_form_success_pair(fa, fb);
      rows.push_back({fa, fb, result.output_fidelity, cf, std::abs(result.output_fidelity - cf),
                      result.success_probability, cs, std::abs(result.success_probability - cs)});
    }
  }
  return rows;
}

std::string fidelity_sweep_csv(const std::vector<FidelitySweepRow>& rows) {
  std::string out = csv_line({"F_a", "F_b", "fidelity", "closed_form_fidelity", "fidelity_deviation",
                              "success", "closed_form_success", "success_deviation"});
  for (const auto& r : rows) {
    out += csv_line({format_csv_number(r.fa), format_csv_number(r.fb), format_csv_number(r.fidelity),
                     format_csv_number(r.closed_form_fidelity), format_csv_number(r.fidelity_deviation),
                     format_csv_number(r.success), format_csv_number(r.closed_form_success),
                     format_csv_number(r.success_deviation)});
  }
  return out;
}

std::string fidelity_sweep_json(const std::vector<FidelitySweepRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"F_a", r.fa},
                   {"F_b", r.fb},
                   {"fidelity", r.fidelity},
                   {"closed_form_fidelity", r.closed_form_fidelity},
                   {"fidelity_deviation", r.fidelity_deviation},
                   {"success", r.success},
                   {"closed_form_success", r.closed_form_success},
                   {"success_deviation", r.success_deviation}});
  }
  return out.dump(2) + "\n";
}

namespace {

struct VerifyScenario {
  std::string mode;
  std::string description;
  ProtocolConfig config;
};

std::vector<VerifyScenario> standard_scenarios(int m) {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(i / 10.0);
  const unsigned spatial_index = m >= 3 ? 2 : 1;
  std::vector<VerifyScenario> out;
  for (double fa : grid) {
    for (double fb : grid) {
      std::ostringstream tag;
      tag << "m=" << m << " Fa=" << fa << " Fb=" << fb;

      ProtocolConfig bit;
      bit.photons = m;
      bit.mode = RunMode::bitflip;
      bit.polarization_noise = {{Dof::polarization, NoiseKind::bit_flip, 1, 1.0 - fa}};
      bit.spatial_noise = {{Dof::spatial, NoiseKind::bit_flip, 1, 1.0 - fb}};
      out.push_back({"bitflip", tag.str(), bit});

      ProtocolConfig phase = bit;
      phase.mode = RunMode::phaseflip;
      phase.polarization_noise = {{Dof::polarization, NoiseKind::phase_flip, 0, 1.0 - fa}};
      phase.spatial_noise = {{Dof::spatial, NoiseKind::phase_flip, 0, 1.0 - fb}};
      out.push_back({"phaseflip", tag.str(), phase});

      ProtocolConfig general = bit;
      general.mode = RunMode::general;
      general.spatial_noise = {{Dof::spatial, NoiseKind::bit_flip, spatial_index, 1.0 - fb}};
      out.push_back({"general", tag.str(), general});

      ProtocolConfig matched = bit;
      matched.mode = RunMode::general;
      matched.acceptance = "matched";
      matched.correction = "none";
      const unsigned classes = std::min(4u, 1u << (m - 1));
      matched.polarization_noise.clear();
      matched.spatial_noise.clear();
      static constexpr double kSplit[] = {0.5, 0.3, 0.2};
      for (unsigned k = 1; k < classes; ++k) {
        const double share = classes == 2 ? 1.0 : kSplit[k - 1];
        matched.polarization_noise.push_back({Dof::polarization, NoiseKind::bit_flip, k, (1.0 - fa) * share});
        matched.spatial_noise.push_back({Dof::spatial, NoiseKind::bit_flip, k, (1.0 - fb) * share});
      }
      out.push_back({"general-matched", tag.str(), matched});
    }
  }
  return out;
}

}  // namespace

VerifyReport verify(int photons, const LocalGateTable& gate) {
  if (photons > oracle::kMaxPhotons) {
    throw CapacityError("verify supports m <= " + std::to_string(oracle::kMaxPhotons));
  }
  check_photon_count(photons);
  VerifyReport report;
  report.photons = photons;
  std::map<std::string, double> worst;
  for (const auto& scenario : standard_scenarios(photons)) {
    double deviation = 0.0;
    try {
      const PreparedRun run = prepare_run(scenario.config, gate);
      const ProtocolResult engine = run_protocol(run.input, run.options);
      oracle::Options options;
      options.hadamard_layers = run.options.hadamard_layers;
      options.acceptance = run.options.acceptance;
      options.corrections = run.options.corrections;
      options.target = run.options.target;
      const auto dense = oracle::run(oracle::densify(run.input), options);
      deviation = oracle::max_deviation(engine, dense);
    } catch (const std::domain_error&) {
      // One side accepted nothing; treat as a mismatch unless both agree.
      deviation = std::numeric_limits<double>::infinity();
    }
    auto [it, inserted] = worst.emplace(scenario.mode, deviation);
    if (!inserted) it->second = std::max(it->second, deviation);
    if (!(deviation < kVerifyTolerance)) report.passed = false;
    report.cases.push_back({scenario.mode, scenario.description, deviation});
  }
  for (const char* mode : {"bitflip", "phaseflip", "general", "general-matched"}) {
    report.worst_by_mode.emplace_back(mode, worst[mode]);
  }
  return report;
}

}  // namespace ghzpur
