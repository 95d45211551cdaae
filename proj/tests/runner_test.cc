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

#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"

namespace ghzpur {
namespace {

constexpr const char* kBitflipConfig = R"({
  "m": 3,
  "mode": "bitflip",
  "polarization_noise": [{"kind": "bit-flip", "index": 1, "weight": 0.2}],
  "spatial_noise": [{"kind": "bit-flip", "index": 1, "weight": 0.3}]
})";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

TEST(Config, ParsesReferenceExample) {
  const auto c = parse_config(kBitflipConfig);
  EXPECT_EQ(c.photons, 3);
  EXPECT_EQ(c.mode, RunMode::bitflip);
  ASSERT_EQ(c.polarization_noise.size(), 1u);
  EXPECT_EQ(c.polarization_noise[0].dof, Dof::polarization);
  EXPECT_DOUBLE_EQ(c.spatial_noise[0].weight, 0.3);
  EXPECT_EQ(c.target_index, 0u);
}

TEST(Config, DefaultsPhaseFlipIndexToZero) {
  const auto c = parse_config(R"({"m": 4, "mode": "phaseflip",
      "polarization_noise": [{"kind": "phase-flip", "weight": 0.1}], "target": "Phi2-"})");
  EXPECT_EQ(c.polarization_noise[0].index, 0u);
  EXPECT_EQ(c.target_index, 2u);
  EXPECT_EQ(c.target_sign, Sign::minus);
}

void expect_config_error(const std::string& text, const std::string& where) {
  try {
    parse_config(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.where(), where) << e.what();
  }
}

TEST(Config, ReportsLocationOfErrors) {
  expect_config_error("{\"m\": 3,\n \"mode\": }", "line 2, column 10");
  expect_config_error(R"({"m": 3, "mode": "bitflip", "extra": 1})", "extra");
  expect_config_error(R"({"mode": "bitflip"})", "m");
  expect_config_error(R"({"m": 1, "mode": "bitflip"})", "m");
  expect_config_error(R"({"m": 3, "mode": "teleport"})", "mode");
  expect_config_error(R"({"m": 3, "mode": "bitflip", "polarization_noise": [{"kind": "bit-flip", "weight": 2}]})",
                      "polarization_noise[0].weight");
  expect_config_error(R"({"m": 3, "mode": "bitflip", "spatial_noise": [{"kind": "bit-flip"}]})",
                      "spatial_noise[0].weight");
  expect_config_error(R"({"m": 3, "mode": "bitflip", "target": "Psi0+"})", "target");
  expect_config_error(R"({"m": 3, "mode": "bitflip", "acceptance": "some"})", "acceptance");
}

TEST(Config, EchoRoundTrips) {
  const auto c = parse_config(kBitflipConfig);
  EXPECT_EQ(config_to_json(parse_config(config_to_json(c))), config_to_json(c));
}

TEST(Simulate, BitflipRecordCarriesClosedForm) {
  const auto r = simulate(parse_config(kBitflipConfig), true);
  EXPECT_NEAR(r.fidelity, 0.903226, 1e-6);
  ASSERT_TRUE(r.closed_form_fidelity);
  EXPECT_LT(*r.fidelity_deviation, 1e-12);
  EXPECT_LT(*r.success_deviation, 1e-12);
  EXPECT_FALSE(r.timestamp);
  EXPECT_EQ(r.acceptance, "matched");
}

TEST(Simulate, DeterministicDemoIsPerfect) {
  const auto r = simulate(parse_config(R"({"m": 3, "mode": "deterministic-demo"})"), true);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
  EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
  EXPECT_EQ(r.correction, "posterior");
  EXPECT_THROW(simulate(parse_config(R"({"m": 2, "mode": "deterministic-demo"})"), true), std::invalid_argument);
}

TEST(Simulate, MinorityCorrectionClosedFormIsInputFidelity) {
  const auto r = simulate(parse_config(R"({"m": 3, "mode": "general", "correction": "minority",
      "polarization_noise": [{"kind": "bit-flip", "index": 1, "weight": 0.25}],
      "spatial_noise": [{"kind": "bit-flip", "index": 2, "weight": 0.4}]})"),
                          true);
  EXPECT_NEAR(r.fidelity, 0.75, 1e-12);
  ASSERT_TRUE(r.fidelity_deviation);
  EXPECT_LT(*r.fidelity_deviation, 1e-12);
}

TEST(Simulate, PhaseflipRecordCarriesClosedForm) {
  const auto r = simulate(parse_config(R"({"m": 3, "mode": "phaseflip",
      "polarization_noise": [{"kind": "phase-flip", "weight": 0.2}],
      "spatial_noise": [{"kind": "phase-flip", "weight": 0.3}]})"),
                          true);
  ASSERT_TRUE(r.fidelity_deviation);
  EXPECT_LT(*r.fidelity_deviation, 1e-12);
  EXPECT_NEAR(r.fidelity, 0.56 / 0.62, 1e-12);
}

TEST(Simulate, NothingAcceptedIsADomainError) {
  EXPECT_THROW(simulate(parse_config(R"({"m": 3, "mode": "bitflip",
      "spatial_noise": [{"kind": "bit-flip", "index": 1, "weight": 1.0}]})"),
                        true),
               std::domain_error);
}

TEST(Record, ReproducibleOutputIsByteIdentical) {
  const auto c = parse_config(kBitflipConfig);
  EXPECT_EQ(record_to_json(simulate(c, true)), record_to_json(simulate(c, true)));
  EXPECT_EQ(record_to_csv(simulate(c, true)), record_to_csv(simulate(c, true)));
  EXPECT_TRUE(simulate(c, false).timestamp);
}

TEST(Record, JsonRoundTripsUnchanged) {
  for (const char* text : {kBitflipConfig, R"({"m": 4, "mode": "deterministic-demo"})"}) {
    const std::string json = record_to_json(simulate(parse_config(text), false));
    EXPECT_EQ(record_to_json(record_from_json(json)), json);
  }
}

TEST(Record, JsonDoublesRoundTripExactly) {
  const auto r = simulate(parse_config(kBitflipConfig), true);
  const auto back = record_from_json(record_to_json(r));
  EXPECT_EQ(back.fidelity, r.fidelity);
  EXPECT_EQ(back.success_probability, r.success_probability);
}

TEST(Record, CsvAgreesWithJsonFieldByField) {
  const auto r = simulate(parse_config(kBitflipConfig), true);
  const auto doc = nlohmann::json::parse(record_to_json(r));
  const std::string csv = record_to_csv(r);
  const auto eol = csv.find("\r\n");
  ASSERT_NE(eol, std::string::npos);
  const auto header = split_csv_line(csv.substr(0, eol));
  const auto values = split_csv_line(csv.substr(eol + 2, csv.size() - eol - 4));
  ASSERT_EQ(header.size(), values.size());
  std::map<std::string, std::string> row;
  for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = values[i];

  const auto& result = doc["result"];
  auto close = [](const std::string& cell, double v) { return std::abs(std::stod(cell) - v) <= 1e-11 * std::max(1.0, std::abs(v)); };
  EXPECT_TRUE(close(row["fidelity"], result["fidelity"].get<double>()));
  EXPECT_TRUE(close(row["success_probability"], result["success_probability"].get<double>()));
  EXPECT_TRUE(close(row["rejected_probability"], result["rejected_probability"].get<double>()));
  EXPECT_TRUE(close(row["closed_form_fidelity"], doc["closed_form"]["fidelity"].get<double>()));
  EXPECT_EQ(row["m"], std::to_string(doc["config"]["m"].get<int>()));
  EXPECT_EQ(row["mode"], doc["config"]["mode"].get<std::string>());
  EXPECT_EQ(row["acceptance"], doc["acceptance"].get<std::string>());
  for (const auto& p : result["patterns"]) {
    const std::string name = p["pattern"].get<std::string>();
    EXPECT_TRUE(close(row["p_" + name], p["probability"].get<double>())) << name;
    if (p["fidelity"].is_null()) {
      EXPECT_EQ(row["f_" + name], "");
    } else {
      EXPECT_TRUE(close(row["f_" + name], p["fidelity"].get<double>())) << name;
    }
  }
}

TEST(Record, CsvNumbersUseTwelveSignificantDigits) {
  EXPECT_EQ(format_csv_number(0.903225806451613), "0.903225806452");
  EXPECT_EQ(format_csv_number(271225718675.93146), "271225718676");
}

TEST(FidelitySweep, GridMatchesClosedForm) {
  for (RunMode mode : {RunMode::bitflip, RunMode::phaseflip}) {
    const auto rows = fidelity_sweep(mode, 3, 0.1, 0.9, 0.1);
    ASSERT_EQ(rows.size(), 81u);
    for (const auto& row : rows) {
      EXPECT_LT(row.fidelity_deviation, 1e-12);
      EXPECT_LT(row.success_deviation, 1e-12);
    }
  }
  EXPECT_THROW(fidelity_sweep(RunMode::general, 3, 0.1, 0.9, 0.1), std::invalid_argument);
}

TEST(EfficiencyTables, CsvHeaderAndRows) {
  EfficiencyParams p;
  p.photons = 6;
  const std::string csv = efficiency_sweep_csv(sweep(p, SweepAxis::length, 20, 100, 1));
  EXPECT_EQ(csv.rfind("axis_value,R\r\n", 0), 0u);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 82u);
  const auto json = nlohmann::json::parse(efficiency_sweep_json(sweep(p, SweepAxis::length, 20, 100, 1)));
  EXPECT_EQ(json.size(), 81u);
}

}  // namespace
}  // namespace ghzpur
