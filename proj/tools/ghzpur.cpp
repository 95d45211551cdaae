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

// Command-line front end: simulate, sweep, verify.
// Exit codes: 0 ok, 1 verification failure, 2 usage/config error, 3 domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ghzpur/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The payload is fully built before this is called, so a failed run never
// leaves a partial file behind.
void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << payload;
    if (!out) throw UsageError("write to '" + out_path + "' failed");
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw UsageError("cannot move output into '" + out_path + "'");
  }
}

struct Grid {
  double from;
  double to;
  double step;
};

Grid parse_grid(const std::string& text) {
  Grid g{};
  char c1 = 0;
  char c2 = 0;
  std::istringstream ss(text);
  if (!(ss >> g.from >> c1 >> g.to >> c2 >> g.step) || c1 != ':' || c2 != ':' || !ss.eof()) {
    throw UsageError("--grid expects FROM:TO:STEP, got '" + text + "'");
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperentanglement-assisted GHZ purification simulator"};
  app.set_version_flag("--version", ghzpur::tool_version());
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  bool reproducible = false;

  auto* simulate = app.add_subcommand("simulate", "Run one configured purification round");
  std::string config_path;
  simulate->add_option("config", config_path, "JSON config file ('-' for stdin)")->required();
  simulate->add_option("--out", out_path, "Output file (default stdout)");
  simulate->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  simulate->add_flag("--reproducible", reproducible, "Omit the timestamp");

  auto* sweep = app.add_subcommand("sweep", "Efficiency-ratio or fidelity sweep");
  std::string axis;
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;
  ghzpur::EfficiencyParams params;
  std::string grid_text = "0.1:0.9:0.1";
  std::string sweep_mode = "bitflip";
  int sweep_m = 3;
  sweep->add_option("--axis", axis, "L, N or F")->required()->check(CLI::IsMember({"L", "N", "F"}));
  auto* from_opt = sweep->add_option("--from", from, "First axis value (L, N axes)");
  auto* to_opt = sweep->add_option("--to", to, "Last axis value (L, N axes)");
  sweep->add_option("--step", step, "Axis step (default 1)");
  sweep->add_option("--N", params.photons, "Photon count N (L axis)");
  sweep->add_option("--L", params.length_km, "Distance in km (N axis)");
  sweep->add_option("--L0", params.attenuation_km, "Attenuation length in km");
  sweep->add_option("--eta-d", params.eta_d, "Detector efficiency");
  sweep->add_option("--eta-c", params.eta_c, "Coupling efficiency");
  sweep->add_option("--p1", params.p1, "Protocol success probability");
  sweep->add_option("--grid", grid_text, "F axis grid FROM:TO:STEP");
  sweep->add_option("--mode", sweep_mode, "F axis protocol")->check(CLI::IsMember({"bitflip", "phaseflip"}));
  sweep->add_option("--m", sweep_m, "F axis photon count");
  sweep->add_option("--out", out_path, "Output file (default stdout)");
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_flag("--reproducible", reproducible, "Accepted for symmetry; sweeps carry no timestamp");

  auto* verify = app.add_subcommand("verify", "Cross-check the engine against the dense oracle");
  int verify_m = 3;
  int fault_row = -1;
  verify->add_option("--m", verify_m, "Photon count")->required();
  verify->add_option("--inject-gate-fault", fault_row,
                     "Swap gate row ROW with row (ROW+1)%4 in the engine (mutation check)")
      ->check(CLI::Range(0, 3));
  verify->add_option("--out", out_path, "Output file (default stdout)");
  verify->add_option("--format", format, "json or text");
  verify->add_flag("--reproducible", reproducible, "Accepted for symmetry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) {
      const auto config = ghzpur::parse_config(read_file(config_path));
      const auto record = ghzpur::simulate(config, reproducible);
      emit(format == "csv" ? ghzpur::record_to_csv(record) : ghzpur::record_to_json(record), out_path);
      return kExitOk;
    }
    if (*sweep) {
      if (sweep->count("--format") == 0) format = "csv";
      if (axis == "F") {
        const Grid g = parse_grid(grid_text);
        const auto mode = sweep_mode == "bitflip" ? ghzpur::RunMode::bitflip : ghzpur::RunMode::phaseflip;
        const auto rows = ghzpur::fidelity_sweep(mode, sweep_m, g.from, g.to, g.step);
        emit(format == "csv" ? ghzpur::fidelity_sweep_csv(rows) : ghzpur::fidelity_sweep_json(rows), out_path);
        return kExitOk;
      }
      if (!*from_opt || !*to_opt) throw UsageError("--axis " + axis + " needs --from and --to");
      params.validate();
      const auto rows = ghzpur::sweep(params, axis == "L" ? ghzpur::SweepAxis::length : ghzpur::SweepAxis::photons,
                                      from, to, step);
      emit(format == "csv" ? ghzpur::efficiency_sweep_csv(rows) : ghzpur::efficiency_sweep_json(rows), out_path);
      return kExitOk;
    }
    if (*verify) {
      if (verify->count("--format") == 0) format = "text";
      if (format != "text" && format != "json") throw UsageError("verify --format expects text or json");
      auto gate = ghzpur::LocalGateTable::standard();
      if (fault_row >= 0) gate = gate.with_swapped_rows(fault_row, (fault_row + 1) % 4);
      const auto report = ghzpur::verify(verify_m, gate);
      std::ostringstream out;
      if (format == "json") {
        out << "{\n  \"m\": " << report.photons << ",\n  \"passed\": " << (report.passed ? "true" : "false")
            << ",\n  \"cases\": " << report.cases.size() << ",\n  \"worst_deviation\": {";
        for (std::size_t i = 0; i < report.worst_by_mode.size(); ++i) {
          out << (i ? ", " : "") << '"' << report.worst_by_mode[i].first << "\": ";
          const double w = report.worst_by_mode[i].second;
          if (std::isfinite(w)) {
            out << w;
          } else {
            out << "null";
          }
        }
        out << "}\n}\n";
      } else {
        out << "verify m=" << report.photons << " cases=" << report.cases.size() << "\n";
        for (const auto& [mode, worst] : report.worst_by_mode) {
          out << "  " << mode << " worst deviation " << worst << "\n";
        }
        out << (report.passed ? "PASS" : "FAIL") << "\n";
      }
      emit(out.str(), out_path);
      if (!report.passed) {
        int shown = 0;
        for (const auto& c : report.cases) {
          if (c.deviation < ghzpur::kVerifyTolerance) continue;
          if (shown++ == 10) {
            std::cerr << "  ...\n";
            break;
          }
          std::cerr << "mismatch: mode=" << c.mode << " " << c.description << " deviation=" << c.deviation << "\n";
        }
        return kExitVerify;
      }
      return kExitOk;
    }
  } catch (const ghzpur::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::logic_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
