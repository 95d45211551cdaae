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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ghzpur/efficiency.hpp"
#include "ghzpur/noise.hpp"
#include "ghzpur/optics.hpp"
#include "ghzpur/protocol.hpp"
#include "ghzpur/runner.hpp"

namespace py = pybind11;

namespace {

using namespace ghzpur;

Sign sign_from(int sign) {
  if (sign != 1 && sign != -1) throw py::value_error("sign must be +1 or -1");
  return sign > 0 ? Sign::plus : Sign::minus;
}

// {(pol_bits, aux_bits): amplitude}
py::dict terms_of(const PureState& state) {
  py::dict out;
  for (const auto& [ket, amp] : state.terms()) out[py::make_tuple(ket.pol, ket.aux)] = amp;
  return out;
}

py::dict result_dict(const ProtocolResult& r) {
  py::dict patterns;
  for (const auto& [pattern, p] : r.pattern_probabilities) patterns[py::str(pattern.to_string())] = p;
  py::dict accepted;
  for (const auto& [pattern, outcome] : r.accepted) accepted[py::str(pattern.to_string())] = outcome.fidelity;
  py::dict out;
  out["fidelity"] = r.output_fidelity;
  out["success_probability"] = r.success_probability;
  out["rejected_probability"] = r.rejected_probability;
  out["patterns"] = patterns;
  out["accepted_fidelity"] = accepted;
  return out;
}

Ensemble pair_input(int m, NoiseKind kind, unsigned index, double fa, double fb) {
  const NoiseSpec pol[] = {{Dof::polarization, kind, index, 1.0 - fa}};
  const NoiseSpec sp[] = {{Dof::spatial, kind, index, 1.0 - fb}};
  return product_ensemble(noisy_ghz(m, Dof::polarization, pol), noisy_ghz(m, Dof::spatial, sp));
}

EfficiencyParams params_from(int photons, double length_km, double attenuation_km, double eta_d,
                             double eta_c, double p1) {
  EfficiencyParams p;
  p.photons = photons;
  p.length_km = length_km;
  p.attenuation_km = attenuation_km;
  p.eta_d = eta_d;
  p.eta_c = eta_c;
  p.p1 = p1;
  return p;
}

}  // namespace

PYBIND11_MODULE(_ghzpur, m) {
  m.doc() = "Hyperentanglement-assisted GHZ purification simulator (C++ core)";
  m.attr("__version__") = tool_version();

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def(
      "ghz_state",
      [](int photons, unsigned index, int sign, bool spatial) {
        const Sign s = sign_from(sign);
        return terms_of(spatial ? make_ghz_spatial(photons, index, s) : make_ghz_pol(photons, index, s));
      },
      py::arg("m"), py::arg("index"), py::arg("sign") = 1, py::arg("spatial") = false,
      "GHZ basis state as {(pol_bits, mode_bits): amplitude}; photon 1 is the most significant bit.");
  m.def(
      "hadamard_polarization",
      [](int photons, unsigned index, int sign) {
        return terms_of(hadamard_pol(make_ghz_pol(photons, index, sign_from(sign))));
      },
      py::arg("m"), py::arg("index"), py::arg("sign") = 1);

  m.def(
      "run_bitflip",
      [](int photons, double fa, double fb) { return result_dict(run_bitflip(pair_input(photons, NoiseKind::bit_flip, 1, fa, fb))); },
      py::arg("m"), py::arg("fa"), py::arg("fb"));
  m.def(
      "run_phaseflip",
      [](int photons, double fa, double fb) {
        return result_dict(run_phaseflip(pair_input(photons, NoiseKind::phase_flip, 0, fa, fb)));
      },
      py::arg("m"), py::arg("fa"), py::arg("fb"));
  m.def("closed_form_fidelity", &closed_form_fidelity_pair, py::arg("fa"), py::arg("fb"));
  m.def("closed_form_success", &closed_form_success_pair, py::arg("fa"), py::arg("fb"));

  m.def(
      "simulate_json",
      [](const std::string& config, bool reproducible) {
        return record_to_json(simulate(parse_config(config), reproducible));
      },
      py::arg("config"), py::arg("reproducible") = true, "Runs a JSON config and returns the JSON record.");
  m.def(
      "verify",
      [](int photons) {
        const auto report = verify(photons);
        py::dict worst;
        for (const auto& [mode, w] : report.worst_by_mode) worst[py::str(mode)] = w;
        py::dict out;
        out["passed"] = report.passed;
        out["cases"] = report.cases.size();
        out["worst_deviation"] = worst;
        return out;
      },
      py::arg("m"));

  m.def(
      "ratio_r",
      [](int n, double l, double l0, double eta_d, double eta_c) {
        return ratio_R(params_from(n, l, l0, eta_d, eta_c, 1.0));
      },
      py::arg("n"), py::arg("length_km"), py::arg("attenuation_km") = 25.0, py::arg("eta_d") = 0.9,
      py::arg("eta_c") = 0.95);
  m.def(
      "p_one",
      [](int n, double l, double l0, double eta_d, double eta_c, double p1) {
        return p_one(params_from(n, l, l0, eta_d, eta_c, p1));
      },
      py::arg("n"), py::arg("length_km"), py::arg("attenuation_km") = 25.0, py::arg("eta_d") = 0.9,
      py::arg("eta_c") = 0.95, py::arg("p1") = 1.0);
  m.def(
      "p_two",
      [](int n, double l, double l0, double eta_d, double eta_c, double p1) {
        return p_two(params_from(n, l, l0, eta_d, eta_c, p1));
      },
      py::arg("n"), py::arg("length_km"), py::arg("attenuation_km") = 25.0, py::arg("eta_d") = 0.9,
      py::arg("eta_c") = 0.95, py::arg("p1") = 1.0);
  m.def(
      "sweep",
      [](const std::string& axis, double from, double to, double step, int n, double l) {
        if (axis != "L" && axis != "N") throw py::value_error("axis must be 'L' or 'N'");
        const auto rows = sweep(params_from(n, l, 25.0, 0.9, 0.95, 1.0),
                                axis == "L" ? SweepAxis::length : SweepAxis::photons, from, to, step);
        std::vector<std::pair<double, double>> out;
        for (const auto& row : rows) out.emplace_back(row.axis_value, row.ratio);
        return out;
      },
      py::arg("axis"), py::arg("start"), py::arg("stop"), py::arg("step") = 1.0, py::arg("n") = 3,
      py::arg("length_km") = 25.0, "List of (axis_value, R) rows.");
}
