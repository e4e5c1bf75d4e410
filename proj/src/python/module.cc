// Copyright 2026 The geogate Authors
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

#include <optional>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geogate/bessel.h"
#include "geogate/fidelity.h"
#include "geogate/optimizer.h"
#include "geogate/version.h"

namespace py = pybind11;
using namespace geogate;

namespace {

Gate to_gate(const std::string& name) {
  const auto g = parse_gate(name);
  if (!g) throw py::value_error("unknown gate '" + name + "'");
  return *g;
}

SingleQubitModel to_model(const std::string& name) {
  if (name == "two_level") return SingleQubitModel::kTwoLevel;
  if (name == "three_level") return SingleQubitModel::kThreeLevel;
  throw py::value_error("model must be two_level or three_level");
}

py::dict pulse_dict(const DrivePulse& p) {
  py::dict d;
  d["tau_ns"] = p.tau;
  d["t_ns"] = p.t;
  d["delta_rad_per_ns"] = p.detuning;
  d["omega_s_rad_per_ns"] = p.envelope;
  d["phase_rad"] = p.phase;
  if (p.has_drag()) d["drag_rad_per_ns"] = p.drag;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shortest-path nonadiabatic geometric gates: pulse synthesis, open-system fidelity, optimization.";
  m.attr("__version__") = kVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def("mhz_to_rad_per_ns", &mhz_to_rad_per_ns, py::arg("mhz"));

  m.def(
      "synthesize_pulse",
      [](const std::string& gate, std::vector<double> coeffs, double omega0, double dt,
         std::optional<double> anharmonicity) {
        auto pulse = synthesize_pulse(gate_spec(to_gate(gate)), coeffs, AmplitudeBudget(omega0), dt);
        if (anharmonicity) pulse = drag_correct(pulse, *anharmonicity);
        return pulse_dict(pulse);
      },
      py::arg("gate"), py::arg("coeffs") = std::vector<double>{}, py::arg("omega0") = mhz_to_rad_per_ns(30.0),
      py::arg("dt") = 1e-3, py::arg("anharmonicity") = py::none(),
      "Pulse waveforms on the half-step integrator grid, rad/ns and ns.");

  m.def(
      "gate_duration",
      [](const std::string& gate, std::vector<double> coeffs, double omega0) {
        const auto spec = gate_spec(to_gate(gate));
        return normalize_duration(sample_trajectory(spec, BetaSchedule::for_spec(spec, coeffs)),
                                  AmplitudeBudget(omega0));
      },
      py::arg("gate"), py::arg("coeffs") = std::vector<double>{}, py::arg("omega0") = mhz_to_rad_per_ns(30.0));

  m.def(
      "geometric_phase",
      [](const std::string& gate, std::vector<double> coeffs) {
        const auto spec = gate_spec(to_gate(gate));
        return geometric_phase(sample_trajectory(spec, BetaSchedule::for_spec(spec, coeffs)));
      },
      py::arg("gate"), py::arg("coeffs") = std::vector<double>{});

  m.def(
      "target_unitary", [](const std::string& gate) { return Eigen::MatrixXcd(target_unitary(gate_spec(to_gate(gate)))); },
      py::arg("gate"));

  m.def(
      "average_gate_fidelity",
      [](const std::string& gate, const std::string& model, std::vector<double> coeffs, bool drag, bool comparator,
         double gamma, double kappa, double epsilon, double delta, double dt, std::size_t theta_samples) {
        FidelitySettings s;
        s.model = to_model(model);
        s.rates = {gamma, kappa};
        s.errors = {epsilon, delta};
        s.dt = dt;
        s.theta_samples = theta_samples;
        const AmplitudeBudget budget;
        const auto g = comparator ? dynamical_comparator(to_gate(gate), budget)
                                  : geometric_gate(to_gate(gate), coeffs, budget, dt,
                                                   drag ? std::optional<double>(s.anharmonicity) : std::nullopt);
        py::gil_scoped_release release;
        return average_gate_fidelity_1q(g, s);
      },
      py::arg("gate"), py::arg("model") = "two_level", py::arg("coeffs") = std::vector<double>{},
      py::arg("drag") = false, py::arg("comparator") = false,
      py::arg("gamma") = DecoherenceRates::transmon_default().gamma_decay, py::arg("kappa") = DecoherenceRates::transmon_default().kappa_dephase,
      py::arg("epsilon") = 0.0, py::arg("delta") = 0.0, py::arg("dt") = 1e-3, py::arg("theta_samples") = 1001);

  m.def(
      "two_qubit_fidelity",
      [](bool full, std::vector<double> coeffs, double gamma, double kappa, double dt, std::size_t theta_samples) {
        TwoQubitSettings s;
        s.model = full ? TwoQubitModel::kFull : TwoQubitModel::kEffective;
        s.coeffs = std::move(coeffs);
        s.rates = {gamma, kappa};
        s.dt = dt;
        s.theta_samples = theta_samples;
        TwoQubitResult r;
        {
          py::gil_scoped_release release;
          r = average_gate_fidelity_2q(s);
        }
        py::dict d;
        d["fidelity"] = r.fidelity;
        d["tau_ns"] = r.tau;
        d["leakage"] = r.leakage;
        return d;
      },
      py::arg("full") = true, py::arg("coeffs") = std::vector<double>{},
      py::arg("gamma") = DecoherenceRates::transmon_default().gamma_decay, py::arg("kappa") = DecoherenceRates::transmon_default().kappa_dephase,
      py::arg("dt") = 1e-3, py::arg("theta_samples") = 51);

  m.def(
      "optimize",
      [](const std::string& gate, std::uint64_t seed, std::size_t starts, std::size_t evals, bool pin_endpoints) {
        OptimizationProblem p{gate_spec(to_gate(gate)), AmplitudeBudget{}};
        p.seed = seed;
        p.starts = starts;
        p.evals_per_start = evals;
        p.pin_endpoints = pin_endpoints;
        OptimizationResult r;
        {
          py::gil_scoped_release release;
          r = optimize(p);
        }
        py::dict d;
        d["coeffs"] = r.coeffs;
        d["tau_ns"] = r.tau;
        d["baseline_tau_ns"] = r.baseline_tau;
        d["evaluations"] = r.history.size();
        return d;
      },
      py::arg("gate"), py::arg("seed") = 1, py::arg("starts") = 16, py::arg("evals_per_start") = 500,
      py::arg("pin_endpoints") = true);

  m.def("bessel_j1", &bessel_j1, py::arg("x"));
  m.def("invert_bessel_j1", &invert_bessel_j1, py::arg("y"));
}
