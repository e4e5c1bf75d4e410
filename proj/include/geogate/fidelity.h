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

#ifndef GEOGATE_FIDELITY_H_
#define GEOGATE_FIDELITY_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "geogate/dynamics.h"
#include "geogate/linalg.h"
#include "geogate/pulse_synth.h"

namespace geogate {

/// <target|rho|target>, with `target` zero-padded to the dimension of rho.
double state_fidelity(const DensityMatrix& rho, const Vector& target);
double state_fidelity(const Matrix& rho, const Vector& target);

/// A drive held for a fixed duration. Gates are sequences of stages so that
/// piecewise-constant comparators integrate without straddling a jump.
struct GateStage {
  DriveFn drive;
  double duration = 0.0;
};

struct SingleQubitGate {
  std::string label;
  PathSpec spec;
  Matrix target;  // 2 x 2
  std::vector<GateStage> stages;
  double omega0 = 0.0;
  std::optional<DrivePulse> pulse;  // set for geometric gates

  double duration() const;
};

/// Shortest-path geometric gate. With `anharmonicity` set, the drive carries the DRAG correction.
SingleQubitGate geometric_gate(Gate gate, const std::vector<double>& coeffs, const AmplitudeBudget& budget, double dt,
                               std::optional<double> anharmonicity = std::nullopt);
SingleQubitGate geometric_gate(const PathSpec& spec, const std::string& name, const std::vector<double>& coeffs,
                               const AmplitudeBudget& budget, double dt,
                               std::optional<double> anharmonicity = std::nullopt);

/// Conventional gate with the same target and budget, built from constant drives:
/// one tilted-axis rotation when the target axis has a transverse part (transverse amplitude
/// Omega0), otherwise Ry(pi/2), Rx(2 gamma), Ry(-pi/2) at amplitude Omega0.
SingleQubitGate dynamical_comparator(Gate gate, const AmplitudeBudget& budget);
SingleQubitGate dynamical_comparator(const PathSpec& spec, const std::string& name, const AmplitudeBudget& budget);

enum class SingleQubitModel { kTwoLevel, kThreeLevel };

struct FidelitySettings {
  SingleQubitModel model = SingleQubitModel::kTwoLevel;
  double anharmonicity = mhz_to_rad_per_ns(220.0);
  DecoherenceRates rates = DecoherenceRates::transmon_default();
  ErrorFractions errors;
  double dt = 1e-3;
  std::size_t theta_samples = 1001;
  bool convergence_guard = false;  // recompute at dt / 2; ConvergenceError if F moves by > 1e-6
};

/// Theta-averaged fidelity over |nu> = cos t |0> + sin t |1>, t uniform on [0, 2pi], trapezoid rule.
/// The master equation is linear, so the four qubit matrix units are propagated once and
/// rho(t) is assembled for every initial state.
double average_gate_fidelity_1q(const SingleQubitGate& gate, const FidelitySettings& settings);

/// rho(tau) for one pure initial state, evolved directly (no linearity shortcut).
DensityMatrix evolve_gate(const SingleQubitGate& gate, const FidelitySettings& settings, const Vector& psi0);

enum class TwoQubitModel { kFull, kEffective };

struct TwoQubitSettings {
  TwoQubitModel model = TwoQubitModel::kFull;
  TransmonParams params;
  DecoherenceRates rates = DecoherenceRates::transmon_default();
  double gamma_prime = kPi / 4.0;
  double g_prime_max = mhz_to_rad_per_ns(15.0);
  std::vector<double> coeffs;
  double dt = 1e-3;
  std::size_t theta_samples = 51;  // per qubit
  bool convergence_guard = false;
};

struct TwoQubitResult {
  double fidelity = 0.0;
  double tau = 0.0;
  double leakage = 0.0;  // population outside the qubit subspace, averaged over initial states
};

/// Average over product states (cos t1|0> + sin t1|1>)(cos t2|0> + sin t2|1>) on a uniform grid.
/// For the full model the final states are taken in the frame in which the control-phase target is stated.
TwoQubitResult average_gate_fidelity_2q(const TwoQubitSettings& settings);

enum class ScanAxis { kEpsilonX, kDeltaZ, kGrid2D };

struct ScanResult {
  ScanAxis axis = ScanAxis::kEpsilonX;
  std::vector<double> epsilon;  // per point
  std::vector<double> delta;    // per point
  std::vector<std::string> variants;
  std::vector<std::vector<double>> fidelities;  // [variant][point]
};

/// Average gate fidelity at uniformly spaced error values in [-range, range] (n x n for Grid2D).
ScanResult robustness_scan(const std::vector<SingleQubitGate>& variants, ScanAxis axis, std::size_t n_points,
                           const FidelitySettings& settings, double range = 0.1);

void write_scan_csv(const ScanResult& scan, const std::filesystem::path& path);

struct FidelityTrace {
  std::vector<double> times;
  std::vector<double> fidelity;
  std::vector<std::vector<double>> populations;  // [time][level]
};

/// F(t) against the closed-system evolution of the same initial state under `reference`
/// (a 2-level sampler), with populations of every model level.
FidelityTrace fidelity_dynamics(const SingleQubitGate& gate, const FidelitySettings& settings, const Vector& psi0,
                                const HamiltonianSampler& reference, std::size_t record_every = 10);

void write_fidelity_trace_csv(const FidelityTrace& trace, const std::filesystem::path& path);

}  // namespace geogate

#endif  // GEOGATE_FIDELITY_H_
