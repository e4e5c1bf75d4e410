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

#ifndef GEOGATE_PULSE_SYNTH_H_
#define GEOGATE_PULSE_SYNTH_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geogate/bloch_path.h"
#include "geogate/linalg.h"

namespace geogate {

/// Maximum Rabi amplitude Omega0 in rad/ns.
struct AmplitudeBudget {
  double omega0 = mhz_to_rad_per_ns(30.0);

  AmplitudeBudget() = default;
  explicit AmplitudeBudget(double omega0_rad_per_ns);
};

enum class Gate { kPhase, kPiOver8, kHadamard };

PathSpec gate_spec(Gate gate);
std::string gate_name(Gate gate);
std::optional<Gate> parse_gate(std::string_view name);

/// Drive waveform on a uniform time grid t_i = i * tau / (n - 1).
///
/// `drag`, when present, holds the corrected strength Omega_d(t) in the
/// convention of the transmon Hamiltonian, where it multiplies the lowering
/// operator. The amplitude on |1><0| is then conj(Omega_d) e^{i phase}.
struct DrivePulse {
  double tau = 0.0;
  std::vector<double> t;
  std::vector<double> detuning;  // Delta(t)
  std::vector<double> envelope;  // Omega^s(t) >= 0
  std::vector<double> phase;     // beta - zeta + pi, unwrapped
  std::vector<double> zeta;
  std::vector<double> dbeta_dt;
  std::vector<Complex> drag;

  std::size_t size() const { return t.size(); }
  double spacing() const { return tau / static_cast<double>(t.size() - 1); }
  bool has_drag() const { return !drag.empty(); }

  /// Complex amplitude multiplying |1><0| at sample i.
  Complex raising_amplitude(std::size_t i) const;

  struct Sample {
    double detuning;
    Complex omega;  // amplitude on |1><0|
  };
  /// Linear interpolation between grid samples; exact at grid nodes.
  Sample at(double time) const;
};

struct RabiEnvelope {
  std::vector<double> envelope;
  std::vector<double> zeta;
};

/// Delta = -(d beta/ds / tau) sin^2 alpha.
double detuning_of(const PathPoint& point, double tau);

/// Envelope and zeta = atan2(alpha_dot, beta_dot sin cos), unwrapped.
/// Where both arguments vanish zeta takes the value of the nearest sample where they do not.
RabiEnvelope rabi_envelope(const PathTrajectory& traj, double tau);

/// tau such that the largest envelope sample on the trajectory grid equals the budget.
double normalize_duration(const PathTrajectory& traj, const AmplitudeBudget& budget);

/// Builds the drive for an already-sampled trajectory at duration tau.
DrivePulse pulse_from_trajectory(const PathTrajectory& traj, double tau);

/// Number of RK4 steps for a duration: N = ceil(tau / dt), so the effective step tau / N <= dt.
std::size_t step_count(double tau, double dt);

/// Normalizes the duration on a `norm_grid_points` trajectory, then samples the
/// drive on the 2N + 1 half-step nodes of an RK4 grid with N = step_count(tau, dt).
DrivePulse synthesize_pulse(const PathSpec& spec, const std::vector<double>& coeffs, const AmplitudeBudget& budget,
                            double dt, std::size_t norm_grid_points = kDefaultGridPoints);

/// Leakage correction Omega_d = Omega^s - {i dOmega^s/dt + [beta_dot - zeta_dot + Delta] Omega^s} / (2 anh).
/// An infinite anharmonicity returns the envelope unchanged.
DrivePulse drag_correct(const DrivePulse& pulse, double anharmonicity);

/// Centered differences, second-order one-sided stencils at the ends.
std::vector<double> finite_difference(const std::vector<double>& values, double spacing);

/// |phi_+> and |phi_-> at a point (alpha, beta) of the sphere.
std::pair<Vector, Vector> auxiliary_states(double alpha, double beta);

/// e^{-i g}|phi_+><phi_+| + e^{i g}|phi_-><phi_-| at the starting point,
/// i.e. a rotation by 2 g about n = (sin a0 cos b0, sin a0 sin b0, cos a0).
Matrix target_unitary(const PathSpec& spec);

/// diag(1, 1, 1, e^{-i g}) in the basis |00>, |01>, |10>, |11>.
Matrix target_unitary_2q(double gamma_g_prime);

void write_pulse_csv(const DrivePulse& pulse, const std::filesystem::path& path);

}  // namespace geogate

#endif  // GEOGATE_PULSE_SYNTH_H_
