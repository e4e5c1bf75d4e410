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

#include "geogate/pulse_synth.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geogate/csv.h"

namespace geogate {
namespace {

void unwrap(std::vector<double>& angles) {
  double offset = 0.0;
  double previous_raw = angles.empty() ? 0.0 : angles[0];
  for (std::size_t i = 1; i < angles.size(); ++i) {
    const double raw = angles[i];
    const double jump = raw - previous_raw;
    if (std::abs(jump) > kPi) offset -= 2.0 * kPi * std::round(jump / (2.0 * kPi));
    previous_raw = raw;
    angles[i] = raw + offset;
  }
}

}  // namespace

AmplitudeBudget::AmplitudeBudget(double omega0_rad_per_ns) : omega0(omega0_rad_per_ns) {
  if (!(omega0 > 0.0)) throw DomainError("amplitude budget must be positive");
}

PathSpec gate_spec(Gate gate) {
  switch (gate) {
    case Gate::kPhase:
      return PathSpec::pole_start(kPi / 4.0);
    case Gate::kPiOver8:
      return PathSpec::pole_start(kPi / 8.0);
    case Gate::kHadamard:
      return PathSpec::hadamard_start();
  }
  throw DomainError("unknown gate");
}

std::string gate_name(Gate gate) {
  switch (gate) {
    case Gate::kPhase:
      return "phase";
    case Gate::kPiOver8:
      return "pi8";
    case Gate::kHadamard:
      return "hadamard";
  }
  return "?";
}

std::optional<Gate> parse_gate(std::string_view name) {
  if (name == "phase" || name == "s") return Gate::kPhase;
  if (name == "pi8" || name == "t") return Gate::kPiOver8;
  if (name == "hadamard" || name == "h") return Gate::kHadamard;
  return std::nullopt;
}

Complex DrivePulse::raising_amplitude(std::size_t i) const {
  const Complex carrier = std::polar(1.0, phase[i]);
  return has_drag() ? std::conj(drag[i]) * carrier : envelope[i] * carrier;
}

DrivePulse::Sample DrivePulse::at(double time) const {
  const double x = std::clamp(time / spacing(), 0.0, static_cast<double>(size() - 1));
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-9) {
    const auto i = static_cast<std::size_t>(nearest);
    return {detuning[i], raising_amplitude(i)};
  }
  const auto i = static_cast<std::size_t>(std::floor(x));
  const double w = x - static_cast<double>(i);
  return {(1.0 - w) * detuning[i] + w * detuning[i + 1],
          (1.0 - w) * raising_amplitude(i) + w * raising_amplitude(i + 1)};
}

double detuning_of(const PathPoint& point, double tau) {
  if (!(tau > 0.0)) throw DomainError("detuning_of: tau must be positive");
  const double s = std::sin(point.alpha);
  return -(point.dbeta_ds / tau) * s * s;
}

RabiEnvelope rabi_envelope(const PathTrajectory& traj, double tau) {
  const std::size_t n = traj.samples.size();
  RabiEnvelope out{std::vector<double>(n), std::vector<double>(n)};
  std::vector<double> along(n), across(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = traj.samples[i];
    along[i] = p.dalpha_ds / tau;
    across[i] = p.dbeta_ds / tau * std::sin(p.alpha) * std::cos(p.alpha);
    out.envelope[i] = std::hypot(along[i], across[i]);
    peak = std::max(peak, out.envelope[i]);
  }

  // Samples where the drive vanishes carry no phase information.
  const double floor = 1e-12 * peak;
  std::vector<bool> defined(n);
  for (std::size_t i = 0; i < n; ++i) {
    defined[i] = out.envelope[i] > floor;
    out.zeta[i] = defined[i] ? std::atan2(along[i], across[i]) : 0.0;
  }
  if (std::none_of(defined.begin(), defined.end(), [](bool b) { return b; })) return out;

  std::size_t first = 0;
  while (!defined[first]) ++first;
  for (std::size_t i = 0; i < first; ++i) out.zeta[i] = out.zeta[first];
  for (std::size_t i = first + 1; i < n; ++i)
    if (!defined[i]) out.zeta[i] = out.zeta[i - 1];
  unwrap(out.zeta);
  return out;
}

double normalize_duration(const PathTrajectory& traj, const AmplitudeBudget& budget) {
  double peak = 0.0;
  for (const auto& p : traj.samples) {
    const double across = p.dbeta_ds * std::sin(p.alpha) * std::cos(p.alpha);
    peak = std::max(peak, std::hypot(p.dalpha_ds, across));
  }
  return peak / budget.omega0;
}

DrivePulse pulse_from_trajectory(const PathTrajectory& traj, double tau) {
  if (!(tau > 0.0)) throw DomainError("pulse_from_trajectory: tau must be positive");
  const std::size_t n = traj.samples.size();
  auto env = rabi_envelope(traj, tau);
  DrivePulse pulse;
  pulse.tau = tau;
  pulse.t.resize(n);
  pulse.detuning.resize(n);
  pulse.phase.resize(n);
  pulse.dbeta_dt.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = traj.samples[i];
    pulse.t[i] = traj.s_at(i) * tau;
    pulse.detuning[i] = detuning_of(p, tau);
    pulse.phase[i] = p.beta - env.zeta[i] + kPi;
    pulse.dbeta_dt[i] = p.dbeta_ds / tau;
  }
  pulse.envelope = std::move(env.envelope);
  pulse.zeta = std::move(env.zeta);
  return pulse;
}

std::size_t step_count(double tau, double dt) {
  if (!(dt > 0.0) || !(tau > 0.0)) throw DomainError("step_count: tau and dt must be positive");
  // Guard against ceil(19.999999999) style round-up from representation error.
  const double ratio = tau / dt;
  const double nearest = std::round(ratio);
  const double steps = std::abs(ratio - nearest) < 1e-9 * std::max(1.0, nearest) ? nearest : std::ceil(ratio);
  return std::max<std::size_t>(1, static_cast<std::size_t>(steps));
}

DrivePulse synthesize_pulse(const PathSpec& spec, const std::vector<double>& coeffs, const AmplitudeBudget& budget,
                            double dt, std::size_t norm_grid_points) {
  auto schedule = BetaSchedule::for_spec(spec, coeffs);
  const double tau = normalize_duration(sample_trajectory(spec, schedule, norm_grid_points), budget);
  schedule.tau = tau;
  const std::size_t steps = step_count(tau, dt);
  return pulse_from_trajectory(sample_trajectory(spec, schedule, 2 * steps + 1), tau);
}

std::vector<double> finite_difference(const std::vector<double>& values, double spacing) {
  const std::size_t n = values.size();
  std::vector<double> d(n, 0.0);
  if (n < 3) {
    if (n == 2) d[0] = d[1] = (values[1] - values[0]) / spacing;
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (values[i + 1] - values[i - 1]) / (2.0 * spacing);
  d[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * spacing);
  d[n - 1] = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * spacing);
  return d;
}

DrivePulse drag_correct(const DrivePulse& pulse, double anharmonicity) {
  if (anharmonicity == 0.0 || std::isnan(anharmonicity)) throw DomainError("drag_correct: anharmonicity must be nonzero");
  DrivePulse out = pulse;
  out.drag.assign(pulse.size(), Complex{});
  if (std::isinf(anharmonicity)) {
    for (std::size_t i = 0; i < pulse.size(); ++i) out.drag[i] = pulse.envelope[i];
    return out;
  }
  const double h = pulse.spacing();
  const auto denv = finite_difference(pulse.envelope, h);
  const auto dzeta = finite_difference(pulse.zeta, h);
  for (std::size_t i = 0; i < pulse.size(); ++i) {
    const double env = pulse.envelope[i];
    const Complex correction = kI * denv[i] + (pulse.dbeta_dt[i] - dzeta[i] + pulse.detuning[i]) * env;
    out.drag[i] = env - correction / (2.0 * anharmonicity);
  }
  return out;
}

std::pair<Vector, Vector> auxiliary_states(double alpha, double beta) {
  Vector plus(2), minus(2);
  plus << std::cos(alpha / 2.0), std::sin(alpha / 2.0) * std::polar(1.0, beta);
  minus << std::sin(alpha / 2.0) * std::polar(1.0, -beta), -std::cos(alpha / 2.0);
  return {plus, minus};
}

Matrix target_unitary(const PathSpec& spec) {
  auto [plus, minus] = auxiliary_states(spec.alpha0, spec.beta0);
  return std::polar(1.0, -spec.gamma_g) * plus * plus.adjoint() + std::polar(1.0, spec.gamma_g) * minus * minus.adjoint();
}

Matrix target_unitary_2q(double gamma_g_prime) {
  Matrix u = Matrix::Identity(4, 4);
  u(3, 3) = std::polar(1.0, -gamma_g_prime);
  return u;
}

void write_pulse_csv(const DrivePulse& pulse, const std::filesystem::path& path) {
  CsvWriter csv(path, {"t_ns", "delta_rad_per_ns", "omega_s_rad_per_ns", "phase_rad", "drag_re_rad_per_ns",
                       "drag_im_rad_per_ns"});
  for (std::size_t i = 0; i < pulse.size(); ++i) {
    const Complex d = pulse.has_drag() ? pulse.drag[i] : Complex{pulse.envelope[i], 0.0};
    csv.row({pulse.t[i], pulse.detuning[i], pulse.envelope[i], pulse.phase[i], d.real(), d.imag()});
  }
}

}  // namespace geogate
