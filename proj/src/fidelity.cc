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

#include "geogate/fidelity.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "geogate/csv.h"
#include "geogate/parallel.h"

namespace geogate {
namespace {

// Trapezoid weights on a closed uniform grid over [0, 2pi], normalized to sum to one.
std::vector<double> periodic_trapezoid_weights(std::size_t n) {
  if (n < 2) throw DomainError("need at least two theta samples");
  std::vector<double> w(n, 1.0);
  w.front() = w.back() = 0.5;
  const double total = static_cast<double>(n - 1);
  for (auto& x : w) x /= total;
  return w;
}

double theta_at(std::size_t k, std::size_t n) { return 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n - 1); }

HamiltonianSampler model_hamiltonian(const GateStage& stage, const FidelitySettings& settings, double omega0) {
  auto base = settings.model == SingleQubitModel::kTwoLevel ? two_level_hamiltonian(stage.drive)
                                                            : three_level_hamiltonian(stage.drive, settings.anharmonicity);
  return error_inject(base, settings.errors, stage.drive, omega0);
}

std::size_t model_dim(SingleQubitModel model) { return model == SingleQubitModel::kTwoLevel ? 2 : 3; }

// The four images of the qubit matrix units |i><j| after the whole gate.
std::array<Matrix, 4> propagate_units(const SingleQubitGate& gate, const FidelitySettings& settings, double dt) {
  const std::size_t dim = model_dim(settings.model);
  std::vector<Matrix> units;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix e = Matrix::Zero(dim, dim);
      e(i, j) = 1.0;
      units.push_back(e);
    }
  const auto collapse = transmon_collapse(dim, settings.rates);
  for (const auto& stage : gate.stages)
    units = propagate_operators(model_hamiltonian(stage, settings, gate.omega0), std::move(units), collapse, 0.0,
                                stage.duration, dt);
  return {units[0], units[1], units[2], units[3]};
}

double average_from_units(const std::array<Matrix, 4>& units, const Matrix& target, std::size_t samples) {
  const auto weights = periodic_trapezoid_weights(samples);
  const auto dim = units[0].rows();
  double total = 0.0;
  Vector ideal = Vector::Zero(dim);
  for (std::size_t k = 0; k < samples; ++k) {
    const double th = theta_at(k, samples);
    const double c = std::cos(th), s = std::sin(th);
    ideal.head(2) = target * Eigen::Vector2cd(c, s);
    const double f = c * c * ideal.dot(units[0] * ideal).real() + c * s * ideal.dot(units[1] * ideal).real() +
                     s * c * ideal.dot(units[2] * ideal).real() + s * s * ideal.dot(units[3] * ideal).real();
    total += weights[k] * f;
  }
  return total;
}

double average_1q_at(const SingleQubitGate& gate, const FidelitySettings& settings, double dt) {
  return average_from_units(propagate_units(gate, settings, dt), gate.target, settings.theta_samples);
}

GateStage constant_stage(double duration, double detuning, Complex omega) {
  return {[detuning, omega](double) { return DrivePulse::Sample{detuning, omega}; }, duration};
}

}  // namespace

double state_fidelity(const Matrix& rho, const Vector& target) {
  if (target.size() > rho.rows()) throw DomainError("state_fidelity: target larger than state");
  Vector padded = Vector::Zero(rho.rows());
  padded.head(target.size()) = target;
  return padded.dot(rho * padded).real();
}

double state_fidelity(const DensityMatrix& rho, const Vector& target) { return state_fidelity(rho.matrix(), target); }

double SingleQubitGate::duration() const {
  double total = 0.0;
  for (const auto& s : stages) total += s.duration;
  return total;
}

SingleQubitGate geometric_gate(const PathSpec& spec, const std::string& name, const std::vector<double>& coeffs,
                               const AmplitudeBudget& budget, double dt, std::optional<double> anharmonicity) {
  SingleQubitGate out;
  out.spec = spec;
  out.target = target_unitary(spec);
  out.omega0 = budget.omega0;
  auto pulse = synthesize_pulse(spec, coeffs, budget, dt);
  if (anharmonicity) pulse = drag_correct(pulse, *anharmonicity);
  out.label = "geo_" + name + (coeffs.empty() ? "" : "_po") + (anharmonicity ? "_drag" : "");
  out.stages.push_back({drive_of(pulse), pulse.tau});
  out.pulse = std::move(pulse);
  return out;
}

SingleQubitGate geometric_gate(Gate gate, const std::vector<double>& coeffs, const AmplitudeBudget& budget, double dt,
                               std::optional<double> anharmonicity) {
  return geometric_gate(gate_spec(gate), gate_name(gate), coeffs, budget, dt, anharmonicity);
}

SingleQubitGate dynamical_comparator(Gate gate, const AmplitudeBudget& budget) {
  return dynamical_comparator(gate_spec(gate), gate_name(gate), budget);
}

SingleQubitGate dynamical_comparator(const PathSpec& spec, const std::string& name, const AmplitudeBudget& budget) {
  SingleQubitGate out;
  out.spec = spec;
  out.target = target_unitary(out.spec);
  out.omega0 = budget.omega0;
  out.label = "dyn_" + name;
  const double w = budget.omega0;
  const double angle = 2.0 * out.spec.gamma_g;
  const double transverse = std::sin(out.spec.alpha0);
  if (transverse > 1e-12) {
    // H = (A/2) n.sigma with the transverse part at the budget: A = Omega0 / sin(alpha0).
    const double a = w / transverse;
    out.stages.push_back(
        constant_stage(angle / a, -a * std::cos(out.spec.alpha0), std::polar(w, out.spec.beta0)));
  } else {
    out.stages.push_back(constant_stage(0.5 * kPi / w, 0.0, std::polar(w, 0.5 * kPi)));
    out.stages.push_back(constant_stage(angle / w, 0.0, Complex{w, 0.0}));
    out.stages.push_back(constant_stage(0.5 * kPi / w, 0.0, std::polar(w, -0.5 * kPi)));
  }
  return out;
}

double average_gate_fidelity_1q(const SingleQubitGate& gate, const FidelitySettings& settings) {
  const double f = average_1q_at(gate, settings, settings.dt);
  if (settings.convergence_guard) {
    const double fine = average_1q_at(gate, settings, 0.5 * settings.dt);
    if (std::abs(fine - f) > 1e-6)
      throw ConvergenceError("average_gate_fidelity_1q: halving dt changed F by " + std::to_string(fine - f));
  }
  return f;
}

DensityMatrix evolve_gate(const SingleQubitGate& gate, const FidelitySettings& settings, const Vector& psi0) {
  const std::size_t dim = model_dim(settings.model);
  Vector padded = Vector::Zero(dim);
  padded.head(psi0.size()) = psi0;
  auto rho = DensityMatrix::pure(padded);
  const auto collapse = transmon_collapse(dim, settings.rates);
  EvolutionOptions options;
  options.dt = settings.dt;
  for (const auto& stage : gate.stages)
    rho = DensityMatrix(
        evolve_lindblad(model_hamiltonian(stage, settings, gate.omega0), rho, collapse, 0.0, stage.duration, options)
            .states.back());
  return rho;
}

TwoQubitResult average_gate_fidelity_2q(const TwoQubitSettings& settings) {
  auto run = [&](double dt) {
    auto drive = std::make_shared<const TwoQubitDrive>(
        make_two_qubit_drive(settings.params, settings.gamma_prime, settings.g_prime_max, dt, settings.coeffs));
    const bool full = settings.model == TwoQubitModel::kFull;
    const auto h = full ? two_qubit_full_hamiltonian(settings.params, drive)
                        : embed(effective_two_qubit_hamiltonian(drive), {pair_index(1, 1), pair_index(0, 2)}, 9);

    const std::array<std::size_t, 4> qubit{pair_index(0, 0), pair_index(0, 1), pair_index(1, 0), pair_index(1, 1)};
    std::vector<Matrix> units;
    for (auto i : qubit)
      for (auto j : qubit) {
        Matrix e = Matrix::Zero(9, 9);
        e(i, j) = 1.0;
        units.push_back(e);
      }
    units = propagate_operators(h, std::move(units), pair_collapse(settings.rates), 0.0, drive->tau, dt);
    if (full) {
      const Matrix frame = two_qubit_frame_correction(*drive);
      for (auto& u : units) u = frame * u * frame.adjoint();
    }

    const Matrix target = target_unitary_2q(settings.gamma_prime);
    const std::size_t n = settings.theta_samples;
    const auto weights = periodic_trapezoid_weights(n);
    TwoQubitResult result;
    result.tau = drive->tau;
    Vector ideal = Vector::Zero(9);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const double ta = theta_at(a, n), tb = theta_at(b, n);
        const Eigen::Vector4d v(std::cos(ta) * std::cos(tb), std::cos(ta) * std::sin(tb), std::sin(ta) * std::cos(tb),
                                std::sin(ta) * std::sin(tb));
        const Eigen::Vector4cd out = target * v.cast<Complex>();
        ideal.setZero();
        for (std::size_t k = 0; k < 4; ++k) ideal(qubit[k]) = out(k);
        double f = 0.0, kept = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) {
            const double c = v(i) * v(j);
            if (c == 0.0) continue;
            const Matrix& r = units[4 * i + j];
            f += c * ideal.dot(r * ideal).real();
            for (auto q : qubit) kept += c * r(q, q).real();
          }
        result.fidelity += weights[a] * weights[b] * f;
        result.leakage += weights[a] * weights[b] * (1.0 - kept);
      }
    }
    return result;
  };

  auto result = run(settings.dt);
  if (settings.convergence_guard) {
    const auto fine = run(0.5 * settings.dt);
    if (std::abs(fine.fidelity - result.fidelity) > 1e-6)
      throw ConvergenceError("average_gate_fidelity_2q: halving dt changed F by " +
                             std::to_string(fine.fidelity - result.fidelity));
  }
  return result;
}

ScanResult robustness_scan(const std::vector<SingleQubitGate>& variants, ScanAxis axis, std::size_t n_points,
                           const FidelitySettings& settings, double range) {
  if (n_points < 1) throw DomainError("robustness_scan: need at least one point");
  if (!(range >= 0.0)) throw DomainError("robustness_scan: range must be non-negative");
  ScanResult scan;
  scan.axis = axis;
  auto value = [&](std::size_t k) {
    return n_points == 1 ? 0.0 : -range + 2.0 * range * static_cast<double>(k) / static_cast<double>(n_points - 1);
  };
  if (axis == ScanAxis::kGrid2D) {
    for (std::size_t i = 0; i < n_points; ++i)
      for (std::size_t j = 0; j < n_points; ++j) {
        scan.epsilon.push_back(value(i));
        scan.delta.push_back(value(j));
      }
  } else {
    for (std::size_t k = 0; k < n_points; ++k) {
      scan.epsilon.push_back(axis == ScanAxis::kEpsilonX ? value(k) : 0.0);
      scan.delta.push_back(axis == ScanAxis::kDeltaZ ? value(k) : 0.0);
    }
  }
  const std::size_t points = scan.epsilon.size();
  for (const auto& v : variants) scan.variants.push_back(v.label);
  scan.fidelities.assign(variants.size(), std::vector<double>(points));
  parallel_for(variants.size() * points, [&](std::size_t job) {
    const std::size_t v = job / points, p = job % points;
    FidelitySettings local = settings;
    local.errors = {scan.epsilon[p], scan.delta[p]};
    scan.fidelities[v][p] = average_gate_fidelity_1q(variants[v], local);
  });
  return scan;
}

void write_scan_csv(const ScanResult& scan, const std::filesystem::path& path) {
  std::vector<std::string> header;
  if (scan.axis == ScanAxis::kGrid2D) {
    header = {"epsilon", "delta"};
  } else {
    header = {scan.axis == ScanAxis::kEpsilonX ? "epsilon" : "delta"};
  }
  for (const auto& v : scan.variants) header.push_back("fidelity_" + v);
  CsvWriter csv(path, header);
  std::vector<double> row;
  for (std::size_t p = 0; p < scan.epsilon.size(); ++p) {
    row.clear();
    if (scan.axis == ScanAxis::kGrid2D) {
      row = {scan.epsilon[p], scan.delta[p]};
    } else {
      row = {scan.axis == ScanAxis::kEpsilonX ? scan.epsilon[p] : scan.delta[p]};
    }
    for (const auto& f : scan.fidelities) row.push_back(f[p]);
    csv.row(row);
  }
}

FidelityTrace fidelity_dynamics(const SingleQubitGate& gate, const FidelitySettings& settings, const Vector& psi0,
                                const HamiltonianSampler& reference, std::size_t record_every) {
  if (gate.stages.size() != 1) throw DomainError("fidelity_dynamics: expects a single-stage gate");
  if (reference.dim() != 2) throw DomainError("fidelity_dynamics: reference must be a 2-level sampler");
  const auto& stage = gate.stages.front();
  const std::size_t dim = model_dim(settings.model);
  Vector padded = Vector::Zero(dim);
  padded.head(2) = psi0.head(2);
  EvolutionOptions options;
  options.dt = settings.dt;
  options.record_every = std::max<std::size_t>(1, record_every);
  const auto model = evolve_lindblad(model_hamiltonian(stage, settings, gate.omega0), DensityMatrix::pure(padded),
                                     transmon_collapse(dim, settings.rates), 0.0, stage.duration, options);
  const auto ideal = evolve_state(reference, psi0.head(2) / psi0.head(2).norm(), 0.0, stage.duration, settings.dt);
  const std::size_t steps = ideal.times.size() - 1;

  FidelityTrace trace;
  for (std::size_t k = 0; k < model.times.size(); ++k) {
    const std::size_t step = k == model.times.size() - 1 ? steps : k * options.record_every;
    const Vector ref = ideal.states[step].col(0);
    trace.times.push_back(model.times[k]);
    trace.fidelity.push_back(state_fidelity(model.states[k], ref));
    std::vector<double> pops(dim);
    for (std::size_t i = 0; i < dim; ++i) pops[i] = model.states[k](i, i).real();
    trace.populations.push_back(std::move(pops));
  }
  return trace;
}

void write_fidelity_trace_csv(const FidelityTrace& trace, const std::filesystem::path& path) {
  std::vector<std::string> header{"t_ns"};
  const std::size_t levels = trace.populations.empty() ? 0 : trace.populations.front().size();
  for (std::size_t i = 0; i < levels; ++i) header.push_back("pop_" + std::to_string(i));
  header.push_back("fidelity");
  CsvWriter csv(path, header);
  std::vector<double> row;
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    row.assign({trace.times[k]});
    row.insert(row.end(), trace.populations[k].begin(), trace.populations[k].end());
    row.push_back(trace.fidelity[k]);
    csv.row(row);
  }
}

}  // namespace geogate
