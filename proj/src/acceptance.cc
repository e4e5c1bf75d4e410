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

#include "geogate/acceptance.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "geogate/bessel.h"
#include "geogate/fidelity.h"
#include "geogate/optimizer.h"

namespace geogate {
namespace {

const std::vector<double> kTableGT{0.007, 0.033, -0.024};
const std::vector<double> kTableGH{0.095, 0.022, -0.046};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

bool within(double value, double expected, double tol) { return std::abs(value - expected) <= tol; }

double tau_of(Gate gate, const std::vector<double>& coeffs) {
  const auto spec = gate_spec(gate);
  return normalize_duration(sample_trajectory(spec, BetaSchedule::for_spec(spec, coeffs)), AmplitudeBudget{});
}

CriterionResult unoptimized_durations(const AcceptanceOptions&) {
  const double t8 = tau_of(Gate::kPiOver8, {});
  const double th = tau_of(Gate::kHadamard, {});
  return {1, "unoptimized durations", within(t8, 19.66, 0.05) && within(th, 23.49, 0.05),
          fmt("tau_pi8=%.4f ns (19.66+-0.05) tau_H=%.4f ns (23.49+-0.05)", t8, th)};
}

CriterionResult table_durations(const AcceptanceOptions&) {
  const double t8 = tau_of(Gate::kPiOver8, kTableGT);
  const double th = tau_of(Gate::kHadamard, kTableGH);
  return {2, "table coefficient durations", within(t8, 16.71, 0.1) && within(th, 19.57, 0.1),
          fmt("tau_GT=%.4f ns (16.71+-0.1) tau_GH=%.4f ns (19.57+-0.1)", t8, th)};
}

CriterionResult optimizer_durations(const AcceptanceOptions& options) {
  double tau[2];
  std::string coeffs[2];
  const Gate gates[2] = {Gate::kPiOver8, Gate::kHadamard};
  for (int i = 0; i < 2; ++i) {
    OptimizationProblem problem{gate_spec(gates[i]), AmplitudeBudget{}};
    problem.seed = options.seed;
    const auto r = optimize(problem);
    tau[i] = r.tau;
    coeffs[i] = fmt("(%.4f,%.4f,%.4f)", r.coeffs[0], r.coeffs[1], r.coeffs[2]);
  }
  return {3, "optimizer from scratch", tau[0] <= 16.8 && tau[1] <= 19.7,
          fmt("tau_GT=%.4f ns (<=16.8) a=%s tau_GH=%.4f ns (<=19.7) a=%s", tau[0], coeffs[0].c_str(), tau[1],
              coeffs[1].c_str())};
}

CriterionResult unitary_oracle(const AcceptanceOptions& options) {
  double worst = 0.0;
  for (auto g : {Gate::kPhase, Gate::kPiOver8, Gate::kHadamard}) {
    const auto gate = geometric_gate(g, {}, AmplitudeBudget{}, options.dt);
    const Matrix u = propagate_unitary(two_level_hamiltonian(gate.stages[0].drive), 0.0, gate.duration(), options.dt);
    worst = std::max(worst, distance_up_to_phase(u, gate.target));
  }
  return {4, "closed-system unitary oracle", worst < 1e-5, fmt("max deviation=%.3e (<1e-5)", worst)};
}

CriterionResult transport_invariants(const AcceptanceOptions& options) {
  const AmplitudeBudget budget;
  double violation = 0.0, cyclic = 0.0;
  for (auto g : {Gate::kPhase, Gate::kPiOver8, Gate::kHadamard}) {
    const auto pulse = synthesize_pulse(gate_spec(g), {}, budget, options.dt);
    const auto report = parallel_transport_check(gate_spec(g), pulse);
    violation = std::max(violation, report.max_violation / budget.omega0);
    cyclic = std::max({cyclic, std::abs(1.0 - report.cyclic_plus), std::abs(1.0 - report.cyclic_minus)});
  }
  return {5, "parallel transport and cyclic evolution", violation < 1e-8 && cyclic < 1e-6,
          fmt("max |<psi|H|psi>|/Omega0=%.3e (<1e-8) max |1-|<phi(0)|psi(tau)>||=%.3e (<1e-6)", violation, cyclic)};
}

CriterionResult drag_fidelity(const AcceptanceOptions& options) {
  FidelitySettings settings;
  settings.model = SingleQubitModel::kThreeLevel;
  settings.dt = options.dt;
  const AmplitudeBudget budget;
  const double f8 = average_gate_fidelity_1q(
      geometric_gate(Gate::kPiOver8, {}, budget, options.dt, settings.anharmonicity), settings);
  const double fh = average_gate_fidelity_1q(
      geometric_gate(Gate::kHadamard, {}, budget, options.dt, settings.anharmonicity), settings);
  return {6, "three-level DRAG fidelity", within(f8, 0.9996, 3e-4) && within(fh, 0.9997, 3e-4),
          fmt("F_pi8=%.6f (0.9996+-0.0003) F_H=%.6f (0.9997+-0.0003)", f8, fh)};
}

CriterionResult two_qubit(const AcceptanceOptions& options) {
  TwoQubitSettings settings;
  settings.dt = options.dt;
  OptimizationProblem problem{PathSpec::pole_start(settings.gamma_prime), AmplitudeBudget{settings.g_prime_max}};
  problem.seed = options.seed;
  settings.coeffs = optimize(problem).coeffs;
  const auto r = average_gate_fidelity_2q(settings);
  return {7, "two-qubit control phase", within(r.fidelity, 0.9981, 1.5e-3) && within(r.tau, 43.50, 0.5),
          fmt("F=%.6f (0.9981+-0.0015) tau'=%.3f ns (43.50+-0.5) leakage=%.2e a=(%.4f,%.4f,%.4f)", r.fidelity, r.tau,
              r.leakage, settings.coeffs[0], settings.coeffs[1], settings.coeffs[2])};
}

CriterionResult robustness(const AcceptanceOptions& options) {
  FidelitySettings settings;
  settings.dt = options.dt;
  const AmplitudeBudget budget;
  bool ok = true;
  std::ostringstream detail;
  for (auto g : {Gate::kPiOver8, Gate::kHadamard}) {
    const std::vector<SingleQubitGate> variants{geometric_gate(g, {}, budget, options.dt),
                                                dynamical_comparator(g, budget)};
    for (auto axis : {ScanAxis::kEpsilonX, ScanAxis::kDeltaZ}) {
      const auto scan = robustness_scan(variants, axis, 41, settings);
      for (std::size_t p : {std::size_t{0}, scan.epsilon.size() - 1}) {
        const double x = axis == ScanAxis::kEpsilonX ? scan.epsilon[p] : scan.delta[p];
        const double geo = scan.fidelities[0][p], dyn = scan.fidelities[1][p];
        const bool better = geo > dyn;
        ok = ok && better;
        detail << gate_name(g) << (axis == ScanAxis::kEpsilonX ? " eps=" : " delta=") << fmt("%+.1f", x)
               << fmt(" geo=%.5f dyn=%.5f %s; ", geo, dyn, better ? "ok" : "WORSE");
      }
    }
  }
  auto text = detail.str();
  if (text.size() >= 2) text.resize(text.size() - 2);
  return {8, "robustness ordering", ok, text};
}

CriterionResult phase_invariance(const AcceptanceOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> draw(-0.2, 0.2);
  double worst = 0.0;
  int drawn = 0;
  for (auto g : {Gate::kPiOver8, Gate::kHadamard}) {
    const auto spec = gate_spec(g);
    for (int k = 0; k < 10; ++k) {
      BetaSchedule schedule;
      do {
        schedule = BetaSchedule::for_spec(spec, {draw(rng), draw(rng), draw(rng)});
      } while (!azimuth_monotone(schedule));
      worst = std::max(worst, std::abs(geometric_phase(sample_trajectory(spec, schedule)) - spec.gamma_g));
      ++drawn;
    }
  }
  return {9, "geometric phase invariance", worst < 1e-6,
          fmt("%d random schedules, max |gamma - gamma_g|=%.3e rad (<1e-6)", drawn, worst)};
}

CriterionResult hygiene(const AcceptanceOptions& options) {
  FidelitySettings settings;
  settings.model = SingleQubitModel::kThreeLevel;
  settings.dt = options.dt;
  const AmplitudeBudget budget;
  const auto gate = geometric_gate(Gate::kPiOver8, {}, budget, options.dt, settings.anharmonicity);

  Vector psi0(2);
  psi0 << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  Vector padded = Vector::Zero(3);
  padded.head(2) = psi0;
  EvolutionOptions evo;
  evo.dt = options.dt;
  evo.record_every = 1;
  const auto traj = evolve_lindblad(three_level_hamiltonian(gate.stages[0].drive, settings.anharmonicity),
                                    DensityMatrix::pure(padded), transmon_collapse(3, settings.rates), 0.0,
                                    gate.duration(), evo);
  double trace = 0.0;
  for (const auto& rho : traj.states) trace = std::max(trace, std::abs(rho.trace() - 1.0));

  const double coarse = average_gate_fidelity_1q(gate, settings);
  FidelitySettings fine = settings;
  fine.dt = 0.5 * settings.dt;
  const double halving = std::abs(average_gate_fidelity_1q(gate, fine) - coarse);

  double bessel = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double y = kBesselJ1Max * (k + 0.5) / 1000.0;
    bessel = std::max(bessel, std::abs(bessel_j1(invert_bessel_j1(y)) - y));
  }

  // Orange slice: two meridian arcs through both poles, sampled and summed as chords on the sphere.
  bool shorter = true;
  std::string lengths;
  for (double gamma : {kPi / 8.0, kPi / 4.0, kPi / 2.0}) {
    const auto spec = PathSpec::pole_start(gamma);
    const double circle = path_length(sample_trajectory(spec, BetaSchedule::for_spec(spec)));
    const int n = 2000;
    double slice = 0.0;
    for (int i = 0; i < n; ++i) {
      slice += angular_distance(kPi * i / n, 0.0, kPi * (i + 1) / n, 0.0);
      slice += angular_distance(kPi * (n - i) / n, 2.0 * gamma, kPi * (n - i - 1) / n, 2.0 * gamma);
    }
    shorter = shorter && circle < slice;
    lengths += fmt(" L(%.4f)=%.4f<%.4f", gamma, circle, slice);
  }
  const bool ok = trace < 1e-8 && halving < 1e-6 && bessel < 1e-10 && shorter;
  return {10, "numerical hygiene", ok,
          fmt("trace=%.2e (<1e-8) dF(dt/2)=%.2e (<1e-6) J1 round trip=%.2e (<1e-10)", trace, halving, bessel) +
              lengths};
}

using Runner = CriterionResult (*)(const AcceptanceOptions&);

}  // namespace

std::string format_criterion(const CriterionResult& r) {
  return fmt("criterion %2d %s  %s  [%s] (%.1f s)", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(),
             r.seconds);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out) {
  const Runner runners[] = {unoptimized_durations, table_durations, optimizer_durations, unitary_oracle,
                            transport_invariants,  drag_fidelity,   two_qubit,           robustness,
                            phase_invariance,      hygiene};
  std::vector<CriterionResult> results;
  for (int id = 1; id <= 10; ++id) {
    if (!options.only.empty() && !options.only.contains(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = runners[id - 1](options);
    } catch (const std::exception& e) {
      r = {id, "error", false, e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << format_criterion(r) << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace geogate
