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

#include <cmath>
#include <memory>

#include "doctest.h"
#include "geogate/dynamics.h"
#include "support.h"

using namespace geogate;

namespace {

DriveFn constant_drive(double detuning, Complex omega) {
  return [=](double) { return DrivePulse::Sample{detuning, omega}; };
}

Vector qubit(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return v / v.norm();
}

}  // namespace

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix::pure(qubit(1.0, 1.0)));
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(DensityMatrix{bad}, DomainError);
  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{negative}, DomainError);
  Matrix skew = Matrix::Identity(2, 2) * 0.5;
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{skew}, DomainError);
  const auto e = DensityMatrix::basis_state(3, 2);
  CHECK(e.populations()[2] == 1.0);
}

TEST_CASE("hamiltonians are hermitian") {
  const auto drive = constant_drive(0.3, std::polar(0.2, 0.7));
  for (const auto& h : {two_level_hamiltonian(drive), three_level_hamiltonian(drive, 1.3),
                        error_inject(three_level_hamiltonian(drive, 1.3), {0.1, -0.05}, drive, 0.2)})
    CHECK(hermiticity_error(h.at(1.0)) < 1e-15);
  const Matrix h3 = three_level_hamiltonian(drive, 1.3).at(0.0);
  CHECK(h3(2, 1).real() == doctest::Approx(std::sqrt(2.0) * h3(1, 0).real()).epsilon(1e-14));
  CHECK(h3(2, 2).real() == doctest::Approx(1.5 * 0.3 - 1.3));
}

TEST_CASE("resonant Rabi oscillation") {
  const double omega = 0.4;
  const auto h = two_level_hamiltonian(constant_drive(0.0, omega));
  const auto traj = evolve_state(h, qubit(1.0, 0.0), 0.0, 10.0, 1e-3);
  for (std::size_t k = 0; k < traj.times.size(); k += 1000) {
    const double p1 = std::norm(traj.states[k](1, 0));
    const double s = std::sin(omega * traj.times[k] / 2.0);
    CHECK(p1 == doctest::Approx(s * s).epsilon(1e-9));
  }
}

TEST_CASE("constant drive propagator matches the matrix exponential") {
  const double detuning = 0.25;
  const Complex omega = std::polar(0.3, 0.4);
  const Matrix u = propagate_unitary(two_level_hamiltonian(constant_drive(detuning, omega)), 0.0, 7.0, 1e-3);
  Matrix h(2, 2);
  h << -detuning / 2.0, std::conj(omega) / 2.0, omega / 2.0, detuning / 2.0;
  const Matrix oracle = (Complex(0.0, -7.0) * h).exp();
  CHECK((u - oracle).norm() < 1e-10);
}

TEST_CASE("amplitude damping and dephasing closed forms") {
  const DecoherenceRates rates{0.05, 0.02};
  const auto h = two_level_hamiltonian(constant_drive(0.0, 0.0));
  const auto rho0 = DensityMatrix::pure(qubit(1.0, 1.0));
  EvolutionOptions options;
  options.record_every = 500;
  const auto traj = evolve_lindblad(h, rho0, transmon_collapse(2, rates), 0.0, 20.0, options);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double t = traj.times[k];
    CHECK(traj.states[k](1, 1).real() == doctest::Approx(0.5 * std::exp(-rates.gamma_decay * t)).epsilon(1e-10));
    const double coherence = 0.5 * std::exp(-(rates.gamma_decay / 2.0 + 2.0 * rates.kappa_dephase) * t);
    CHECK(std::abs(traj.states[k](0, 1)) == doctest::Approx(coherence).epsilon(1e-10));
    CHECK(std::abs(traj.states[k].trace() - 1.0) < 1e-12);
  }
  CHECK(traj.times.back() == 20.0);
}

TEST_CASE("matrix-unit propagation reproduces direct evolution") {
  const auto drive = constant_drive(0.1, std::polar(0.3, 1.1));
  const auto h = three_level_hamiltonian(drive, 1.2);
  const auto collapse = transmon_collapse(3, DecoherenceRates{0.01, 0.02});
  std::vector<Matrix> units;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix e = Matrix::Zero(3, 3);
      e(i, j) = 1.0;
      units.push_back(e);
    }
  const auto images = propagate_operators(h, units, collapse, 0.0, 5.0, 1e-3);
  const Vector psi = qubit(Complex(0.6, 0.1), Complex(-0.2, 0.7));
  Matrix assembled = Matrix::Zero(3, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) assembled += psi(i) * std::conj(psi(j)) * images[2 * i + j];
  Vector padded = Vector::Zero(3);
  padded.head(2) = psi;
  const auto direct = evolve_lindblad(h, DensityMatrix::pure(padded), collapse, 0.0, 5.0);
  CHECK((assembled - direct.states.back()).norm() < 1e-12);
}

TEST_CASE("convergence guard") {
  const auto h = two_level_hamiltonian(constant_drive(0.0, 0.5));
  EvolutionOptions options;
  options.convergence_guard = true;
  CHECK_NOTHROW(evolve_lindblad(h, DensityMatrix::basis_state(2, 0), {}, 0.0, 10.0, options));
  options.dt = 2.0;
  options.guard_tolerance = 1e-12;
  CHECK_THROWS_AS(evolve_lindblad(h, DensityMatrix::basis_state(2, 0), {}, 0.0, 10.0, options), ConvergenceError);
}

TEST_CASE("geometric pulses are parallel transported and cyclic") {
  for (auto g : {Gate::kPhase, Gate::kPiOver8, Gate::kHadamard}) {
    const auto spec = gate_spec(g);
    const auto pulse = synthesize_pulse(spec, {0.01, 0.02, -0.01}, AmplitudeBudget{}, 1e-3);
    const auto report = parallel_transport_check(spec, pulse);
    CHECK(report.max_violation < 1e-8 * AmplitudeBudget{}.omega0);
    CHECK(report.cyclic_plus == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(report.cyclic_minus == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::remainder(report.frame.gamma_plus + spec.gamma_g, 2.0 * kPi) == doctest::Approx(0.0).epsilon(1e-6));
  }
}

TEST_CASE("collapse operators") {
  const auto pair = pair_collapse(DecoherenceRates{1.0, 2.0});
  CHECK(pair.size() == 4);
  const Matrix& lower_a = pair[0].op;
  CHECK(lower_a(pair_index(0, 1), pair_index(1, 1)) == Complex{1.0, 0.0});
  CHECK(transmon_collapse(3, DecoherenceRates::none()).empty());
}

TEST_CASE("two-qubit drive") {
  const TransmonParams params;
  const auto drive = make_two_qubit_drive(params, kPi / 4.0, mhz_to_rad_per_ns(15.0), 1e-2);
  CHECK(frequency_matching_error(drive, params) < 1e-12);
  for (std::size_t i = 0; i < drive.t.size(); i += 97)
    CHECK(2.0 * std::sqrt(2.0) * params.g * std::cyl_bessel_j(1.0, drive.eta[i]) ==
          doctest::Approx(drive.g_prime[i]).epsilon(1e-10));
  const auto identity = make_two_qubit_drive(params, 0.0, mhz_to_rad_per_ns(15.0), 1e-2);
  CHECK(identity.tau == 0.0);
  CHECK_THROWS_AS(make_two_qubit_drive(params, kPi / 4.0, mhz_to_rad_per_ns(40.0), 1e-2), DomainError);
}

TEST_CASE("effective model tracks the full model") {
  const TransmonParams params;
  auto drive = std::make_shared<const TwoQubitDrive>(
      make_two_qubit_drive(params, kPi / 4.0, mhz_to_rad_per_ns(15.0), 1e-3));
  const auto full = two_qubit_full_hamiltonian(params, drive);
  const auto effective = embed(effective_two_qubit_hamiltonian(drive), {pair_index(1, 1), pair_index(0, 2)}, 9);
  CHECK(hermiticity_error(full.at(3.0)) < 1e-15);
  Vector psi = Vector::Zero(9);
  psi(pair_index(1, 1)) = 1.0;
  const auto a = evolve_state(full, psi, 0.0, drive->tau, 1e-3);
  const auto b = evolve_state(effective, psi, 0.0, drive->tau, 1e-3);
  // The full model carries fast sideband micromotion; compare 2 ns window averages.
  auto windowed = [](const Trajectory& traj, std::size_t centre) {
    const std::size_t lo = centre > 1000 ? centre - 1000 : 0, hi = std::min(traj.times.size(), centre + 1000);
    double sum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) sum += std::norm(traj.states[j](pair_index(1, 1), 0));
    return sum / static_cast<double>(hi - lo);
  };
  double worst = 0.0;
  for (std::size_t k = 0; k < a.times.size(); k += 500) worst = std::max(worst, std::abs(windowed(a, k) - windowed(b, k)));
  CHECK(worst < 3e-2);
  CHECK(std::norm(a.states.back()(pair_index(1, 1), 0)) == doctest::Approx(1.0).epsilon(2e-2));
  CHECK(std::norm(b.states.back()(pair_index(1, 1), 0)) == doctest::Approx(1.0).epsilon(1e-8));
}
