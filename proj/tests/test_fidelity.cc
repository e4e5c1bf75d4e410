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

#include "doctest.h"
#include "geogate/fidelity.h"
#include "support.h"

using namespace geogate;

namespace {

FidelitySettings closed() {
  FidelitySettings s;
  s.rates = DecoherenceRates::none();
  s.dt = 2e-3;
  s.theta_samples = 201;
  return s;
}

}  // namespace

TEST_CASE("state fidelity pads the target") {
  Vector v(2);
  v << 1.0, 0.0;
  CHECK(state_fidelity(DensityMatrix::basis_state(3, 0), v) == 1.0);
  CHECK(state_fidelity(DensityMatrix::basis_state(3, 2), v) == 0.0);
  Vector big = Vector::Zero(4);
  CHECK_THROWS_AS(state_fidelity(DensityMatrix::basis_state(2, 0), big), DomainError);
}

TEST_CASE("closed-system gates are exact") {
  const AmplitudeBudget budget;
  for (auto g : {Gate::kPhase, Gate::kPiOver8, Gate::kHadamard}) {
    CHECK(average_gate_fidelity_1q(geometric_gate(g, {}, budget, 2e-3), closed()) > 0.99999);
    CHECK(average_gate_fidelity_1q(dynamical_comparator(g, budget), closed()) > 0.99999);
  }
}

TEST_CASE("comparator durations") {
  const AmplitudeBudget budget;
  const auto h = dynamical_comparator(Gate::kHadamard, budget);
  CHECK(h.stages.size() == 1);
  CHECK(h.duration() == doctest::Approx(kPi / (std::sqrt(2.0) * budget.omega0)).epsilon(1e-12));
  CHECK(h.duration() == doctest::Approx(11.79).epsilon(0.01 / 11.79));
  const auto t = dynamical_comparator(Gate::kPiOver8, budget);
  CHECK(t.duration() == doctest::Approx((kPi + kPi / 4.0) / budget.omega0).epsilon(1e-12));
}

TEST_CASE("theta average equals the closed-form two-level average") {
  // For a unitary gate U with U0 = target^dag U, the average over real states
  // cos t|0> + sin t|1> is (3/8)(|a|^2 + |d|^2) + (1/8)|b + c|^2 + (1/4)Re(a conj d) + ...
  // Evaluated here instead by direct quadrature of 20001 state fidelities.
  const AmplitudeBudget budget;
  const auto gate = dynamical_comparator(Gate::kPiOver8, budget);
  auto settings = closed();
  settings.errors = {0.1, 0.0};
  const double fast = average_gate_fidelity_1q(gate, settings);
  Matrix u = Matrix::Identity(2, 2);
  for (const auto& s : gate.stages)
    u = propagate_unitary(error_inject(two_level_hamiltonian(s.drive), settings.errors, s.drive, budget.omega0), 0.0,
                          s.duration, settings.dt) *
        u;
  const int n = 20000;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * k / n;
    Vector v(2);
    v << std::cos(t), std::sin(t);
    sum += std::norm((gate.target * v).dot(u * v));
  }
  CHECK(fast == doctest::Approx(sum / n).epsilon(1e-9));
  CHECK(fast < 0.9999);
}

TEST_CASE("linearity shortcut matches direct evolution") {
  const AmplitudeBudget budget;
  FidelitySettings settings;
  settings.model = SingleQubitModel::kThreeLevel;
  settings.dt = 2e-3;
  settings.errors = {0.05, -0.03};
  const auto gate = geometric_gate(Gate::kHadamard, {}, budget, settings.dt, settings.anharmonicity);
  settings.theta_samples = 2;  // endpoints only: theta = 0 and 2 pi, both |0>
  const double shortcut = average_gate_fidelity_1q(gate, settings);
  Vector zero(2);
  zero << 1.0, 0.0;
  const auto rho = evolve_gate(gate, settings, zero);
  CHECK(shortcut == doctest::Approx(state_fidelity(rho, gate.target * zero)).epsilon(1e-12));
}

TEST_CASE("decoherence and leakage lower the fidelity") {
  const AmplitudeBudget budget;
  FidelitySettings settings;
  settings.dt = 2e-3;
  settings.theta_samples = 101;
  const auto gate = geometric_gate(Gate::kPiOver8, {}, budget, settings.dt);
  const double noisy = average_gate_fidelity_1q(gate, settings);
  CHECK(noisy < 1.0);
  CHECK(noisy > 0.999);
  settings.model = SingleQubitModel::kThreeLevel;
  const double leaky = average_gate_fidelity_1q(gate, settings);
  const double drag =
      average_gate_fidelity_1q(geometric_gate(Gate::kPiOver8, {}, budget, settings.dt, settings.anharmonicity), settings);
  CHECK(leaky < noisy);
  CHECK(drag > leaky);
}

TEST_CASE("robustness scan layout") {
  const AmplitudeBudget budget;
  auto settings = closed();
  settings.theta_samples = 51;
  const std::vector<SingleQubitGate> variants{geometric_gate(Gate::kPiOver8, {}, budget, settings.dt)};
  const auto scan = robustness_scan(variants, ScanAxis::kEpsilonX, 5, settings);
  CHECK(scan.epsilon.size() == 5);
  CHECK(scan.epsilon.front() == doctest::Approx(-0.1));
  CHECK(scan.epsilon[2] == 0.0);
  CHECK(scan.fidelities[0][2] == doctest::Approx(average_gate_fidelity_1q(variants[0], settings)).epsilon(1e-14));
  const auto grid = robustness_scan(variants, ScanAxis::kGrid2D, 3, settings);
  CHECK(grid.delta.size() == 9);
  CHECK_THROWS_AS(robustness_scan(variants, ScanAxis::kDeltaZ, 0, settings), DomainError);
}

TEST_CASE("fidelity dynamics starts at one") {
  const AmplitudeBudget budget;
  FidelitySettings settings;
  settings.model = SingleQubitModel::kThreeLevel;
  settings.dt = 2e-3;
  const auto gate = geometric_gate(Gate::kHadamard, {}, budget, settings.dt, settings.anharmonicity);
  const auto plain = geometric_gate(Gate::kHadamard, {}, budget, settings.dt);
  Vector zero(2);
  zero << 1.0, 0.0;
  const auto trace = fidelity_dynamics(gate, settings, zero, two_level_hamiltonian(plain.stages[0].drive), 50);
  CHECK(trace.fidelity.front() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace.times.back() == doctest::Approx(gate.duration()));
  CHECK(trace.fidelity.back() > 0.999);
  CHECK(trace.populations.back()[0] == doctest::Approx(0.5).epsilon(0.01));
  CHECK(trace.populations.back()[2] < 1e-3);
}

TEST_CASE("two-qubit identity and effective model") {
  TwoQubitSettings settings;
  settings.theta_samples = 7;
  settings.dt = 2e-3;
  settings.gamma_prime = 0.0;
  const auto identity = average_gate_fidelity_2q(settings);
  CHECK(identity.fidelity == doctest::Approx(1.0).epsilon(1e-12));
  settings.gamma_prime = kPi / 4.0;
  settings.model = TwoQubitModel::kEffective;
  settings.rates = DecoherenceRates::none();
  const auto effective = average_gate_fidelity_2q(settings);
  CHECK(effective.fidelity > 0.9999);
  CHECK(effective.leakage < 1e-10);
}
