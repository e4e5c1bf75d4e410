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
#include "geogate/pulse_synth.h"
#include "support.h"

using namespace geogate;

TEST_CASE("catalog durations at the default budget") {
  const AmplitudeBudget budget;
  CHECK(synthesize_pulse(gate_spec(Gate::kPiOver8), {}, budget, 1e-3).tau == doctest::Approx(19.66).epsilon(0.05 / 19.66));
  CHECK(synthesize_pulse(gate_spec(Gate::kHadamard), {}, budget, 1e-3).tau == doctest::Approx(23.49).epsilon(0.05 / 23.49));
}

TEST_CASE("duration scales inversely with the budget") {
  const auto spec = gate_spec(Gate::kPhase);
  const double base = synthesize_pulse(spec, {}, AmplitudeBudget{}, 1e-3).tau;
  const double doubled = synthesize_pulse(spec, {}, AmplitudeBudget{2.0 * mhz_to_rad_per_ns(30.0)}, 1e-3).tau;
  CHECK(doubled == doctest::Approx(base / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(AmplitudeBudget{0.0}, DomainError);
}

TEST_CASE("envelope peaks at the budget and samples the RK4 half-step grid") {
  const AmplitudeBudget budget;
  const auto pulse = synthesize_pulse(gate_spec(Gate::kPiOver8), {}, budget, 1e-3);
  CHECK(pulse.size() % 2 == 1);
  CHECK(pulse.size() == 2 * step_count(pulse.tau, 1e-3) + 1);
  double peak = 0.0;
  for (double e : pulse.envelope) peak = std::max(peak, e);
  CHECK(peak == doctest::Approx(budget.omega0).epsilon(1e-6));
  CHECK(pulse.t.back() == doctest::Approx(pulse.tau));
}

TEST_CASE("envelope and zeta agree with differentiated path angles") {
  const auto spec = gate_spec(Gate::kHadamard);
  auto schedule = BetaSchedule::for_spec(spec, {0.02, 0.01, -0.01});
  const auto traj = sample_trajectory(spec, schedule, 20001);
  const double tau = 20.0;
  const auto env = rabi_envelope(traj, tau);
  const double h = traj.ds() * tau;
  for (std::size_t i : {std::size_t{2000}, std::size_t{7000}, std::size_t{13000}}) {
    const double adot = (traj.samples[i + 1].alpha - traj.samples[i - 1].alpha) / (2.0 * h);
    const double bdot = (traj.samples[i + 1].beta - traj.samples[i - 1].beta) / (2.0 * h);
    const double a = traj.samples[i].alpha;
    const double across = bdot * std::sin(a) * std::cos(a);
    CHECK(env.envelope[i] == doctest::Approx(std::hypot(adot, across)).epsilon(1e-6));
    const double z = std::atan2(adot, across);
    CHECK(std::remainder(env.zeta[i] - z, 2.0 * kPi) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(detuning_of(traj.samples[i], tau) == doctest::Approx(-bdot * std::sin(a) * std::sin(a)).epsilon(1e-6));
  }
}

TEST_CASE("zeta is continuous") {
  const auto pulse = synthesize_pulse(gate_spec(Gate::kPiOver8), {}, AmplitudeBudget{}, 1e-2);
  for (std::size_t i = 1; i < pulse.size(); ++i) CHECK(std::abs(pulse.zeta[i] - pulse.zeta[i - 1]) < 0.5);
}

TEST_CASE("step count") {
  CHECK(step_count(20.0, 1e-3) == 20000);
  CHECK(step_count(20.0000000001, 1e-3) == 20000);
  CHECK(step_count(20.0005, 1e-3) == 20001);
  CHECK(step_count(1e-6, 1e-3) == 1);
  CHECK_THROWS_AS(step_count(1.0, 0.0), DomainError);
}

TEST_CASE("finite differences are exact on quadratics") {
  std::vector<double> v;
  for (int i = 0; i < 11; ++i) v.push_back(3.0 * i * i * 0.01 - 2.0 * i * 0.1);
  const auto d = finite_difference(v, 0.1);
  for (int i = 0; i < 11; ++i) CHECK(d[i] == doctest::Approx(6.0 * i * 0.1 - 2.0).epsilon(1e-12));
}

TEST_CASE("drag correction") {
  const auto pulse = synthesize_pulse(gate_spec(Gate::kPiOver8), {}, AmplitudeBudget{}, 1e-2);
  const auto same = drag_correct(pulse, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < pulse.size(); ++i) CHECK(same.drag[i] == Complex{pulse.envelope[i], 0.0});
  CHECK_THROWS_AS(drag_correct(pulse, 0.0), DomainError);

  const double anh = mhz_to_rad_per_ns(220.0);
  const auto corrected = drag_correct(pulse, anh);
  const std::size_t i = pulse.size() / 3;
  const double h = pulse.spacing();
  const double denv = (pulse.envelope[i + 1] - pulse.envelope[i - 1]) / (2.0 * h);
  const double dzeta = (pulse.zeta[i + 1] - pulse.zeta[i - 1]) / (2.0 * h);
  const double real = pulse.envelope[i] - (pulse.dbeta_dt[i] - dzeta + pulse.detuning[i]) * pulse.envelope[i] / (2.0 * anh);
  CHECK(corrected.drag[i].real() == doctest::Approx(real).epsilon(1e-12));
  CHECK(corrected.drag[i].imag() == doctest::Approx(-denv / (2.0 * anh)).epsilon(1e-12));
  CHECK(corrected.raising_amplitude(i) == std::conj(corrected.drag[i]) * std::polar(1.0, pulse.phase[i]));
}

TEST_CASE("interpolation is exact at nodes") {
  const auto pulse = synthesize_pulse(gate_spec(Gate::kPhase), {}, AmplitudeBudget{}, 1e-2);
  const std::size_t i = 123;
  const auto s = pulse.at(pulse.t[i]);
  CHECK(s.detuning == pulse.detuning[i]);
  CHECK(s.omega == pulse.raising_amplitude(i));
  const auto mid = pulse.at(0.5 * (pulse.t[i] + pulse.t[i + 1]));
  CHECK(mid.detuning == doctest::Approx(0.5 * (pulse.detuning[i] + pulse.detuning[i + 1])));
}

TEST_CASE("target unitaries are rotations about the start axis") {
  for (auto g : {Gate::kPhase, Gate::kPiOver8, Gate::kHadamard}) {
    const auto spec = gate_spec(g);
    const Matrix oracle = testing::rotation(spec.gamma_g, spec.alpha0, spec.beta0);
    CHECK(distance_up_to_phase(target_unitary(spec), oracle) < 1e-12);
  }
  Matrix t = Matrix::Identity(2, 2);
  t(1, 1) = std::polar(1.0, kPi / 4.0);
  CHECK(distance_up_to_phase(target_unitary(gate_spec(Gate::kPiOver8)), t) < 1e-12);
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  CHECK(distance_up_to_phase(target_unitary(gate_spec(Gate::kHadamard)), h / std::sqrt(2.0)) < 1e-12);
  const Matrix cp = target_unitary_2q(kPi / 4.0);
  CHECK(cp(3, 3) == std::polar(1.0, -kPi / 4.0));
  CHECK(cp(0, 0) == Complex{1.0, 0.0});
}

TEST_CASE("gate names") {
  CHECK(parse_gate("pi8") == Gate::kPiOver8);
  CHECK(parse_gate("h") == Gate::kHadamard);
  CHECK_FALSE(parse_gate("cnot").has_value());
  CHECK(gate_name(Gate::kPhase) == "phase");
}
