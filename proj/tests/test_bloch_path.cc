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
#include "geogate/bloch_path.h"
#include "geogate/linalg.h"
#include "support.h"

using namespace geogate;

namespace {

// Closed form of the Hadamard constraint: A sin a - B cos a = -1.
double hadamard_closed_form(double beta) {
  const double a = 2.0 * std::sin(kPi / 12.0) * std::cos(beta);
  const double b = 2.0 * std::cos(kPi / 12.0);
  return std::atan2(b, a) - std::asin(1.0 / std::hypot(a, b));
}

}  // namespace

TEST_CASE("pole circle constants") {
  for (double g : {kPi / 8.0, kPi / 4.0, kPi / 2.0}) {
    const double am = alpha_max(g);
    CHECK(std::cos(am / 2.0) == doctest::Approx(1.0 - g / kPi).epsilon(1e-14));
    CHECK(std::tan(am / 2.0) == doctest::Approx(circle_constant(g)).epsilon(1e-12));
    CHECK(alpha_of_beta(g, kPi) == doctest::Approx(am).epsilon(1e-12));
    CHECK(alpha_of_beta(g, kPi / 2.0) == doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(alpha_of_beta(kPi / 8.0, 0.1), DomainError);
}

TEST_CASE("pole circle slope matches a finite difference") {
  const double g = kPi / 8.0, h = 1e-6;
  for (double b : {1.8, 2.5, 3.1, 4.0}) {
    const double fd = (alpha_of_beta(g, b + h) - alpha_of_beta(g, b - h)) / (2.0 * h);
    CHECK(dalpha_dbeta(g, b) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("hadamard path root against closed form") {
  for (double b = 0.0; b <= 2.0 * kPi; b += 0.1) {
    const double a = hadamard_alpha_of_beta(b);
    CHECK(std::abs(hadamard_constraint(a, b)) < 1e-12);
    CHECK(a == doctest::Approx(hadamard_closed_form(b)).epsilon(1e-10));
  }
  CHECK(hadamard_alpha_of_beta(0.0) == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  const double h = 1e-6, b = 1.3;
  const double fd = (hadamard_alpha_of_beta(b + h) - hadamard_alpha_of_beta(b - h)) / (2.0 * h);
  CHECK(hadamard_dalpha_dbeta(hadamard_alpha_of_beta(b), b) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("schedules hit their end points") {
  const auto half = BetaSchedule::for_spec(PathSpec::pole_start(kPi / 8.0), {0.01, 0.02, -0.01});
  CHECK(beta_schedule(0.0, half).beta == doctest::Approx(kPi / 2.0));
  CHECK(beta_schedule(1.0, half).beta == doctest::Approx(1.5 * kPi));
  const auto full = BetaSchedule::for_spec(PathSpec::hadamard_start());
  CHECK(full.base == ScheduleBase::kFullTurn);
  CHECK(beta_schedule(1.0, full).beta == doctest::Approx(2.0 * kPi));
  CHECK(beta_schedule(0.5, full).dbeta_ds == doctest::Approx(kPi * kPi));
  CHECK(azimuth_monotone(half));
  CHECK_FALSE(azimuth_monotone(BetaSchedule::for_spec(PathSpec::pole_start(kPi / 8.0), {0.2, 0.2, 0.2})));
}

TEST_CASE("loops are closed and enclose the target phase") {
  for (const auto& spec : {PathSpec::pole_start(kPi / 8.0), PathSpec::pole_start(kPi / 4.0), PathSpec::hadamard_start()}) {
    const auto traj = sample_trajectory(spec, BetaSchedule::for_spec(spec));
    CHECK(closure_error(traj) < 1e-9);
    CHECK(geometric_phase(traj) == doctest::Approx(spec.gamma_g).epsilon(1e-6));
    CHECK(traj.samples.front().alpha == doctest::Approx(spec.alpha0));
  }
}

TEST_CASE("phase is independent of the schedule") {
  const auto spec = PathSpec::pole_start(kPi / 4.0);
  const auto base = sample_trajectory(spec, BetaSchedule::for_spec(spec));
  const auto bent = sample_trajectory(spec, BetaSchedule::for_spec(spec, {0.007, 0.033, -0.024}));
  CHECK(geometric_phase(bent) == doctest::Approx(geometric_phase(base)).epsilon(1e-7));
  CHECK(path_length(bent) == doctest::Approx(path_length(base)).epsilon(1e-6));
}

TEST_CASE("circle loop is shorter than the orange slice") {
  for (double g : {kPi / 8.0, kPi / 4.0, kPi / 2.0}) {
    const auto spec = PathSpec::pole_start(g);
    const double circle = path_length(sample_trajectory(spec, BetaSchedule::for_spec(spec)));
    const double slice = testing::polyline_length(testing::orange_slice(g, 1000));
    CHECK(slice == doctest::Approx(2.0 * kPi).epsilon(1e-9));
    CHECK(circle < slice);
  }
}

TEST_CASE("angular distance") {
  CHECK(angular_distance(0.0, 0.0, kPi, 0.0) == doctest::Approx(kPi));
  CHECK(angular_distance(kPi / 2.0, 0.0, kPi / 2.0, kPi / 2.0) == doctest::Approx(kPi / 2.0));
  CHECK(angular_distance(0.3, 1.0, 0.3, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(PathSpec::pole_start(-0.1).validate(), DomainError);
  CHECK_THROWS_AS(PathSpec::pole_start(kPi + 0.1).validate(), DomainError);
  CHECK_NOTHROW(PathSpec::hadamard_start().validate());
  CHECK_THROWS_AS(sample_trajectory(PathSpec::hadamard_start(), BetaSchedule{}), DomainError);
}
