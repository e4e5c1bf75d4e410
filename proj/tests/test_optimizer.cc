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
#include "geogate/optimizer.h"

using namespace geogate;

namespace {

OptimizationProblem small(Gate gate) {
  OptimizationProblem p{gate_spec(gate), AmplitudeBudget{}};
  p.starts = 4;
  p.evals_per_start = 150;
  p.grid_points = 1001;
  return p;
}

}  // namespace

TEST_CASE("nelder-mead minimizes a quadratic") {
  auto f = [](const std::vector<double>& x) { return (x[0] - 1.0) * (x[0] - 1.0) + 3.0 * (x[1] + 0.5) * (x[1] + 0.5); };
  const auto r = nelder_mead(f, {0.0, 0.0}, {400, 0.3});
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.x[1] == doctest::Approx(-0.5).epsilon(1e-4));
  CHECK(r.evals <= 400);
}

TEST_CASE("objective") {
  OptimizationProblem p{gate_spec(Gate::kPiOver8), AmplitudeBudget{}};
  CHECK(objective({0.0, 0.0, 0.0}, p) == doctest::Approx(19.66).epsilon(0.05 / 19.66));
  CHECK(objective({0.007, 0.033, -0.024}, p) == doctest::Approx(16.71).epsilon(0.1 / 16.71));
  CHECK(std::isinf(objective({0.3, 0.0, 0.0}, p)));
  CHECK(std::isinf(objective({0.2, 0.2, 0.2}, p)));
  p.monotone = false;
  CHECK(std::isfinite(objective({0.2, 0.2, 0.2}, p)));
}

TEST_CASE("collapsed bounds return the baseline") {
  auto p = small(Gate::kPiOver8);
  p.bound = 0.0;
  const auto r = optimize(p);
  CHECK(r.tau == r.baseline_tau);
  CHECK(r.coeffs == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("optimizer results are sound and deterministic") {
  const auto p = small(Gate::kPiOver8);
  const auto a = optimize(p);
  const auto b = optimize(p);
  CHECK(a.tau == b.tau);
  CHECK(a.coeffs == b.coeffs);
  CHECK(a.tau < a.baseline_tau);
  CHECK(std::abs(objective(a.coeffs, p) - a.tau) < 1e-9);
  CHECK(std::abs(a.coeffs[0] + 2.0 * a.coeffs[1] + 3.0 * a.coeffs[2]) < 1e-12);
  for (const auto& e : a.history) {
    if (!std::isfinite(e.tau)) continue;
    CHECK(std::abs(e.geometric_phase - p.spec.gamma_g) < 1e-6);
    CHECK(azimuth_monotone(BetaSchedule::for_spec(p.spec, e.coeffs)));
  }
}

TEST_CASE("unpinned search reaches shorter pulses") {
  auto p = small(Gate::kPiOver8);
  const double pinned = optimize(p).tau;
  p.pin_endpoints = false;
  CHECK(optimize(p).tau < pinned);
}

TEST_CASE("problem validation") {
  auto p = small(Gate::kHadamard);
  p.n_terms = 4;
  CHECK_THROWS_AS(optimize(p), DomainError);
}
