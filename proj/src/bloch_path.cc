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

#include "geogate/bloch_path.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "geogate/linalg.h"

namespace geogate {
namespace {

constexpr double kWindowSlack = 1e-12;
const double kSinPi12 = std::sin(kPi / 12.0);
const double kCosPi12 = std::cos(kPi / 12.0);

double hadamard_dconstraint_dalpha(double alpha, double beta) {
  return 2.0 * kSinPi12 * std::cos(alpha) * std::cos(beta) + 2.0 * kCosPi12 * std::sin(alpha);
}

double hadamard_dconstraint_dbeta(double alpha, double beta) {
  return -2.0 * kSinPi12 * std::sin(alpha) * std::sin(beta);
}

}  // namespace

PathSpec PathSpec::pole_start(double gamma_g) {
  PathSpec spec{gamma_g, 0.0, kPi / 2.0, PathKind::kPoleStart};
  spec.validate();
  return spec;
}

PathSpec PathSpec::hadamard_start() { return {kPi / 2.0, kPi / 4.0, 0.0, PathKind::kHadamardStart}; }

void PathSpec::validate() const {
  switch (kind) {
    case PathKind::kPoleStart:
      if (!(gamma_g > 0.0 && gamma_g < kPi)) throw DomainError("pole-start gamma_g must lie in (0, pi)");
      if (alpha0 != 0.0) throw DomainError("pole-start path requires alpha0 = 0");
      break;
    case PathKind::kHadamardStart:
      if (std::abs(gamma_g - kPi / 2.0) > 1e-15) throw DomainError("hadamard-start path has gamma_g = pi/2");
      if (std::abs(alpha0 - kPi / 4.0) > 1e-15 || beta0 != 0.0)
        throw DomainError("hadamard-start path requires (alpha0, beta0) = (pi/4, 0)");
      break;
  }
}

BetaSchedule BetaSchedule::for_spec(const PathSpec& spec, std::vector<double> coeffs, double tau) {
  const auto base = spec.kind == PathKind::kPoleStart ? ScheduleBase::kHalfTurn : ScheduleBase::kFullTurn;
  return {base, std::move(coeffs), tau};
}

double circle_constant(double gamma_g) {
  if (!(gamma_g > 0.0 && gamma_g < kPi)) throw DomainError("circle_constant: gamma_g must lie in (0, pi)");
  return std::sqrt(2.0 * kPi * gamma_g - gamma_g * gamma_g) / (kPi - gamma_g);
}

double alpha_max(double gamma_g) {
  if (!(gamma_g >= 0.0 && gamma_g <= kPi)) throw DomainError("alpha_max: gamma_g must lie in [0, pi]");
  return 2.0 * std::acos(1.0 - gamma_g / kPi);
}

double alpha_of_beta(double gamma_g, double beta) {
  const double sine = std::sin(beta - kPi / 2.0);
  if (beta < kPi / 2.0 - kWindowSlack || beta > 1.5 * kPi + kWindowSlack)
    throw DomainError("alpha_of_beta: beta outside [pi/2, 3pi/2]");
  return 2.0 * std::atan(circle_constant(gamma_g) * std::max(sine, 0.0));
}

double dalpha_dbeta(double gamma_g, double beta) {
  const double c = circle_constant(gamma_g);
  const double u = c * std::sin(beta - kPi / 2.0);
  return 2.0 * c * std::cos(beta - kPi / 2.0) / (1.0 + u * u);
}

double hadamard_constraint(double alpha, double beta) {
  return 2.0 * kSinPi12 * std::sin(alpha) * std::cos(beta) - 2.0 * kCosPi12 * std::cos(alpha) + 1.0;
}

double hadamard_dalpha_dbeta(double alpha, double beta) {
  return -hadamard_dconstraint_dbeta(alpha, beta) / hadamard_dconstraint_dalpha(alpha, beta);
}

double hadamard_alpha_near(double beta, double seed) {
  auto f = [beta](double a) { return hadamard_constraint(a, beta); };

  // Grow a bracket around the seed until the residual changes sign.
  double lo = seed, hi = seed;
  double flo = f(lo), fhi = flo;
  if (flo == 0.0) return seed;
  for (double width = 1e-3; flo * fhi > 0.0; width *= 2.0) {
    if (width > 2.0 * kPi) throw ConvergenceError("hadamard_alpha_near: no sign change around seed");
    lo = std::max(0.0, seed - width);
    hi = std::min(kPi, seed + width);
    flo = f(lo);
    fhi = f(hi);
  }

  for (int i = 0; i < 30 && hi - lo > 1e-9; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }

  double a = 0.5 * (lo + hi);
  for (int i = 0; i < 20; ++i) {
    const double r = f(a);
    if (std::abs(r) < 1e-13) break;
    a -= r / hadamard_dconstraint_dalpha(a, beta);
  }
  if (!(std::abs(f(a)) < 1e-12)) {
    throw ConvergenceError("hadamard_alpha_near: residual " + std::to_string(f(a)) + " at beta " +
                           std::to_string(beta));
  }
  return a;
}

double hadamard_alpha_of_beta(double beta) {
  // Continuation from the starting point (pi/4, 0) keeps the root on one branch.
  constexpr double kMaxStep = 0.05;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(beta) / kMaxStep)));
  double alpha = kPi / 4.0;
  for (int i = 1; i <= steps; ++i) alpha = hadamard_alpha_near(beta * i / steps, alpha);
  return alpha;
}

BetaValue beta_schedule(double s, const BetaSchedule& schedule) {
  const double ramp = std::sin(kPi * s / 2.0);
  BetaValue out{};
  if (schedule.base == ScheduleBase::kHalfTurn) {
    out.beta = kPi / 2.0 + kPi * ramp * ramp;
    out.dbeta_ds = kPi * kPi / 2.0 * std::sin(kPi * s);
  } else {
    out.beta = 2.0 * kPi * ramp * ramp;
    out.dbeta_ds = kPi * kPi * std::sin(kPi * s);
  }
  for (std::size_t k = 1; k <= schedule.coeffs.size(); ++k) {
    const double w = 2.0 * kPi * static_cast<double>(k);
    out.beta += schedule.coeffs[k - 1] * std::sin(w * s);
    out.dbeta_ds += schedule.coeffs[k - 1] * w * std::cos(w * s);
  }
  return out;
}

bool azimuth_monotone(const BetaSchedule& schedule, std::size_t grid_points) {
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    if (beta_schedule(s, schedule).dbeta_ds < -1e-12) return false;
  }
  return true;
}

PathTrajectory sample_trajectory(const PathSpec& spec, const BetaSchedule& schedule, std::size_t grid_points) {
  if (grid_points < 2) throw DomainError("sample_trajectory: need at least 2 grid points");
  if (schedule.coeffs.size() > kMaxFourierTerms) throw DomainError("sample_trajectory: at most 3 Fourier terms");
  spec.validate();
  const bool pole = spec.kind == PathKind::kPoleStart;
  if (pole != (schedule.base == ScheduleBase::kHalfTurn))
    throw DomainError("sample_trajectory: schedule base does not match the path kind");

  PathTrajectory traj{spec, schedule, {}};
  traj.samples.reserve(grid_points);
  double alpha_prev = spec.alpha0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    auto [beta, dbeta] = beta_schedule(s, schedule);
    PathPoint p{};
    p.beta = beta;
    p.dbeta_ds = dbeta;
    if (pole) {
      p.alpha = alpha_of_beta(spec.gamma_g, beta);
      p.dalpha_ds = dalpha_dbeta(spec.gamma_g, beta) * dbeta;
    } else {
      p.alpha = i == 0 ? hadamard_alpha_of_beta(beta) : hadamard_alpha_near(beta, alpha_prev);
      p.dalpha_ds = hadamard_dalpha_dbeta(p.alpha, beta) * dbeta;
    }
    alpha_prev = p.alpha;
    traj.samples.push_back(p);
  }
  return traj;
}

double geometric_phase(const PathTrajectory& traj) {
  const auto& xs = traj.samples;
  if (xs.size() < 2) return 0.0;
  auto integrand = [](const PathPoint& p) { return 0.5 * (1.0 - std::cos(p.alpha)) * p.dbeta_ds; };
  double sum = 0.5 * (integrand(xs.front()) + integrand(xs.back()));
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) sum += integrand(xs[i]);
  return sum * traj.ds();
}

double path_length(const PathTrajectory& traj) {
  const auto& xs = traj.samples;
  if (xs.size() < 2) return 0.0;
  auto speed = [](const PathPoint& p) {
    const double b = std::sin(p.alpha) * p.dbeta_ds;
    return std::sqrt(p.dalpha_ds * p.dalpha_ds + b * b);
  };
  double sum = 0.5 * (speed(xs.front()) + speed(xs.back()));
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) sum += speed(xs[i]);
  return sum * traj.ds();
}

double angular_distance(double alpha1, double beta1, double alpha2, double beta2) {
  const double x1 = std::sin(alpha1) * std::cos(beta1), y1 = std::sin(alpha1) * std::sin(beta1), z1 = std::cos(alpha1);
  const double x2 = std::sin(alpha2) * std::cos(beta2), y2 = std::sin(alpha2) * std::sin(beta2), z2 = std::cos(alpha2);
  // atan2 of cross and dot stays accurate for nearly coincident points.
  const double cx = y1 * z2 - z1 * y2, cy = z1 * x2 - x1 * z2, cz = x1 * y2 - y1 * x2;
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), x1 * x2 + y1 * y2 + z1 * z2);
}

double closure_error(const PathTrajectory& traj) {
  const auto& a = traj.samples.front();
  const auto& b = traj.samples.back();
  return angular_distance(a.alpha, a.beta, b.alpha, b.beta);
}

}  // namespace geogate
