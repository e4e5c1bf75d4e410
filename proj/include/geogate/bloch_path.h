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

#ifndef GEOGATE_BLOCH_PATH_H_
#define GEOGATE_BLOCH_PATH_H_

#include <cstddef>
#include <span>
#include <vector>

namespace geogate {

enum class PathKind {
  kPoleStart,      // loop through the North Pole, alpha0 = 0
  kHadamardStart,  // loop through (pi/4, 0)
};

/// Target geometric phase and starting point on the Bloch sphere.
struct PathSpec {
  double gamma_g = 0.0;
  double alpha0 = 0.0;
  double beta0 = 0.0;
  PathKind kind = PathKind::kPoleStart;

  static PathSpec pole_start(double gamma_g);
  static PathSpec hadamard_start();

  /// Throws DomainError when the fields violate the kind's constraints.
  void validate() const;
};

enum class ScheduleBase {
  kHalfTurn,  // beta: pi/2 -> 3pi/2
  kFullTurn,  // beta: 0 -> 2pi
};

inline constexpr std::size_t kMaxFourierTerms = 3;
inline constexpr std::size_t kDefaultGridPoints = 4001;

/// Azimuth schedule: a sin^2 base ramp plus sin(2k pi s) corrections.
struct BetaSchedule {
  ScheduleBase base = ScheduleBase::kHalfTurn;
  std::vector<double> coeffs;
  double tau = 1.0;  // ns

  /// The base that pairs with a spec kind (HalfTurn for PoleStart, FullTurn for HadamardStart).
  static BetaSchedule for_spec(const PathSpec& spec, std::vector<double> coeffs = {}, double tau = 1.0);
};

struct BetaValue {
  double beta;
  double dbeta_ds;
};

/// One sample of a trajectory; derivatives are with respect to s = t / tau.
struct PathPoint {
  double alpha;
  double beta;
  double dalpha_ds;
  double dbeta_ds;
};

/// Samples on the uniform grid s_i = i / (n - 1).
struct PathTrajectory {
  PathSpec spec;
  BetaSchedule schedule;
  std::vector<PathPoint> samples;

  double s_at(std::size_t i) const { return static_cast<double>(i) / static_cast<double>(samples.size() - 1); }
  double ds() const { return 1.0 / static_cast<double>(samples.size() - 1); }
};

/// C = sqrt(2 pi g - g^2) / (pi - g), the slope of the circle path tan(alpha/2) = C sin(beta - pi/2).
double circle_constant(double gamma_g);

/// Largest polar angle of the circle loop, cos(alpha_m / 2) = 1 - gamma_g / pi.
double alpha_max(double gamma_g);

/// Polar angle on the pole-start circle; beta must lie in [pi/2, 3pi/2].
double alpha_of_beta(double gamma_g, double beta);
double dalpha_dbeta(double gamma_g, double beta);

/// Residual of the Hadamard-path constraint
/// 2 sin(pi/12) sin(a) cos(b) - 2 cos(pi/12) cos(a) + 1.
double hadamard_constraint(double alpha, double beta);

/// Root of the Hadamard constraint on the branch continuous with alpha(0) = pi/4.
double hadamard_alpha_of_beta(double beta);

/// Root of the Hadamard constraint nearest to `seed`; bisection then Newton,
/// |residual| < 1e-12 or ConvergenceError.
double hadamard_alpha_near(double beta, double seed);

/// d alpha / d beta on the Hadamard path, by implicit differentiation of the constraint.
double hadamard_dalpha_dbeta(double alpha, double beta);

BetaValue beta_schedule(double s, const BetaSchedule& schedule);

/// True when d beta / ds >= 0 at every point of an n-point grid.
bool azimuth_monotone(const BetaSchedule& schedule, std::size_t grid_points = kDefaultGridPoints);

PathTrajectory sample_trajectory(const PathSpec& spec, const BetaSchedule& schedule,
                                 std::size_t grid_points = kDefaultGridPoints);

/// gamma = 1/2 * integral (1 - cos alpha) d beta, composite trapezoid rule on the sample grid.
double geometric_phase(const PathTrajectory& traj);

/// Arc length on the unit sphere, trapezoid rule on the sample grid.
double path_length(const PathTrajectory& traj);

/// Great-circle distance between two points given by (polar, azimuth).
double angular_distance(double alpha1, double beta1, double alpha2, double beta2);

/// Angular distance between the first and last samples.
double closure_error(const PathTrajectory& traj);

}  // namespace geogate

#endif  // GEOGATE_BLOCH_PATH_H_
