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

#ifndef GEOGATE_LINALG_H_
#define GEOGATE_LINALG_H_

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace geogate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Angular frequency in rad/ns for a frequency given in MHz.
inline constexpr double mhz_to_rad_per_ns(double mhz) { return 2.0 * kPi * mhz * 1e-3; }
inline constexpr double rad_per_ns_to_mhz(double w) { return w / (2.0 * kPi * 1e-3); }

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative procedure (root finder, integrator guard) fails to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace pauli {

// Standard Pauli matrices in the basis (|0>, |1>), sigma_z = |0><0| - |1><1|.
inline Matrix2 x() { return (Matrix2() << 0, 1, 1, 0).finished(); }
inline Matrix2 y() { return (Matrix2() << 0, -kI, kI, 0).finished(); }
inline Matrix2 z() { return (Matrix2() << 1, 0, 0, -1).finished(); }

// The sign convention used for drive Hamiltonians and error terms:
// sigma_z = |1><1| - |0><0|.
inline Matrix2 z_excited() { return (Matrix2() << -1, 0, 0, 1).finished(); }

}  // namespace pauli

/// min over global phase of the Frobenius distance ||u - e^{i phi} target||.
double distance_up_to_phase(const Matrix& u, const Matrix& target);

/// Largest deviation |M - M^dagger| entry.
double hermiticity_error(const Matrix& m);

}  // namespace geogate

#endif  // GEOGATE_LINALG_H_
