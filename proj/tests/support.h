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

#ifndef GEOGATE_TESTS_SUPPORT_H_
#define GEOGATE_TESTS_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "geogate/bloch_path.h"
#include "geogate/linalg.h"

namespace geogate::testing {

/// Orange-slice loop enclosing phase gamma: North Pole down the meridian beta = 0 to the
/// South Pole and back up along beta = 2 gamma. Returns (alpha, beta) samples.
inline std::vector<std::pair<double, double>> orange_slice(double gamma, int segments_per_arc) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= segments_per_arc; ++i) pts.emplace_back(kPi * i / segments_per_arc, 0.0);
  for (int i = segments_per_arc; i >= 0; --i) pts.emplace_back(kPi * i / segments_per_arc, 2.0 * gamma);
  return pts;
}

inline double polyline_length(const std::vector<std::pair<double, double>>& pts) {
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto [a1, b1] = pts[i - 1];
    const auto [a2, b2] = pts[i];
    const double dot = std::sin(a1) * std::sin(a2) * std::cos(b1 - b2) + std::cos(a1) * std::cos(a2);
    total += std::acos(std::clamp(dot, -1.0, 1.0));
  }
  return total;
}

/// exp(-i gamma n.sigma) with the standard Pauli matrices, by matrix exponential.
inline Matrix rotation(double gamma, double alpha, double beta) {
  const Matrix2 n = std::sin(alpha) * std::cos(beta) * pauli::x() + std::sin(alpha) * std::sin(beta) * pauli::y() +
                    std::cos(alpha) * pauli::z();
  const Matrix2 gen = Complex(0.0, -gamma) * n;
  return Matrix(gen.exp());
}

}  // namespace geogate::testing

#endif  // GEOGATE_TESTS_SUPPORT_H_
