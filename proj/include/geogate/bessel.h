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

#ifndef GEOGATE_BESSEL_H_
#define GEOGATE_BESSEL_H_

#include <cstddef>

namespace geogate {

/// First zero of J1' : J1 increases monotonically on [0, kBesselJ1ArgMax].
inline constexpr double kBesselJ1ArgMax = 1.8411837813406593;
/// J1(kBesselJ1ArgMax).
inline constexpr double kBesselJ1Max = 0.5818652242815963;

/// J1(x) from its ascending power series (25 terms); accurate to ~1e-15 for |x| < 2.
double bessel_j1(double x);

/// Unique x in [0, kBesselJ1ArgMax) with J1(x) = y, by bisection to 1e-12.
/// Throws DomainError for y outside [0, kBesselJ1Max).
double invert_bessel_j1(double y);

/// n-th Fourier coefficient (1/2pi) integral e^{-i eta sin(theta)} e^{i n theta} d theta,
/// by the trapezoid rule on `samples` points. Equals J_n(eta) (Jacobi-Anger).
double sideband_amplitude(double eta, int n, std::size_t samples = 256);

}  // namespace geogate

#endif  // GEOGATE_BESSEL_H_
