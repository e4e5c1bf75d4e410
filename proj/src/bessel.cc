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

#include "geogate/bessel.h"

#include <cmath>
#include <complex>

#include "geogate/linalg.h"

namespace geogate {

double bessel_j1(double x) {
  // J1(x) = sum_k (-1)^k (x/2)^{2k+1} / (k! (k+1)!)
  const double half = 0.5 * x;
  const double q = -half * half;
  double term = half;
  double sum = term;
  for (int k = 1; k < 25; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + 1));
    sum += term;
  }
  return sum;
}

double invert_bessel_j1(double y) {
  if (!(y >= 0.0 && y < kBesselJ1Max))
    throw DomainError("invert_bessel_j1: argument outside [0, max J1) -- drive unrealizable");
  if (y == 0.0) return 0.0;
  double lo = 0.0, hi = kBesselJ1ArgMax;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (bessel_j1(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double sideband_amplitude(double eta, int n, std::size_t samples) {
  std::complex<double> acc{};
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(samples);
    acc += std::polar(1.0, -eta * std::sin(theta) + n * theta);
  }
  return acc.real() / static_cast<double>(samples);
}

}  // namespace geogate
