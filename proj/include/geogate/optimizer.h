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

#ifndef GEOGATE_OPTIMIZER_H_
#define GEOGATE_OPTIMIZER_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "geogate/bessel.h"
#include "geogate/bloch_path.h"
#include "geogate/pulse_synth.h"

namespace geogate {

struct OptimizationProblem {
  PathSpec spec;
  AmplitudeBudget budget;
  std::size_t n_terms = kMaxFourierTerms;
  double bound = 0.2;  // each a_k in [-bound, bound]
  bool monotone = true;
  bool pin_endpoints = true;  // search only sum k a_k = 0, so the drive starts and ends at zero
  std::size_t starts = 16;
  std::size_t evals_per_start = 500;
  std::uint64_t seed = 1;
  std::size_t grid_points = kDefaultGridPoints;

  void validate() const;
};

struct Evaluation {
  std::size_t start;
  std::vector<double> coeffs;
  double tau;              // ns; +inf when rejected
  double geometric_phase;  // NaN when rejected
};

struct OptimizationResult {
  std::vector<double> coeffs;
  double tau = 0.0;           // ns
  double baseline_tau = 0.0;  // ns, zero coefficients
  std::vector<Evaluation> history;
};

/// Gate duration for a schedule, or +inf when the coefficients are out of
/// bounds, break monotonicity, or leave the path undefined.
double objective(const std::vector<double>& coeffs, const OptimizationProblem& problem);

/// Multi-start Nelder-Mead over the coefficient box. Deterministic for a fixed seed.
OptimizationResult optimize(const OptimizationProblem& problem);

struct NelderMeadOptions {
  std::size_t max_evals = 500;
  double initial_step = 0.05;
  double x_tolerance = 1e-9;
  double f_tolerance = 1e-12;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f;
  std::size_t evals;
};

template <typename F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, const NelderMeadOptions& options);

void write_optimization_csv(const std::string& gate, const OptimizationResult& result,
                            const std::filesystem::path& path);
void write_history_csv(const OptimizationResult& result, const std::filesystem::path& path);

}  // namespace geogate

#include "geogate/nelder_mead_impl.h"

#endif  // GEOGATE_OPTIMIZER_H_
