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

#include "geogate/optimizer.h"

#include <cmath>
#include <limits>
#include <random>

#include "geogate/csv.h"
#include "geogate/linalg.h"
#include "geogate/parallel.h"

namespace geogate {
namespace {

constexpr double kRejected = std::numeric_limits<double>::infinity();

struct Scored {
  double tau;
  double phase;
};

double endpoint_rate(const std::vector<double>& coeffs) {
  double sum = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) sum += static_cast<double>(k + 1) * coeffs[k];
  return sum;
}

// With pinned endpoints the last coefficient follows from the others.
std::vector<double> expand(const std::vector<double>& free, const OptimizationProblem& problem) {
  if (!problem.pin_endpoints) return free;
  std::vector<double> full = free;
  const double n = static_cast<double>(problem.n_terms);
  full.push_back(-endpoint_rate(free) / n);
  return full;
}

Scored score(const std::vector<double>& coeffs, const OptimizationProblem& problem) {
  for (double a : coeffs)
    if (!(std::abs(a) <= problem.bound)) return {kRejected, std::nan("")};
  const auto schedule = BetaSchedule::for_spec(problem.spec, coeffs);
  if (problem.monotone && !azimuth_monotone(schedule, problem.grid_points)) return {kRejected, std::nan("")};
  try {
    const auto traj = sample_trajectory(problem.spec, schedule, problem.grid_points);
    return {normalize_duration(traj, problem.budget), geometric_phase(traj)};
  } catch (const DomainError&) {
    return {kRejected, std::nan("")};
  } catch (const ConvergenceError&) {
    return {kRejected, std::nan("")};
  }
}

}  // namespace

void OptimizationProblem::validate() const {
  spec.validate();
  if (n_terms > kMaxFourierTerms) throw DomainError("optimizer: at most 3 Fourier terms");
  if (!(bound >= 0.0)) throw DomainError("optimizer: bound must be non-negative");
  if (starts == 0) throw DomainError("optimizer: need at least one start");
}

double objective(const std::vector<double>& coeffs, const OptimizationProblem& problem) {
  return score(coeffs, problem).tau;
}

OptimizationResult optimize(const OptimizationProblem& problem) {
  problem.validate();
  OptimizationResult result;
  const std::vector<double> zero(problem.n_terms, 0.0);
  result.coeffs = zero;
  result.baseline_tau = objective(zero, problem);
  result.tau = result.baseline_tau;
  if (problem.n_terms == 0 || problem.bound == 0.0) return result;
  if (problem.pin_endpoints && problem.n_terms == 1) return result;

  // Starting points are drawn up front so the outcome does not depend on the worker count.
  std::mt19937_64 rng(problem.seed);
  std::uniform_real_distribution<double> draw(-problem.bound, problem.bound);
  const std::size_t free_terms = problem.pin_endpoints ? problem.n_terms - 1 : problem.n_terms;
  std::vector<std::vector<double>> starts(problem.starts, std::vector<double>(free_terms, 0.0));
  for (std::size_t i = 1; i < problem.starts; ++i) {
    do {
      for (auto& a : starts[i]) a = draw(rng);
    } while (!std::isfinite(objective(expand(starts[i], problem), problem)));
  }

  NelderMeadOptions options;
  options.max_evals = problem.evals_per_start;
  options.initial_step = 0.25 * problem.bound;
  std::vector<std::vector<Evaluation>> histories(problem.starts);
  std::vector<NelderMeadResult> found(problem.starts);
  parallel_for(problem.starts, [&](std::size_t i) {
    auto f = [&](const std::vector<double>& x) {
      auto full = expand(x, problem);
      const auto s = score(full, problem);
      histories[i].push_back({i, std::move(full), s.tau, s.phase});
      return s.tau;
    };
    found[i] = nelder_mead(f, starts[i], options);
  });

  for (std::size_t i = 0; i < problem.starts; ++i) {
    result.history.insert(result.history.end(), histories[i].begin(), histories[i].end());
    if (found[i].f < result.tau) {
      result.tau = found[i].f;
      result.coeffs = expand(found[i].x, problem);
    }
  }
  return result;
}

void write_optimization_csv(const std::string& gate, const OptimizationResult& result,
                            const std::filesystem::path& path) {
  std::vector<std::string> header{"gate"};
  for (std::size_t k = 0; k < result.coeffs.size(); ++k) header.push_back("a" + std::to_string(k + 1));
  header.push_back("tau_ns");
  header.push_back("baseline_tau_ns");
  CsvWriter csv(path, header);
  std::vector<double> row = result.coeffs;
  row.push_back(result.tau);
  row.push_back(result.baseline_tau);
  csv.row(gate, row);
}

void write_history_csv(const OptimizationResult& result, const std::filesystem::path& path) {
  std::vector<std::string> header{"start", "eval"};
  const std::size_t n = result.history.empty() ? 0 : result.history.front().coeffs.size();
  for (std::size_t k = 0; k < n; ++k) header.push_back("a" + std::to_string(k + 1));
  header.push_back("tau_ns");
  header.push_back("geometric_phase_rad");
  CsvWriter csv(path, header);
  std::size_t count = 0, current = 0;
  for (const auto& e : result.history) {
    if (e.start != current) {
      current = e.start;
      count = 0;
    }
    std::vector<double> row{static_cast<double>(e.start), static_cast<double>(count++)};
    row.insert(row.end(), e.coeffs.begin(), e.coeffs.end());
    row.push_back(e.tau);
    row.push_back(e.geometric_phase);
    csv.row(row);
  }
}

}  // namespace geogate
