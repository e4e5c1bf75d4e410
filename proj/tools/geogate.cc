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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "CLI11.hpp"
#include "json.hpp"

#include "geogate/acceptance.h"
#include "geogate/config.h"
#include "geogate/csv.h"
#include "geogate/fidelity.h"
#include "geogate/optimizer.h"
#include "geogate/parallel.h"
#include "geogate/version.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace geogate;

namespace {

struct CommonFlags {
  std::string config;
  std::string out = "out";
  std::optional<std::uint64_t> seed;
  std::optional<double> dt;
  std::optional<std::string> gate;
  std::optional<std::string> coeffs;
  std::optional<double> omega0;  // rad/ns
  bool drag = false;
  std::optional<std::string> model;
};

struct Run {
  std::string command;
  ScenarioConfig config;
  json raw = json::object();
  fs::path out;
  std::vector<std::string> outputs;
  json results = json::object();
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + item + "' in list");
    }
  }
  return values;
}

Run prepare(const std::string& command, const CommonFlags& flags) {
  Run run;
  run.command = command;
  if (!flags.config.empty()) {
    run.config = load_config(flags.config, &run.raw);
  }
  // Flags override the file; they are folded into the raw config so the hash covers them.
  if (flags.gate) run.raw["gate"] = *flags.gate;
  if (flags.coeffs) run.raw["coeffs"] = parse_list(*flags.coeffs);
  if (flags.omega0) run.raw["omega0_mhz"] = rad_per_ns_to_mhz(*flags.omega0);
  if (flags.drag) run.raw["drag"] = true;
  if (flags.model) run.raw["model"] = *flags.model;
  if (flags.seed) run.raw["seed"] = *flags.seed;
  if (flags.dt) run.raw["dt_ns"] = *flags.dt;
  run.config = parse_config(run.raw);
  if (run.config.threads > 0) set_default_worker_count(run.config.threads);
  run.out = flags.out;
  fs::create_directories(run.out);
  return run;
}

void write_manifest(const Run& run) {
  json m;
  m["command"] = run.command;
  m["config"] = run.raw;
  m["config_hash"] = config_hash(run.raw);
  m["seed"] = run.config.seed;
  m["dt_ns"] = run.config.dt;
  m["workers"] = worker_count();
  m["outputs"] = run.outputs;
  m["results"] = run.results;
  m["versions"] = {{"geogate", kVersion},
                   {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                 std::to_string(EIGEN_MINOR_VERSION)},
                   {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
                   {"cli11", CLI11_VERSION},
#if defined(__clang__)
                   {"compiler", std::string("clang ") + __clang_version__}
#elif defined(__GNUC__)
                   {"compiler", std::string("gcc ") + __VERSION__}
#else
                   {"compiler", "unknown"}
#endif
  };
  std::ofstream(run.out / "manifest.json") << m.dump(2) << '\n';
}

std::string file(Run& run, const std::string& name) {
  run.outputs.push_back(name);
  return (run.out / name).string();
}

SingleQubitModel single_model(const ScenarioConfig& c) {
  if (c.model == ModelKind::kTwoLevel) return SingleQubitModel::kTwoLevel;
  if (c.model == ModelKind::kThreeLevel) return SingleQubitModel::kThreeLevel;
  throw ConfigError("single-qubit commands need model two_level or three_level");
}

std::optional<double> drag_anharmonicity(const ScenarioConfig& c) {
  return c.drag ? std::optional<double>(c.anharmonicity) : std::nullopt;
}

SingleQubitGate build_gate(const ScenarioConfig& c, const std::vector<double>& coeffs, bool drag) {
  return geometric_gate(c.spec, c.gate_label, coeffs, c.budget, c.dt,
                        drag ? drag_anharmonicity(c) : std::nullopt);
}

FidelitySettings settings_of(const ScenarioConfig& c) {
  FidelitySettings s;
  s.model = single_model(c);
  s.anharmonicity = c.anharmonicity;
  s.rates = c.rates;
  s.errors = c.errors;
  s.dt = c.dt;
  s.theta_samples = c.theta_samples;
  s.convergence_guard = c.convergence_guard;
  return s;
}

Vector initial_state(const std::string& name) {
  Vector v(2);
  if (name == "zero") {
    v << 1.0, 0.0;
  } else if (name == "one") {
    v << 0.0, 1.0;
  } else {
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  }
  return v;
}

void warn_optimized_leakage(const ScenarioConfig& c) {
  if (c.model == ModelKind::kThreeLevel && !c.coeffs.empty())
    std::cerr << "warning: pulse-optimized schedules are not designed for leakage suppression; "
                 "three-level results with coeffs may be poor"
              << std::endl;
}

int cmd_synth(Run& run) {
  const auto& c = run.config;
  auto pulse = synthesize_pulse(c.spec, c.coeffs, c.budget, c.dt);
  if (c.drag) pulse = drag_correct(pulse, c.anharmonicity);
  write_pulse_csv(pulse, file(run, "pulse.csv"));
  run.results["tau_ns"] = pulse.tau;
  std::cout << "tau_ns=" << format_number(pulse.tau) << std::endl;
  return 0;
}

int cmd_simulate(Run& run) {
  const auto& c = run.config;
  warn_optimized_leakage(c);
  const auto settings = settings_of(c);
  const auto gate = build_gate(c, c.coeffs, c.drag);
  const double f = average_gate_fidelity_1q(gate, settings);

  const auto reference = build_gate(c, c.coeffs, false);
  const auto trace = fidelity_dynamics(gate, settings, initial_state(c.initial_state),
                                       two_level_hamiltonian(reference.stages[0].drive), c.record_every);
  write_fidelity_trace_csv(trace, file(run, "trace.csv"));
  CsvWriter csv(file(run, "fidelity.csv"), {"gate", "tau_ns", "average_fidelity", "final_state_fidelity"});
  csv.row(gate.label, std::vector<double>{gate.duration(), f, trace.fidelity.back()});
  run.results["average_fidelity"] = f;
  run.results["tau_ns"] = gate.duration();
  std::cout << "tau_ns=" << format_number(gate.duration()) << " fidelity=" << format_number(f) << std::endl;
  return 0;
}

int cmd_scan(Run& run) {
  const auto& c = run.config;
  warn_optimized_leakage(c);
  std::vector<SingleQubitGate> variants{build_gate(c, {}, c.drag)};
  if (!c.coeffs.empty()) variants.push_back(build_gate(c, c.coeffs, c.drag));
  variants.push_back(dynamical_comparator(c.spec, c.gate_label, c.budget));
  const auto scan = robustness_scan(variants, c.scan.axis, c.scan.points, settings_of(c), c.scan.range);
  write_scan_csv(scan, file(run, "scan.csv"));
  for (std::size_t v = 0; v < scan.variants.size(); ++v) {
    run.results[scan.variants[v]] = {{"min", *std::min_element(scan.fidelities[v].begin(), scan.fidelities[v].end())},
                                     {"max", *std::max_element(scan.fidelities[v].begin(), scan.fidelities[v].end())}};
  }
  std::cout << "points=" << scan.epsilon.size() << " variants=" << scan.variants.size() << std::endl;
  return 0;
}

OptimizationProblem problem_of(const ScenarioConfig& c, const PathSpec& spec, const AmplitudeBudget& budget) {
  OptimizationProblem p{spec, budget};
  p.seed = c.seed;
  p.starts = c.optimizer.starts;
  p.evals_per_start = c.optimizer.evals_per_start;
  p.bound = c.optimizer.bound;
  p.monotone = c.optimizer.monotone;
  p.pin_endpoints = c.optimizer.pin_endpoints;
  return p;
}

int cmd_optimize(Run& run) {
  const auto& c = run.config;
  const auto result = optimize(problem_of(c, c.spec, c.budget));
  write_optimization_csv(c.gate_label, result, file(run, "optimize.csv"));
  write_history_csv(result, file(run, "history.csv"));
  run.results["tau_ns"] = result.tau;
  run.results["baseline_tau_ns"] = result.baseline_tau;
  run.results["coeffs"] = result.coeffs;
  std::cout << "tau_ns=" << format_number(result.tau) << " coeffs=";
  for (std::size_t k = 0; k < result.coeffs.size(); ++k) std::cout << (k ? "," : "") << format_number(result.coeffs[k]);
  std::cout << std::endl;
  return 0;
}

int cmd_two_qubit(Run& run) {
  const auto& c = run.config;
  TwoQubitSettings s;
  if (c.model == ModelKind::kTwoQubitEffective) {
    s.model = TwoQubitModel::kEffective;
  } else if (c.model == ModelKind::kTwoQubitFull || c.model == ModelKind::kTwoLevel) {
    s.model = TwoQubitModel::kFull;  // two_level is the file default; treat as unset
  } else {
    throw ConfigError("two-qubit needs model two_qubit_full or two_qubit_effective");
  }
  s.params = c.two_qubit.params;
  s.rates = c.rates;
  s.gamma_prime = c.two_qubit.gamma_prime;
  s.g_prime_max = c.two_qubit.g_prime_max;
  s.dt = c.dt;
  s.theta_samples = c.two_qubit.theta_samples;
  s.convergence_guard = c.convergence_guard;
  s.coeffs = c.coeffs;
  if (s.coeffs.empty() && c.two_qubit.optimize_schedule && s.gamma_prime > 0.0)
    s.coeffs = optimize(problem_of(c, PathSpec::pole_start(s.gamma_prime), AmplitudeBudget(s.g_prime_max))).coeffs;
  const auto r = average_gate_fidelity_2q(s);

  auto drive = std::make_shared<const TwoQubitDrive>(
      make_two_qubit_drive(s.params, s.gamma_prime, s.g_prime_max, s.dt, s.coeffs));
  const bool full = s.model == TwoQubitModel::kFull;
  const auto h = full ? two_qubit_full_hamiltonian(s.params, drive)
                      : embed(effective_two_qubit_hamiltonian(drive), {pair_index(1, 1), pair_index(0, 2)}, 9);
  Vector psi = Vector::Zero(9);
  for (auto a : {0, 1})
    for (auto b : {0, 1}) psi(pair_index(a, b)) = 0.5;
  EvolutionOptions options;
  options.dt = s.dt;
  options.record_every = std::max<std::size_t>(1, c.record_every);
  const auto traj = evolve_lindblad(h, DensityMatrix::pure(psi), pair_collapse(s.rates), 0.0, drive->tau, options);
  std::vector<std::string> labels;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) labels.push_back(std::to_string(a) + std::to_string(b));
  write_trace_csv(file(run, "two_qubit_trace.csv"), traj, labels);

  CsvWriter csv(file(run, "two_qubit.csv"), {"model", "tau_ns", "average_fidelity", "leakage", "a1", "a2", "a3"});
  std::vector<double> row{r.tau, r.fidelity, r.leakage};
  for (std::size_t k = 0; k < kMaxFourierTerms; ++k) row.push_back(k < s.coeffs.size() ? s.coeffs[k] : 0.0);
  csv.row(full ? "full" : "effective", row);
  run.results["tau_ns"] = r.tau;
  run.results["average_fidelity"] = r.fidelity;
  run.results["leakage"] = r.leakage;
  run.results["coeffs"] = s.coeffs;
  std::cout << "tau_ns=" << format_number(r.tau) << " fidelity=" << format_number(r.fidelity) << std::endl;
  return 0;
}

int cmd_accept(Run& run, const std::vector<int>& only) {
  AcceptanceOptions options;
  options.seed = run.config.seed;
  options.dt = run.config.dt;
  options.only = {only.begin(), only.end()};
  const auto results = run_acceptance(options, std::cout);
  CsvWriter csv(file(run, "acceptance.csv"), {"criterion", "passed", "seconds"});
  int failed = 0;
  for (const auto& r : results) {
    csv.row({static_cast<double>(r.id), r.passed ? 1.0 : 0.0, r.seconds});
    run.results[std::to_string(r.id)] = {{"passed", r.passed}, {"detail", r.detail}};
    failed += r.passed ? 0 : 1;
  }
  std::cout << "acceptance: " << results.size() - failed << "/" << results.size() << " passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

void error_line(const char* type, const std::string& message, int code) {
  std::cerr << json{{"error", type}, {"message", message}, {"exit_code", code}}.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest-path geometric gate synthesis and simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonFlags flags;
  std::vector<int> only;
  auto common = [&](CLI::App* sub, bool single_qubit) {
    sub->add_option("--config", flags.config, "Scenario JSON (frequencies in MHz)")->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out, "Output directory")->capture_default_str();
    sub->add_option("--seed", flags.seed, "Optimizer seed");
    sub->add_option("--dt", flags.dt, "Integrator step, ns")->check(CLI::PositiveNumber);
    sub->add_option("--coeffs", flags.coeffs, "Schedule coefficients a1,a2,a3");
    if (single_qubit) {
      sub->add_option("--gate", flags.gate, "phase, pi8 or hadamard");
      sub->add_option("--omega0", flags.omega0, "Amplitude budget, rad/ns")->check(CLI::PositiveNumber);
      sub->add_flag("--drag", flags.drag, "Apply the DRAG correction");
    }
    sub->add_option("--model", flags.model, "two_level, three_level, two_qubit_full, two_qubit_effective");
  };
  auto* synth = app.add_subcommand("synth", "Synthesize a pulse and write pulse.csv");
  auto* simulate = app.add_subcommand("simulate", "Average fidelity and a time trace for one gate");
  auto* scan = app.add_subcommand("scan", "Fidelity against amplitude or detuning errors");
  auto* two_qubit = app.add_subcommand("two-qubit", "Control-phase gate on two coupled transmons");
  auto* opt = app.add_subcommand("optimize", "Search schedule coefficients for the shortest pulse");
  auto* accept = app.add_subcommand("accept", "Run the acceptance suite");
  for (auto* sub : {synth, simulate, scan, opt}) common(sub, true);
  common(two_qubit, false);
  accept->add_option("--out", flags.out, "Output directory")->capture_default_str();
  accept->add_option("--seed", flags.seed, "Optimizer seed");
  accept->add_option("--dt", flags.dt, "Integrator step, ns")->check(CLI::PositiveNumber);
  accept->add_option("--only", only, "Criteria to run (1-10)")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    error_line("UsageError", e.what(), 2);
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    Run run = prepare(chosen->get_name(), flags);
    int code = 0;
    if (chosen == synth) code = cmd_synth(run);
    if (chosen == simulate) code = cmd_simulate(run);
    if (chosen == scan) code = cmd_scan(run);
    if (chosen == two_qubit) code = cmd_two_qubit(run);
    if (chosen == opt) code = cmd_optimize(run);
    if (chosen == accept) code = cmd_accept(run, only);
    write_manifest(run);
    return code;
  } catch (const ConfigError& e) {
    error_line("ConfigError", e.what(), 2);
    return 2;
  } catch (const DomainError& e) {
    error_line("DomainError", e.what(), 3);
    return 3;
  } catch (const ConvergenceError& e) {
    error_line("ConvergenceError", e.what(), 4);
    return 4;
  } catch (const std::exception& e) {
    error_line("Error", e.what(), 1);
    return 1;
  }
}
