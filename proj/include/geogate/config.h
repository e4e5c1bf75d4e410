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

#ifndef GEOGATE_CONFIG_H_
#define GEOGATE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "geogate/dynamics.h"
#include "geogate/fidelity.h"
#include "geogate/pulse_synth.h"

namespace geogate {

/// Malformed or inconsistent scenario file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ModelKind { kTwoLevel, kThreeLevel, kTwoQubitFull, kTwoQubitEffective };

struct ScanConfig {
  ScanAxis axis = ScanAxis::kEpsilonX;
  std::size_t points = 41;
  double range = 0.1;
};

struct OptimizerConfig {
  std::size_t starts = 16;
  std::size_t evals_per_start = 500;
  double bound = 0.2;
  bool monotone = true;
  bool pin_endpoints = true;
};

struct TwoQubitConfig {
  TransmonParams params;
  double gamma_prime = kPi / 4.0;
  double g_prime_max = mhz_to_rad_per_ns(15.0);  // rad/ns
  bool optimize_schedule = true;
  std::size_t theta_samples = 51;
};

/// One scenario. Frequencies are read in MHz and stored in rad/ns.
struct ScenarioConfig {
  std::string gate_label = "pi8";
  PathSpec spec = gate_spec(Gate::kPiOver8);
  std::optional<Gate> gate = Gate::kPiOver8;
  ModelKind model = ModelKind::kTwoLevel;
  AmplitudeBudget budget;
  DecoherenceRates rates = DecoherenceRates::transmon_default();
  double anharmonicity = mhz_to_rad_per_ns(220.0);
  ErrorFractions errors;
  ScanConfig scan;
  std::vector<double> coeffs;
  bool drag = false;
  double dt = 1e-3;  // ns
  std::size_t theta_samples = 1001;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  std::string initial_state = "plus";
  std::size_t record_every = 10;
  bool convergence_guard = false;
  OptimizerConfig optimizer;
  TwoQubitConfig two_qubit;
};

ScenarioConfig parse_config(const nlohmann::json& j);

/// Reads and parses a scenario file; syntax errors report the line and column.
ScenarioConfig load_config(const std::filesystem::path& path, nlohmann::json* raw = nullptr);

/// FNV-1a 64 of the canonical (sorted-key) serialization, as 16 hex digits.
std::string config_hash(const nlohmann::json& j);

std::string model_name(ModelKind model);

}  // namespace geogate

#endif  // GEOGATE_CONFIG_H_
