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

#include "geogate/config.h"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace geogate {
namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

void read_mhz(const json& j, const char* key, double& out) {
  if (!j.contains(key)) return;
  double mhz = 0.0;
  read(j, key, mhz);
  out = mhz_to_rad_per_ns(mhz);
}

ModelKind parse_model(const std::string& name) {
  if (name == "two_level") return ModelKind::kTwoLevel;
  if (name == "three_level") return ModelKind::kThreeLevel;
  if (name == "two_qubit_full") return ModelKind::kTwoQubitFull;
  if (name == "two_qubit_effective") return ModelKind::kTwoQubitEffective;
  throw ConfigError("unknown model '" + name + "'");
}

ScanAxis parse_axis(const std::string& name) {
  if (name == "epsilon") return ScanAxis::kEpsilonX;
  if (name == "delta") return ScanAxis::kDeltaZ;
  if (name == "grid") return ScanAxis::kGrid2D;
  throw ConfigError("unknown scan axis '" + name + "'");
}

void parse_gate_field(const json& g, ScenarioConfig& c) {
  if (g.is_string()) {
    const auto gate = parse_gate(g.get<std::string>());
    if (!gate) throw ConfigError("unknown gate '" + g.get<std::string>() + "'");
    c.gate = *gate;
    c.spec = gate_spec(*gate);
    c.gate_label = gate_name(*gate);
    return;
  }
  if (!g.is_object()) throw ConfigError("'gate' must be a catalog name or an object");
  reject_unknown(g, {"gamma_g_rad", "kind"}, "gate");
  std::string kind = "pole";
  read(g, "kind", kind);
  if (kind == "hadamard") {
    c.spec = PathSpec::hadamard_start();
  } else if (kind == "pole") {
    if (!g.contains("gamma_g_rad")) throw ConfigError("pole gate needs 'gamma_g_rad'");
    double gamma = 0.0;
    read(g, "gamma_g_rad", gamma);
    c.spec = PathSpec::pole_start(gamma);
  } else {
    throw ConfigError("unknown gate kind '" + kind + "'");
  }
  c.gate.reset();
  c.gate_label = "custom";
}

}  // namespace

std::string model_name(ModelKind model) {
  switch (model) {
    case ModelKind::kTwoLevel:
      return "two_level";
    case ModelKind::kThreeLevel:
      return "three_level";
    case ModelKind::kTwoQubitFull:
      return "two_qubit_full";
    case ModelKind::kTwoQubitEffective:
      return "two_qubit_effective";
  }
  return "?";
}

ScenarioConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("scenario must be a JSON object");
  reject_unknown(j,
                 {"gate", "model", "omega0_mhz", "gamma_mhz", "kappa_mhz", "anharmonicity_mhz", "epsilon", "delta",
                  "scan", "coeffs", "drag", "dt_ns", "theta_samples", "seed", "threads", "initial_state",
                  "record_every", "convergence_guard", "optimizer", "two_qubit", "comment"},
                 "scenario");
  ScenarioConfig c;
  try {
    if (j.contains("gate")) parse_gate_field(j.at("gate"), c);
    if (j.contains("model")) c.model = parse_model(j.at("model").get<std::string>());
    if (j.contains("omega0_mhz")) {
      double w = 0.0;
      read_mhz(j, "omega0_mhz", w);
      c.budget = AmplitudeBudget(w);
    }
    read_mhz(j, "gamma_mhz", c.rates.gamma_decay);
    read_mhz(j, "kappa_mhz", c.rates.kappa_dephase);
    read_mhz(j, "anharmonicity_mhz", c.anharmonicity);
    read(j, "epsilon", c.errors.epsilon);
    read(j, "delta", c.errors.delta);
    read(j, "coeffs", c.coeffs);
    read(j, "drag", c.drag);
    read(j, "dt_ns", c.dt);
    read(j, "theta_samples", c.theta_samples);
    read(j, "seed", c.seed);
    read(j, "threads", c.threads);
    read(j, "initial_state", c.initial_state);
    read(j, "record_every", c.record_every);
    read(j, "convergence_guard", c.convergence_guard);
    if (j.contains("scan")) {
      const auto& s = j.at("scan");
      reject_unknown(s, {"axis", "points", "range"}, "scan");
      if (s.contains("axis")) c.scan.axis = parse_axis(s.at("axis").get<std::string>());
      read(s, "points", c.scan.points);
      read(s, "range", c.scan.range);
    }
    if (j.contains("optimizer")) {
      const auto& o = j.at("optimizer");
      reject_unknown(o, {"starts", "evals_per_start", "bound", "monotone", "pin_endpoints"}, "optimizer");
      read(o, "starts", c.optimizer.starts);
      read(o, "evals_per_start", c.optimizer.evals_per_start);
      read(o, "bound", c.optimizer.bound);
      read(o, "monotone", c.optimizer.monotone);
      read(o, "pin_endpoints", c.optimizer.pin_endpoints);
    }
    if (j.contains("two_qubit")) {
      const auto& t = j.at("two_qubit");
      reject_unknown(t,
                     {"g_mhz", "delta_mhz", "anh_a_mhz", "anh_b_mhz", "g_prime_max_mhz", "gamma_prime_rad",
                      "optimize_schedule", "theta_samples"},
                     "two_qubit");
      read_mhz(t, "g_mhz", c.two_qubit.params.g);
      read_mhz(t, "delta_mhz", c.two_qubit.params.delta);
      read_mhz(t, "anh_a_mhz", c.two_qubit.params.anh_a);
      read_mhz(t, "anh_b_mhz", c.two_qubit.params.anh_b);
      read_mhz(t, "g_prime_max_mhz", c.two_qubit.g_prime_max);
      read(t, "gamma_prime_rad", c.two_qubit.gamma_prime);
      read(t, "optimize_schedule", c.two_qubit.optimize_schedule);
      read(t, "theta_samples", c.two_qubit.theta_samples);
    }
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  c.two_qubit.params.anharmonicity = c.anharmonicity;

  if (!(c.dt > 0.0)) throw ConfigError("dt_ns must be positive");
  if (c.coeffs.size() > kMaxFourierTerms) throw ConfigError("at most 3 coefficients");
  if (c.theta_samples < 2) throw ConfigError("theta_samples must be at least 2");
  if (c.rates.gamma_decay < 0.0 || c.rates.kappa_dephase < 0.0) throw ConfigError("rates must be non-negative");
  if (!(c.scan.range >= 0.0 && c.scan.range <= 0.1)) throw ConfigError("scan range must lie in [0, 0.1]");
  if (c.initial_state != "plus" && c.initial_state != "zero" && c.initial_state != "one")
    throw ConfigError("initial_state must be plus, zero or one");
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path, json* raw) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
  if (raw) *raw = j;
  return parse_config(j);
}

std::string config_hash(const json& j) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace geogate
