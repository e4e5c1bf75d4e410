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

#include "doctest.h"
#include "geogate/config.h"

using namespace geogate;
using nlohmann::json;

TEST_CASE("frequencies are converted from MHz") {
  const auto c = parse_config(json{{"omega0_mhz", 30.0}, {"gamma_mhz", 0.003}, {"anharmonicity_mhz", 220.0}});
  CHECK(c.budget.omega0 == doctest::Approx(2.0 * kPi * 0.030));
  CHECK(c.rates.gamma_decay == doctest::Approx(2.0 * kPi * 3e-6));
  CHECK(c.anharmonicity == doctest::Approx(2.0 * kPi * 0.220));
  CHECK(c.two_qubit.params.anharmonicity == c.anharmonicity);
}

TEST_CASE("defaults") {
  const auto c = parse_config(json::object());
  CHECK(c.gate == Gate::kPiOver8);
  CHECK(c.model == ModelKind::kTwoLevel);
  CHECK(c.dt == 1e-3);
  CHECK(c.scan.points == 41);
  CHECK(c.optimizer.starts == 16);
  CHECK(c.two_qubit.g_prime_max == doctest::Approx(mhz_to_rad_per_ns(15.0)));
}

TEST_CASE("gates") {
  CHECK(parse_config(json{{"gate", "hadamard"}}).spec.kind == PathKind::kHadamardStart);
  const auto custom = parse_config(json{{"gate", {{"kind", "pole"}, {"gamma_g_rad", 0.3}}}});
  CHECK(custom.spec.gamma_g == 0.3);
  CHECK_FALSE(custom.gate.has_value());
  CHECK_THROWS_AS(parse_config(json{{"gate", "cnot"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"gate", {{"kind", "pole"}, {"gamma_g_rad", 4.0}}}}), ConfigError);
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(parse_config(json{{"omega0", 30}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"dt_ns", -1.0}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"coeffs", {0.1, 0.1, 0.1, 0.1}}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"model", "four_level"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"scan", {{"range", 0.5}}}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"seed", "one"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"omega0_mhz", 0.0}}), ConfigError);
}

TEST_CASE("hash is canonical") {
  const json a = json::parse(R"({"gate": "pi8", "seed": 3})");
  const json b = json::parse(R"({"seed": 3, "gate": "pi8"})");
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a) != config_hash(json{{"gate", "pi8"}, {"seed", 4}}));
  CHECK(config_hash(a).size() == 16);
}
