// Copyright 2026 The switchlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "switchlab/config.hpp"
#include "switchlab/errors.hpp"
#include "switchlab/sampling.hpp"

using namespace switchlab;

namespace {

const char* kRealization = R"(# controlled flip on the detector
probabilities = [0.5, 0.5]
phases = [0, 0]
detector_dim = 2
initial_detector = 0
detector_unitary.0 = [[1,0],[0,0],[0,0],[1,0]]
detector_unitary.1 = [[0,0],[1,0],[1,0],[0,0]]
interference = [1, 0, 0, 1]   # bare reals are accepted
p = 0.5
theta = 0
)";

std::size_t error_line(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return 0;
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("parsing a scenario file") {
  const SwitchScenario scn = parse_scenario(kRealization);
  CHECK(format_scenario(scn) == format_scenario(explicit_realization()));
  CHECK_FALSE(scn.order_offdiag.has_value());

  const SwitchScenario mixed = parse_scenario(std::string(kRealization) + "order_offdiag = [0.1, -0.2]\n");
  REQUIRE(mixed.order_offdiag.has_value());
  CHECK(*mixed.order_offdiag == Complex(0.1, -0.2));
}

TEST_CASE("canonical text round-trips exactly") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SwitchScenario s = random_scenario(seed, {.mixed_order = seed % 2 == 0});
    const std::string text = format_scenario(s);
    const SwitchScenario back = parse_scenario(text);
    CHECK(format_scenario(back) == text);
    CHECK(back.p == s.p);
    CHECK(back.interference == s.interference);
  }
}

TEST_CASE("malformed files report line and field") {
  CHECK(error_line(replace(kRealization, "p = 0.5", "p 0.5")) == 9);
  CHECK(error_line(replace(kRealization, "theta = 0", "thetta = 0")) == 10);
  CHECK(error_line(replace(kRealization, "phases = [0, 0]", "phases = [0, 0")) == 3);
  CHECK(error_line(std::string(kRealization) + "p = 0.3\n") == 11);

  try {
    parse_scenario(replace(kRealization, "interference = [1, 0, 0, 1]", "interference = [1, 0, 0]"));
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 8);
    CHECK(e.field() == "interference");
  }
  try {
    parse_scenario(replace(kRealization, "detector_unitary.1 = [[0,0],[1,0],[1,0],[0,0]]\n", ""));
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "detector_unitary.1");
  }
  CHECK_THROWS_AS(parse_scenario(std::string(kRealization) + "detector_unitary.2 = [1,0,0,1]\n"),
                  ConfigError);
  CHECK_THROWS_AS(
      parse_scenario(std::string(kRealization) + "detector_unitary.99999999999999999999999 = 1\n"),
      ConfigError);
  CHECK_THROWS_AS(parse_scenario(replace(kRealization, "detector_dim = 2", "detector_dim = -2")),
                  ConfigError);
  CHECK_THROWS_AS(parse_scenario(std::string(kRealization) + "paths = 3\n"), ConfigError);
}

TEST_CASE("invariant violations name the field") {
  try {
    parse_scenario(std::string(kRealization) + "order_offdiag = [0.4, 0.35]\n");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "order_offdiag");
  }
  try {
    parse_scenario(replace(kRealization, "[[0,0],[1,0],[1,0],[0,0]]", "[[1,0],[1,0],[1,0],[0,0]]"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "detector_unitary.1");
  }
  try {
    parse_scenario(replace(kRealization, "probabilities = [0.5, 0.5]", "probabilities = [0.5, 0.6]"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "probabilities");
  }
}

TEST_CASE("built-in registry") {
  CHECK(builtin_scenario_names().size() == 4);
  const SwitchScenario er = load_scenario("explicit-realization", 0);
  CHECK(er.p == 0.5);
  CHECK(er.theta == 0.0);
  CHECK(er.preparation.phases == std::vector<double>{0.0, 0.0});
  CHECK(er.interaction.detector_unitaries[1] == (ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}));

  const SwitchScenario nm = load_scenario("no-marking", 0);
  for (const auto& v : nm.interaction.detector_unitaries) CHECK(v == ComplexMatrix::identity(2));
  CHECK(nm.interference == ComplexMatrix::identity(2));

  const SwitchScenario fm = load_scenario("full-marking", 0);
  for (std::size_t i = 0; i < fm.paths(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      CHECK(std::abs(inner(fm.interaction.detector_state(i), fm.interaction.detector_state(j))) < 1e-15);

  CHECK(format_scenario(load_scenario("generic", 5)) == format_scenario(random_scenario(5)));
  CHECK(format_scenario(load_scenario("generic", 5)) != format_scenario(load_scenario("generic", 6)));
  CHECK_THROWS_AS(load_scenario("no-such-scenario", 0), ConfigError);

  const auto path = std::filesystem::temp_directory_path() / "switchlab_test_config.scn";
  std::ofstream(path) << kRealization;
  CHECK(format_scenario(load_scenario(path.string(), 0)) == format_scenario(er));
  std::filesystem::remove(path);
}

TEST_CASE("fingerprints") {
  const SwitchScenario a = explicit_realization();
  CHECK(fingerprint(a, 42).size() == 16);
  CHECK(fingerprint(a, 42) == fingerprint(explicit_realization(), 42));
  CHECK(fingerprint(a, 42) != fingerprint(a, 43));
  SwitchScenario b = a;
  b.theta = std::nextafter(0.0, 1.0);
  CHECK(fingerprint(a, 42) != fingerprint(b, 42));
}
