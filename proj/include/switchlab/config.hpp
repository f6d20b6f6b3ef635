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


#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "switchlab/model.hpp"

namespace switchlab {

// Scenario files are flat "key = value" lines; '#' starts a comment. Values
// are JSON literals. Complex numbers are [re, im] pairs (a bare real number is
// also accepted) and matrices are flat row-major arrays of complex entries.
//
//   probabilities      = [0.5, 0.5]
//   phases             = [0, 0]
//   detector_dim       = 2
//   initial_detector   = 0
//   detector_unitary.0 = [[1,0], [0,0], [0,0], [1,0]]
//   detector_unitary.1 = [[0,0], [1,0], [1,0], [0,0]]
//   interference       = [[1,0], [0,0], [0,0], [1,0]]
//   p                  = 0.5
//   theta              = 0
//   order_offdiag      = [0.5, 0]      # optional
//
// An optional "paths" key must agree with the length of probabilities.

/// Parses and validates scenario text. Throws ConfigError on malformed input
/// and ValidationError when a parsed field breaks a scenario invariant.
SwitchScenario parse_scenario(std::string_view text);

/// Canonical text form (17 significant digits); parse_scenario round-trips it.
std::string format_scenario(const SwitchScenario& scn);

/// FNV-1a 64-bit hash of the canonical text plus the seed, as 16 hex digits.
std::string fingerprint(const SwitchScenario& scn, std::uint64_t seed);

const std::vector<std::string>& builtin_scenario_names();

/// Built-in name or path to a scenario file. "generic" draws from the seed.
SwitchScenario load_scenario(const std::string& source, std::uint64_t seed);

/// Controlled bit flip on the detector, path phases on the quanton.
SwitchScenario explicit_realization(double p = 0.5, double theta = 0.0);
SwitchScenario no_marking();
/// Three paths, orthogonal detector states, diagonal (commuting) U_Q.
SwitchScenario full_marking();

}  // namespace switchlab
