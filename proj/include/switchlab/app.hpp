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
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "switchlab/relations.hpp"

namespace switchlab {

enum class Command { Verify, Run, Sweep, Region };
enum class OutputFormat { Csv, Json };

/// name:start:stop:steps, an inclusive linspace over p, theta, phi or overlap.
struct AxisSpec {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 1;

  double value(std::size_t i) const;
};

/// Throws std::invalid_argument for malformed specs and unknown axis names.
AxisSpec parse_axis(const std::string& spec);

struct RunConfig {
  Command command = Command::Verify;
  std::string scenario = "explicit-realization";
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::string out;  // empty: standard output
  OutputFormat format = OutputFormat::Csv;
  std::vector<AxisSpec> axes;
  std::optional<double> alpha;
  double tol = kRelationTolerance;
  RegionFamily family = RegionFamily::Commuting;
  std::size_t grid = 21;
};

using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// CSV with a header row and %.17g floats, or a JSON array of row objects.
void write_table(const Table& table, OutputFormat format, std::ostream& os);

/// Rows sorted by name, then fingerprint. Sets *all_hold.
Table verify_table(const RunConfig& cfg, bool* all_hold);
Table run_table(const RunConfig& cfg);
Table sweep_table(const RunConfig& cfg);
Table region_table(const RunConfig& cfg, bool* inside);

/// Full command line without the program name. Returns the process exit
/// status: 0 success, 1 relation failure, 2 configuration or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace switchlab
