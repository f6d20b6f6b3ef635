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


#include "switchlab/config.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "switchlab/errors.hpp"
#include "switchlab/sampling.hpp"

namespace switchlab {

namespace {

using nlohmann::json;

struct Entry {
  std::size_t line = 0;
  json value;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool known_key(const std::string& key) {
  static const char* const keys[] = {"paths",  "probabilities", "phases",       "detector_dim",
                                     "initial_detector", "interference", "p", "theta",
                                     "order_offdiag"};
  for (const char* k : keys) {
    if (key == k) return true;
  }
  if (key.rfind("detector_unitary.", 0) == 0) {
    const std::string idx = key.substr(17);
    return !idx.empty() && idx.find_first_not_of("0123456789") == std::string::npos;
  }
  return false;
}

double to_real(const Entry& e, const std::string& field) {
  if (!e.value.is_number()) throw ConfigError(e.line, field, "expected a number");
  return e.value.get<double>();
}

std::size_t to_count(const Entry& e, const std::string& field) {
  if (!e.value.is_number_unsigned()) {
    throw ConfigError(e.line, field, "expected a nonnegative integer");
  }
  return e.value.get<std::size_t>();
}

Complex to_complex(const json& v, std::size_t line, const std::string& field) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError(line, field, "expected a complex number [re, im]");
}

std::vector<double> to_reals(const Entry& e, const std::string& field) {
  if (!e.value.is_array()) throw ConfigError(e.line, field, "expected an array of numbers");
  std::vector<double> out;
  for (const json& v : e.value) {
    if (!v.is_number()) throw ConfigError(e.line, field, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

ComplexMatrix to_square(const Entry& e, const std::string& field, std::size_t dim) {
  if (!e.value.is_array()) throw ConfigError(e.line, field, "expected a row-major array");
  if (e.value.size() != dim * dim) {
    throw ConfigError(e.line, field,
                      "expected " + std::to_string(dim * dim) + " entries for a " +
                          std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  }
  std::vector<Complex> entries;
  for (const json& v : e.value) {
    const Complex z = to_complex(v, e.line, field);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ConfigError(e.line, field, "entries must be finite");
    }
    entries.push_back(z);
  }
  return ComplexMatrix(dim, dim, std::move(entries));
}

void append_real(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void append_complex(std::string& out, Complex z) {
  out += '[';
  append_real(out, z.real());
  out += ", ";
  append_real(out, z.imag());
  out += ']';
}

void append_matrix(std::string& out, const ComplexMatrix& m) {
  out += '[';
  bool first = true;
  for (Complex z : m.entries()) {
    if (!first) out += ", ";
    first = false;
    append_complex(out, z);
  }
  out += ']';
}

void append_reals(std::string& out, const std::vector<double>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    append_real(out, xs[i]);
  }
  out += ']';
}

}  // namespace

SwitchScenario parse_scenario(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line_no, "", "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!known_key(key)) throw ConfigError(line_no, key, "unknown key");
    if (entries.count(key)) throw ConfigError(line_no, key, "duplicate key");
    json parsed = json::parse(value, nullptr, false);
    if (parsed.is_discarded()) throw ConfigError(line_no, key, "value is not a valid literal");
    entries[key] = Entry{line_no, std::move(parsed)};
  }
  const std::size_t last_line = line_no;

  auto require = [&](const std::string& key) -> const Entry& {
    const auto it = entries.find(key);
    if (it == entries.end()) throw ConfigError(last_line, key, "missing required key");
    return it->second;
  };

  SwitchScenario scn;
  scn.preparation.probabilities = to_reals(require("probabilities"), "probabilities");
  const std::size_t n = scn.preparation.probabilities.size();
  if (const auto it = entries.find("paths"); it != entries.end()) {
    if (to_count(it->second, "paths") != n) {
      throw ConfigError(it->second.line, "paths", "does not match the length of probabilities");
    }
  }
  if (const auto it = entries.find("phases"); it != entries.end()) {
    scn.preparation.phases = to_reals(it->second, "phases");
  } else {
    scn.preparation.phases.assign(n, 0.0);
  }

  const std::size_t d = to_count(require("detector_dim"), "detector_dim");
  scn.interaction.detector_dim = d;
  if (const auto it = entries.find("initial_detector"); it != entries.end()) {
    scn.interaction.initial_detector = to_count(it->second, "initial_detector");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string key = "detector_unitary." + std::to_string(i);
    scn.interaction.detector_unitaries.push_back(to_square(require(key), key, d));
  }
  for (const auto& [key, entry] : entries) {
    if (key.rfind("detector_unitary.", 0) != 0) continue;
    const std::string idx = key.substr(17);
    if (idx.size() > 9 || std::stoul(idx) >= n) {
      throw ConfigError(entry.line, key, "index exceeds the number of paths");
    }
  }
  scn.interference = to_square(require("interference"), "interference", n);
  scn.p = to_real(require("p"), "p");
  if (const auto it = entries.find("theta"); it != entries.end()) {
    scn.theta = to_real(it->second, "theta");
  }
  if (const auto it = entries.find("order_offdiag"); it != entries.end()) {
    scn.order_offdiag = to_complex(it->second.value, it->second.line, "order_offdiag");
  }
  scn.validate();
  return scn;
}

std::string format_scenario(const SwitchScenario& scn) {
  std::string out;
  out += "paths = " + std::to_string(scn.paths()) + "\n";
  out += "probabilities = ";
  append_reals(out, scn.preparation.probabilities);
  out += "\nphases = ";
  append_reals(out, scn.preparation.phases);
  out += "\ndetector_dim = " + std::to_string(scn.detector_dim()) + "\n";
  out += "initial_detector = " + std::to_string(scn.interaction.initial_detector) + "\n";
  for (std::size_t i = 0; i < scn.interaction.detector_unitaries.size(); ++i) {
    out += "detector_unitary." + std::to_string(i) + " = ";
    append_matrix(out, scn.interaction.detector_unitaries[i]);
    out += '\n';
  }
  out += "interference = ";
  append_matrix(out, scn.interference);
  out += "\np = ";
  append_real(out, scn.p);
  out += "\ntheta = ";
  append_real(out, scn.theta);
  out += '\n';
  if (scn.order_offdiag) {
    out += "order_offdiag = ";
    append_complex(out, *scn.order_offdiag);
    out += '\n';
  }
  return out;
}

std::string fingerprint(const SwitchScenario& scn, std::uint64_t seed) {
  const std::string text = format_scenario(scn) + "seed = " + std::to_string(seed) + "\n";
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names{"explicit-realization", "no-marking",
                                              "full-marking", "generic"};
  return names;
}

SwitchScenario explicit_realization(double p, double theta) {
  SwitchScenario scn;
  scn.preparation = PathPreparation::balanced(2);
  scn.interaction.detector_dim = 2;
  scn.interaction.detector_unitaries = {ComplexMatrix::identity(2),
                                        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}};
  // U_B = diag(e^{i phi_0}, e^{i phi_1}) with phi_0 = phi_1 = 0.
  scn.interference = ComplexMatrix::identity(2);
  scn.p = p;
  scn.theta = theta;
  return scn;
}

SwitchScenario no_marking() {
  SwitchScenario scn;
  scn.preparation = PathPreparation::balanced(2);
  scn.interaction.detector_dim = 2;
  scn.interaction.detector_unitaries = {ComplexMatrix::identity(2), ComplexMatrix::identity(2)};
  scn.interference = ComplexMatrix::identity(2);
  return scn;
}

SwitchScenario full_marking() {
  constexpr std::size_t n = 3;
  SwitchScenario scn;
  scn.preparation = PathPreparation::balanced(n);
  scn.interaction.detector_dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix shift(n, n);
    for (std::size_t r = 0; r < n; ++r) shift((r + i) % n, r) = 1.0;
    scn.interaction.detector_unitaries.push_back(shift);
  }
  std::vector<Complex> phases;
  for (std::size_t i = 0; i < n; ++i) {
    phases.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / n));
  }
  scn.interference = ComplexMatrix::diagonal(phases);
  return scn;
}

SwitchScenario load_scenario(const std::string& source, std::uint64_t seed) {
  if (source == "explicit-realization") return explicit_realization();
  if (source == "no-marking") return no_marking();
  if (source == "full-marking") return full_marking();
  if (source == "generic") return random_scenario(seed);
  std::ifstream in(source);
  if (!in) {
    throw ConfigError(0, "scenario", "'" + source + "' is neither a built-in nor a readable file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

}  // namespace switchlab
