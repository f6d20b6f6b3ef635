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


#include "switchlab/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "switchlab/config.hpp"
#include "switchlab/errors.hpp"
#include "switchlab/sampling.hpp"

namespace switchlab {

namespace {

const std::vector<std::string> kAxisNames{"p", "theta", "phi", "overlap"};

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const { return x; }
    nlohmann::ordered_json operator()(std::int64_t x) const { return x; }
    nlohmann::ordered_json operator()(bool x) const { return x; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

// V_0 = I; every other path rotates d0 towards d0+1 so that <d_0|d_i> = overlap.
void set_detector_overlap(SwitchScenario& scn, double overlap) {
  const std::size_t d = scn.detector_dim();
  if (d < 2) throw std::invalid_argument("overlap axis needs detector_dim >= 2");
  if (!(overlap >= 0.0 && overlap <= 1.0)) {
    throw std::invalid_argument("overlap axis values must lie in [0, 1]");
  }
  const std::size_t a = scn.interaction.initial_detector;
  const std::size_t b = (a + 1) % d;
  const double r = std::sqrt(1.0 - overlap * overlap);
  ComplexMatrix rot = ComplexMatrix::identity(d);
  rot(a, a) = overlap;
  rot(b, b) = overlap;
  rot(a, b) = -r;
  rot(b, a) = r;
  for (std::size_t i = 0; i < scn.paths(); ++i) {
    scn.interaction.detector_unitaries[i] = i == 0 ? ComplexMatrix::identity(d) : rot;
  }
}

void apply_axis(SwitchScenario& scn, double& phi, const std::string& name, double v) {
  if (name == "p") {
    scn.p = v;
  } else if (name == "theta") {
    scn.theta = v;
  } else if (name == "phi") {
    phi = v;
  } else if (name == "overlap") {
    set_detector_overlap(scn, v);
  } else {
    throw std::invalid_argument("unknown axis '" + name + "'");
  }
}

struct Sample {
  SwitchScenario scenario;
  std::string fingerprint;
  std::uint64_t seed = 0;
  double phi = 0.0;
};

// Cycles through pure, mixed-order and symmetric post-selection scenarios.
Sample random_sample(std::uint64_t base, std::size_t k) {
  Sample s;
  s.seed = derive_seed(base, k);
  switch (k % 3) {
    case 0:
      s.scenario = random_scenario(s.seed);
      break;
    case 1:
      s.scenario = random_scenario(s.seed, SamplingOptions{.mixed_order = true});
      break;
    default: {
      SymmetricSample sym = random_symmetric_scenario(s.seed);
      s.scenario = std::move(sym.scenario);
      s.phi = sym.phi;
    }
  }
  s.fingerprint = fingerprint(s.scenario, s.seed);
  return s;
}

}  // namespace

double AxisSpec::value(std::size_t i) const {
  if (steps < 2) return start;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

AxisSpec parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4) throw std::invalid_argument("axis must be name:start:stop:steps");
  AxisSpec axis;
  axis.name = parts[0];
  if (std::find(kAxisNames.begin(), kAxisNames.end(), axis.name) == kAxisNames.end()) {
    throw std::invalid_argument("unknown axis '" + axis.name + "' (expected p, theta, phi, overlap)");
  }
  try {
    std::size_t used = 0;
    axis.start = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("start");
    axis.stop = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("stop");
    const long long steps = std::stoll(parts[3], &used);
    if (used != parts[3].size() || steps < 1) throw std::invalid_argument("steps");
    axis.steps = static_cast<std::size_t>(steps);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed axis '" + spec + "'");
  }
  if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
    throw std::invalid_argument("axis bounds must be finite");
  }
  return axis;
}

void write_table(const Table& table, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      os << (i ? "," : "") << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

Table verify_table(const RunConfig& cfg, bool* all_hold) {
  std::vector<RelationCheck> checks;
  const SwitchScenario base = load_scenario(cfg.scenario, cfg.seed);
  const std::string base_fp = fingerprint(base, cfg.seed);
  for (auto& c : verify_scenario(base, base_fp, cfg.seed, cfg.tol)) checks.push_back(std::move(c));
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const Sample s = random_sample(cfg.seed, k);
    for (auto& c : verify_scenario(s.scenario, s.fingerprint, s.seed, cfg.tol, s.phi)) {
      checks.push_back(std::move(c));
    }
  }
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) {
    return std::tie(a.name, a.context) < std::tie(b.name, b.context);
  });

  Table t;
  t.columns = {"name", "kind", "lhs", "rhs", "tol", "holds", "fingerprint"};
  bool ok = true;
  for (const auto& c : checks) {
    ok = ok && c.holds();
    t.rows.push_back({c.name, std::string(to_string(c.kind)), c.lhs, c.rhs, c.tol, c.holds(),
                      c.context});
  }
  if (all_hold) *all_hold = ok;
  return t;
}

Table run_table(const RunConfig& cfg) {
  const SwitchScenario scn = load_scenario(cfg.scenario, cfg.seed);
  const DualityReport ab = fixed_order_duality(scn, CausalOrder::AThenB);
  const DualityReport ba = fixed_order_duality(scn, CausalOrder::BThenA);
  const IcoReport ico = ico_quantities(scn);
  const DensityOperator rho = evolve_switch(scn);
  const DensityOperator rho_o = reduce(rho, Reduction::Order);
  const Complex kappa = order_coherence_element(rho_o);
  const double c_causal = causal_visibility(rho_o);
  Cell d_causal;
  if (scn.has_pure_order()) {
    d_causal = uqsd_two_pure(scn.p, branch_state(scn, CausalOrder::AThenB),
                             branch_state(scn, CausalOrder::BThenA))
                   .value;
  }
  const PostSelection ps = post_select(rho, 0.0);
  const EntropicCheck ent = check_entropic_bound(scn, cfg.tol);

  Table t;
  t.columns = {"fingerprint", "p",        "theta",    "c_ab",       "d_ab",       "c_ba",
               "d_ba",        "c_q",      "c_mix",    "d_bound",    "kappa_re",   "kappa_im",
               "c_causal",    "d_causal", "n_plus",   "n_minus",    "delta",      "h_order",
               "h_z",         "h_x",      "entropic_bound", "entropic_slack", "helstrom"};
  std::vector<Cell> row{fingerprint(scn, cfg.seed),
                        scn.p,
                        scn.theta,
                        ab.coherence,
                        ab.distinguishability,
                        ba.coherence,
                        ba.distinguishability,
                        ico.c_q,
                        ico.c_mix,
                        ico.d_bound,
                        kappa.real(),
                        kappa.imag(),
                        c_causal,
                        d_causal,
                        ps.plus.probability,
                        ps.minus.probability,
                        ent.report.delta,
                        ent.report.h_order,
                        ent.report.h_z,
                        ent.report.h_x,
                        ent.report.bound,
                        ent.report.slack,
                        causal_helstrom(scn)};
  if (cfg.alpha) {
    t.columns.push_back("nogo_margin");
    row.push_back(ico.c_q + ico.d_bound + *cfg.alpha * c_causal - 1.0);
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table sweep_table(const RunConfig& cfg) {
  if (cfg.axes.empty() || cfg.axes.size() > 2) {
    throw std::invalid_argument("sweep needs one or two --axis specifications");
  }
  if (cfg.axes.size() == 2 && cfg.axes[0].name == cfg.axes[1].name) {
    throw std::invalid_argument("sweep axes must be distinct");
  }
  const SwitchScenario base = load_scenario(cfg.scenario, cfg.seed);
  const AxisSpec& a0 = cfg.axes[0];
  const AxisSpec unit{"", 0.0, 0.0, 1};
  const AxisSpec& a1 = cfg.axes.size() == 2 ? cfg.axes[1] : unit;

  struct Row {
    std::vector<double> axes;
    std::string fingerprint;
    std::vector<Cell> cells;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < a0.steps; ++i) {
    for (std::size_t j = 0; j < a1.steps; ++j) {
      SwitchScenario scn = base;
      double phi = 0.0;
      Row r;
      apply_axis(scn, phi, a0.name, a0.value(i));
      r.axes.push_back(a0.value(i));
      if (cfg.axes.size() == 2) {
        apply_axis(scn, phi, a1.name, a1.value(j));
        r.axes.push_back(a1.value(j));
      }
      scn.validate();
      r.fingerprint = fingerprint(scn, cfg.seed);

      const IcoReport ico = ico_quantities(scn);
      const DensityOperator rho_o = reduce(evolve_switch(scn), Reduction::Order);
      const double c_causal = causal_visibility(rho_o);
      const EntropicCheck ent = check_entropic_bound(scn, cfg.tol);
      for (double v : r.axes) r.cells.push_back(v);
      r.cells.insert(r.cells.end(), {ico.c_q, ico.d_bound, c_causal,
                                     order_interference(rho_o, phi).plus, ent.report.delta,
                                     ent.report.h_order, ent.report.slack});
      if (cfg.alpha) r.cells.push_back(ico.c_q + ico.d_bound + *cfg.alpha * c_causal - 1.0);
      r.cells.push_back(r.fingerprint);
      rows.push_back(std::move(r));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.axes, a.fingerprint) < std::tie(b.axes, b.fingerprint);
  });

  Table t;
  for (const auto& axis : cfg.axes) t.columns.push_back(axis.name);
  t.columns.insert(t.columns.end(),
                   {"c_q", "d_bound", "c_causal", "p_plus", "delta", "h_order", "entropic_slack"});
  if (cfg.alpha) t.columns.push_back("nogo_margin");
  t.columns.push_back("fingerprint");
  for (auto& r : rows) t.rows.push_back(std::move(r.cells));
  return t;
}

Table region_table(const RunConfig& cfg, bool* inside) {
  const std::vector<RegionPoint> points =
      region_sweep(RegionGrid{cfg.grid, cfg.grid, cfg.family}, cfg.seed);
  Table t;
  t.columns = {"p", "overlap", "x", "y", "family", "fingerprint"};
  bool ok = true;
  for (const auto& pt : points) {
    ok = ok && pt.x >= -1e-9 && pt.x <= 1.0 + 1e-9 && pt.y >= -1e-9 && pt.y <= 1.0 + 1e-9;
    t.rows.push_back({pt.p, pt.overlap, pt.x, pt.y, std::string(to_string(cfg.family)),
                      pt.fingerprint});
  }
  if (inside) *inside = ok;
  return t;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum-switch complementarity laboratory", "switchlab"};
  RunConfig cfg;
  std::string command;
  std::string format = "csv";
  std::string family = "commuting";
  std::vector<std::string> axes;
  double alpha = 0.0;

  app.add_option("command", command, "verify | run | sweep | region")
      ->required()
      ->check(CLI::IsMember({"verify", "run", "sweep", "region"}));
  app.add_option("--scenario", cfg.scenario, "built-in name or scenario file")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "random scenarios checked by verify")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default: standard output)");
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--axis", axes, "name:start:stop:steps (p, theta, phi, overlap); at most 2")
      ->take_all();
  auto* alpha_opt = app.add_option("--alpha", alpha, "add the no-go margin column");
  app.add_option("--tol", cfg.tol, "relation tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--family", family, "region family: commuting | phase-mismatch")
      ->check(CLI::IsMember({"commuting", "phase-mismatch"}))
      ->capture_default_str();
  app.add_option("--grid", cfg.grid, "region grid points per axis")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.command = command == "verify"  ? Command::Verify
                : command == "run"   ? Command::Run
                : command == "sweep" ? Command::Sweep
                                     : Command::Region;
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  cfg.family = family == "commuting" ? RegionFamily::Commuting : RegionFamily::PhaseMismatch;
  if (alpha_opt->count() > 0) cfg.alpha = alpha;

  Table table;
  bool ok = true;
  try {
    if (axes.size() > 2) throw std::invalid_argument("at most two --axis options");
    for (const auto& a : axes) cfg.axes.push_back(parse_axis(a));
    switch (cfg.command) {
      case Command::Verify:
        table = verify_table(cfg, &ok);
        break;
      case Command::Run:
        table = run_table(cfg);
        break;
      case Command::Sweep:
        table = sweep_table(cfg);
        break;
      case Command::Region:
        table = region_table(cfg, &ok);
        break;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "argument error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out.empty()) {
    write_table(table, cfg.format, out);
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "cannot open '" << cfg.out << "' for writing\n";
      return 2;
    }
    write_table(table, cfg.format, file);
  }

  if (cfg.command == Command::Verify) {
    for (const auto& row : table.rows) {
      if (!std::get<bool>(row[5])) {
        err << "FAIL " << std::get<std::string>(row[0]) << ' ' << std::get<std::string>(row[6])
            << '\n';
      }
    }
  } else if (cfg.command == Command::Region && !ok) {
    err << "region point outside the unit square\n";
  }
  return ok ? 0 : 1;
}

}  // namespace switchlab
