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


#include "switchlab/relations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "switchlab/config.hpp"
#include "switchlab/errors.hpp"
#include "switchlab/sampling.hpp"

namespace switchlab {

namespace {

// Matrix-identity checks run one decade tighter than relation checks.
constexpr double kStrictFactor = 0.1;

RelationCheck make_check(std::string name, RelationKind kind, double lhs, double rhs, double tol,
                         const std::string& context = {}) {
  return RelationCheck{std::move(name), kind, lhs, rhs, tol, context};
}

const char* order_suffix(CausalOrder order) {
  return order == CausalOrder::AThenB ? "AB" : "BA";
}

const char* outcome_name(Outcome o) { return o == Outcome::Plus ? "plus" : "minus"; }

double linspace(std::size_t i, std::size_t steps) {
  return steps < 2 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
}

Ket column(const ComplexMatrix& m, std::size_t c) {
  Ket v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

// sqrt(2) <i|Psi> as a detector vector.
Ket detector_vector(const Ket& branch, std::size_t path, std::size_t d) {
  Ket v(branch.begin() + static_cast<std::ptrdiff_t>(path * d),
        branch.begin() + static_cast<std::ptrdiff_t>((path + 1) * d));
  for (Complex& z : v) z *= std::sqrt(2.0);
  return v;
}

}  // namespace

const char* to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::AtMost:
      return "at_most";
    case RelationKind::AtLeast:
      return "at_least";
    case RelationKind::Equal:
      return "equal";
    case RelationKind::Exceeds:
      return "exceeds";
  }
  return "unknown";
}

bool RelationCheck::holds() const {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) return false;
  switch (kind) {
    case RelationKind::AtMost:
      return lhs <= rhs + tol;
    case RelationKind::AtLeast:
      return lhs >= rhs - tol;
    case RelationKind::Equal:
      return std::abs(lhs - rhs) <= tol;
    case RelationKind::Exceeds:
      return lhs > rhs;
  }
  return false;
}

DualityReport fixed_order_duality(const SwitchScenario& scn, CausalOrder order) {
  const Ket branch = branch_state(scn, order);
  const DetectorEnsemble ens = detector_ensemble(branch, scn.paths(), scn.detector_dim());
  const double d = path_distinguishability(ens.priors, ens.states);
  const DensityOperator rho_q = partial_trace(DensityOperator::pure(branch, scn.qd_dims()), {0});
  return DualityReport::make(l1_coherence(rho_q, scn.paths()), d);
}

RelationCheck check_fixed_order_duality(const SwitchScenario& scn, CausalOrder order, double tol) {
  const DualityReport r = fixed_order_duality(scn, order);
  return make_check(std::string("fixed_order_duality.") + order_suffix(order), RelationKind::Equal,
                    r.sum, 1.0, tol);
}

IcoReport ico_quantities(const SwitchScenario& scn) {
  const DensityOperator rho_q = reduce(evolve_switch(scn), Reduction::Quanton);
  const DualityReport ab = fixed_order_duality(scn, CausalOrder::AThenB);
  const DualityReport ba = fixed_order_duality(scn, CausalOrder::BThenA);
  IcoReport r;
  r.c_q = l1_coherence(rho_q, scn.paths());
  r.c_mix = scn.p * ab.coherence + (1.0 - scn.p) * ba.coherence;
  r.d_bound = scn.p * ab.distinguishability + (1.0 - scn.p) * ba.distinguishability;
  return r;
}

std::vector<RelationCheck> check_ico_duality(const SwitchScenario& scn, double tol) {
  const IcoReport r = ico_quantities(scn);
  return {make_check("ico.coherence_convexity", RelationKind::AtMost, r.c_q, r.c_mix, tol),
          make_check("ico.duality_bound", RelationKind::AtMost, r.c_q + r.d_bound, 1.0, tol)};
}

PostSelectionOverlaps post_selection_overlaps(const SwitchScenario& scn, double phi) {
  if (scn.paths() != 2) throw PreconditionError("post-selected closed form needs n = 2 paths");
  const std::size_t d = scn.detector_dim();
  const Ket ab = branch_state(scn, CausalOrder::AThenB);
  const Ket ba = branch_state(scn, CausalOrder::BThenA);
  const Ket dab[2] = {detector_vector(ab, 0, d), detector_vector(ab, 1, d)};
  const Ket dba[2] = {detector_vector(ba, 0, d), detector_vector(ba, 1, d)};
  PostSelectionOverlaps o;
  o.gamma_ab = inner(dab[1], dab[0]);
  o.gamma_ba = inner(dba[1], dba[0]);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) o.big_gamma[i][j] = inner(dab[i], dba[j]);
    o.detector_norms[i][0] = norm(dab[i]);
    o.detector_norms[i][1] = norm(dba[i]);
  }
  o.cross = std::conj(scn.order_coherence()) * std::polar(1.0, -phi);
  return o;
}

PostSelectedClosedForm post_selected_closed_form(const SwitchScenario& scn, double phi) {
  const PostSelectionOverlaps o = post_selection_overlaps(scn, phi);
  const Complex c = o.cross;
  PostSelectedClosedForm f;
  f.c_mix = scn.p * o.gamma_ab + (1.0 - scn.p) * o.gamma_ba;
  const double interference = (c * (o.big_gamma[0][0] + o.big_gamma[1][1])).real();
  f.n_plus = 0.5 * (1.0 + interference);
  f.n_minus = 0.5 * (1.0 - interference);
  const Complex cross_term = c * o.big_gamma[1][0] + std::conj(c * o.big_gamma[0][1]);
  if (f.n_plus >= PostSelectionResult::kDegenerateThreshold) {
    f.gamma_plus = (f.c_mix + cross_term) / (4.0 * f.n_plus);
  }
  if (f.n_minus >= PostSelectionResult::kDegenerateThreshold) {
    f.gamma_minus = (f.c_mix - cross_term) / (4.0 * f.n_minus);
  }
  return f;
}

void require_symmetric_post_selection(const SwitchScenario& scn, double phi, double tol) {
  if (scn.paths() != 2) throw PreconditionError("symmetric post-selection needs n = 2 paths");
  for (double q : scn.preparation.probabilities) {
    if (std::abs(q - 0.5) > tol) {
      throw PreconditionError("symmetric post-selection needs equal path probabilities");
    }
  }
  const PostSelectionOverlaps o = post_selection_overlaps(scn, phi);
  for (int i = 0; i < 2; ++i) {
    for (int x = 0; x < 2; ++x) {
      if (std::abs(o.detector_norms[i][x] - 1.0) > tol) {
        throw PreconditionError("symmetric post-selection needs ||d_" + std::to_string(i) + "^" +
                                (x == 0 ? "AB" : "BA") + "|| = 1");
      }
    }
  }
  const double lhs = (o.cross * o.big_gamma[0][0]).real();
  const double rhs = (o.cross * o.big_gamma[1][1]).real();
  if (std::abs(lhs - rhs) > tol) {
    throw PreconditionError("symmetric post-selection needs Re(c Gamma_00) = Re(c Gamma_11)");
  }
}

std::vector<RelationCheck> check_post_selected_duality(const SwitchScenario& scn, double phi,
                                                       double tol) {
  require_symmetric_post_selection(scn, phi, tol);
  const PostSelection ps = post_select(evolve_switch(scn), phi);
  const PostSelectedClosedForm cf = post_selected_closed_form(scn, phi);

  std::vector<RelationCheck> out;
  for (const PostSelectionResult* res : {&ps.plus, &ps.minus}) {
    const std::string prefix = std::string("post_selected.") + outcome_name(res->outcome);
    if (res->degenerate()) {
      out.push_back(make_check(prefix + ".degenerate", RelationKind::AtMost, res->probability,
                               PostSelectionResult::kDegenerateThreshold, 0.0));
      continue;
    }
    const Complex gamma = *res->gamma;
    const double c = 2.0 * std::abs(gamma);
    // The pure conditional state gives D from its own detector ensemble;
    // for a mixed one D^(pm) is 1 - 2|gamma| by definition.
    double d = 1.0 - c;
    const DensityOperator& cond = *res->conditional_qd;
    if (cond.purity() > 1.0 - 1e-10) {
      const HermitianEigen eig = hermitian_eig(cond.matrix());
      const Ket top = column(eig.eigenvectors, cond.dim() - 1);
      const DetectorEnsemble ens = detector_ensemble(top, 2, scn.detector_dim());
      d = path_distinguishability(ens.priors, ens.states);
    }
    const Complex expected = res->outcome == Outcome::Plus ? cf.gamma_plus : cf.gamma_minus;
    out.push_back(make_check(prefix + ".duality", RelationKind::Equal, c + d, 1.0, tol));
    out.push_back(make_check(prefix + ".gamma", RelationKind::AtMost, std::abs(gamma - expected),
                             0.0, tol));
  }
  return out;
}

NoGoResult nogo_counterexample(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("nogo_counterexample needs 0 < p < 1 (a superposition of orders)");
  }
  const SwitchScenario scn = explicit_realization(p);
  const IcoReport ico = ico_quantities(scn);
  NoGoResult r;
  r.p = p;
  r.c_q = ico.c_q;
  r.d_bound = ico.d_bound;
  r.c_causal = causal_visibility(reduce(evolve_switch(scn), Reduction::Order));
  r.c_causal_closed_form = 2.0 * std::sqrt(p * (1.0 - p));
  return r;
}

const char* to_string(RegionFamily family) {
  return family == RegionFamily::Commuting ? "commuting" : "phase-mismatch";
}

SwitchScenario region_scenario(RegionFamily family, double p, double overlap) {
  if (!(overlap >= 0.0 && overlap <= 1.0)) {
    throw std::invalid_argument("region_scenario: overlap outside [0, 1]");
  }
  SwitchScenario scn;
  scn.preparation = PathPreparation::balanced(2);
  scn.interaction.detector_dim = 2;
  scn.p = p;
  if (family == RegionFamily::Commuting) {
    const double r = std::sqrt(1.0 - overlap * overlap);
    scn.interaction.detector_unitaries = {ComplexMatrix::identity(2),
                                          ComplexMatrix{{overlap, -r}, {r, overlap}}};
    scn.interference = ComplexMatrix::identity(2);
  } else {
    const Complex e = std::polar(1.0, std::acos(overlap));
    scn.interaction.detector_unitaries = {ComplexMatrix::identity(2),
                                          ComplexMatrix{{e, 0.0}, {0.0, e}}};
    scn.interference = ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
  }
  return scn;
}

std::vector<RegionPoint> region_sweep(const RegionGrid& grid, std::uint64_t seed) {
  if (grid.p_steps == 0 || grid.overlap_steps == 0) {
    throw std::invalid_argument("region_sweep: grid needs at least one step per axis");
  }
  std::vector<RegionPoint> points;
  points.reserve(grid.p_steps * grid.overlap_steps);
  for (std::size_t i = 0; i < grid.p_steps; ++i) {
    for (std::size_t j = 0; j < grid.overlap_steps; ++j) {
      RegionPoint pt;
      pt.p = linspace(i, grid.p_steps);
      pt.overlap = linspace(j, grid.overlap_steps);
      const SwitchScenario scn = region_scenario(grid.family, pt.p, pt.overlap);
      const IcoReport ico = ico_quantities(scn);
      pt.x = ico.c_q + ico.d_bound;
      pt.y = causal_visibility(reduce(evolve_switch(scn), Reduction::Order));
      pt.fingerprint = fingerprint(scn, seed);
      points.push_back(std::move(pt));
    }
  }
  return points;
}

EntropicCheck check_entropic_bound(const SwitchScenario& scn, double tol) {
  const DensityOperator rho = evolve_switch(scn);
  const std::vector<double> spectrum = hermitian_eig(rho.matrix()).eigenvalues;
  const DensityOperator rho_o = reduce(rho, Reduction::Order);

  EntropicCheck out;
  out.pure = spectrum.size() < 2 || spectrum[spectrum.size() - 2] <= 1e-10;
  EntropicReport& r = out.report;
  r.h_z = conditional_entropy_after_measurement(rho, OrderBasis::Z);
  r.h_x = conditional_entropy_after_measurement(rho, OrderBasis::X);
  r.h_order = von_neumann_entropy(rho_o);
  r.delta = delta_parameter(rho_o(0, 0).real(), causal_visibility(rho_o));
  const double h_cond = conditional_order_entropy(rho);
  r.bound = out.pure ? 1.0 - r.h_order : 1.0 + h_cond;
  r.slack = r.h_z + r.h_x - r.bound;

  out.checks.push_back(
      make_check("entropic.bound", RelationKind::AtLeast, r.h_z + r.h_x, r.bound, tol));
  out.checks.push_back(make_check("entropic.order_entropy", RelationKind::Equal, r.h_order,
                                  binary_entropy(0.5 * (1.0 + r.delta)), tol));
  if (out.pure) {
    out.checks.push_back(
        make_check("entropic.pure_conditional", RelationKind::Equal, h_cond, -r.h_order, tol));
  }
  return out;
}

double causal_helstrom(const SwitchScenario& scn) {
  return helstrom_guess(DiscriminationProblem{scn.p, fixed_order_state(scn, CausalOrder::AThenB),
                                              fixed_order_state(scn, CausalOrder::BThenA)});
}

std::vector<RelationCheck> check_overlap_lemma(const SwitchScenario& scn, const ComplexMatrix& w,
                                               double tol) {
  const std::size_t d = scn.detector_dim();
  if (w.rows() != d || w.cols() != d) {
    throw std::invalid_argument("check_overlap_lemma: W must act on the detector factor");
  }
  if (!w.is_unitary(1e-10)) throw std::invalid_argument("check_overlap_lemma: W is not unitary");

  const DensityOperator ab = fixed_order_state(scn, CausalOrder::AThenB);
  const DensityOperator ba = fixed_order_state(scn, CausalOrder::BThenA);
  const ComplexMatrix lifted = kron(ComplexMatrix::identity(scn.paths()), w);
  auto conjugate = [&](const DensityOperator& rho) {
    ComplexMatrix m = lifted * rho.matrix() * lifted.adjoint();
    m = (m + m.adjoint()) * Complex(0.5);
    return DensityOperator(std::move(m), rho.dims());
  };
  const double before = helstrom_guess(DiscriminationProblem{scn.p, ab, ba});
  const double after = helstrom_guess(DiscriminationProblem{scn.p, conjugate(ab), conjugate(ba)});

  const DensityOperator dephased = dephase_order(evolve_switch(scn), OrderBasis::Z);
  const ComplexMatrix e0{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix e1{{0.0, 0.0}, {0.0, 1.0}};
  const ComplexMatrix ensemble = kron(ab.matrix(), e0) * Complex(scn.p) +
                                 kron(ba.matrix(), e1) * Complex(1.0 - scn.p);

  return {make_check("overlap_lemma.helstrom", RelationKind::Equal, after, before, tol),
          make_check("overlap_lemma.cq_ensemble", RelationKind::AtMost,
                     max_abs_diff(dephased.matrix(), ensemble), 0.0, tol)};
}

std::vector<RelationCheck> verify_scenario(const SwitchScenario& scn,
                                           const std::string& fingerprint, std::uint64_t seed,
                                           double tol, double phi) {
  scn.validate();
  const double strict = kStrictFactor * tol;
  std::vector<RelationCheck> rows;
  auto add = [&](RelationCheck c) {
    c.context = fingerprint;
    rows.push_back(std::move(c));
  };
  auto add_all = [&](std::vector<RelationCheck> cs) {
    for (auto& c : cs) add(std::move(c));
  };

  add(check_fixed_order_duality(scn, CausalOrder::AThenB, tol));
  add(check_fixed_order_duality(scn, CausalOrder::BThenA, tol));
  add_all(check_ico_duality(scn, tol));

  const ComplexMatrix u_a = build_which_path_unitary(scn.preparation, scn.interaction);
  const ComplexMatrix u_b = build_interference_unitary(scn);
  const ComplexMatrix u_sw = build_switch_unitary(u_a, u_b);
  add(make_check("switch.unitarity", RelationKind::AtMost,
                 max_abs_diff(u_sw.adjoint() * u_sw, ComplexMatrix::identity(u_sw.rows())), 0.0,
                 strict));

  const DensityOperator rho = evolve_switch(scn);
  const DensityOperator ab = fixed_order_state(scn, CausalOrder::AThenB);
  const DensityOperator ba = fixed_order_state(scn, CausalOrder::BThenA);
  const ComplexMatrix mix =
      ab.matrix() * Complex(scn.p) + ba.matrix() * Complex(1.0 - scn.p);
  const DensityOperator rho_qd = reduce(rho, Reduction::QuantonDetector);
  add(make_check("switch.order_trace", RelationKind::AtMost, max_abs_diff(rho_qd.matrix(), mix),
                 0.0, strict));
  if (commutator(u_a, u_b).max_abs() < 1e-12) {
    add(make_check("switch.commuting_orders", RelationKind::AtMost,
                   trace_norm(ab.matrix() - ba.matrix()), 0.0, tol));
  }

  const DensityOperator rho_o = reduce(rho, Reduction::Order);
  const Complex kappa = order_coherence_element(rho_o);
  const Ket psi_ab = branch_state(scn, CausalOrder::AThenB);
  const Ket psi_ba = branch_state(scn, CausalOrder::BThenA);
  const Complex overlap = inner(psi_ab, psi_ba);
  add(make_check("order.positivity", RelationKind::AtMost, std::abs(kappa),
                 std::sqrt(scn.p * (1.0 - scn.p)), 1e-12));
  add(make_check("causal.kappa_form", RelationKind::AtMost,
                 std::abs(kappa - scn.order_coherence() * std::conj(overlap)), 0.0, tol));
  const double c_causal = causal_visibility(rho_o);
  add(make_check("causal.visibility", RelationKind::Equal, causal_visibility_scan(rho_o),
                 c_causal, tol));
  if (scn.has_pure_order()) {
    add(make_check("causal.coherence_consistency", RelationKind::Equal,
                   causal_coherence(scn.p, std::min(1.0, std::abs(overlap))), c_causal, tol));
    const UqsdResult uqsd = uqsd_two_pure(scn.p, psi_ab, psi_ba);
    const DualityReport causal = causal_duality(scn.p, psi_ab, psi_ba);
    add(make_check("causal.duality",
                   uqsd.in_symmetric_regime ? RelationKind::Equal : RelationKind::AtMost,
                   causal.sum, 1.0, strict));
  }

  const PostSelection ps = post_select(rho, phi);
  add(make_check("post_select.normalization", RelationKind::Equal,
                 ps.plus.probability + ps.minus.probability, 1.0, strict));
  add(make_check("post_select.average", RelationKind::AtMost,
                 max_abs_diff(ps.plus.unnormalized_qd + ps.minus.unnormalized_qd, rho_qd.matrix()),
                 0.0, strict));
  add(make_check("post_select.probability_form", RelationKind::Equal, ps.plus.probability,
                 0.5 * (1.0 + 2.0 * std::abs(kappa) * std::cos(phi + std::arg(kappa))), tol));
  bool symmetric = true;
  try {
    require_symmetric_post_selection(scn, phi, tol);
  } catch (const PreconditionError&) {
    symmetric = false;
  }
  if (symmetric) add_all(check_post_selected_duality(scn, phi, tol));

  add_all(check_entropic_bound(scn, tol).checks);

  Rng rng(derive_seed(seed, 0x0d));
  add_all(check_overlap_lemma(scn, random_unitary(rng, scn.detector_dim()), 0.1 * tol));

  const double guess = helstrom_guess(DiscriminationProblem{scn.p, ab, ba});
  add(make_check("helstrom.prior_floor", RelationKind::AtLeast, guess,
                 std::max(scn.p, 1.0 - scn.p), tol));
  return rows;
}

}  // namespace switchlab
