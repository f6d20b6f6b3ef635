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
#include <utility>
#include <vector>

#include "switchlab/discrimination.hpp"
#include "switchlab/measures.hpp"
#include "switchlab/model.hpp"

namespace switchlab {

inline constexpr double kRelationTolerance = 1e-9;

enum class RelationKind {
  AtMost,   // lhs <= rhs + tol
  AtLeast,  // lhs >= rhs - tol
  Equal,    // |lhs - rhs| <= tol
  Exceeds,  // lhs > rhs
};

const char* to_string(RelationKind kind);

struct RelationCheck {
  std::string name;
  RelationKind kind = RelationKind::Equal;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = kRelationTolerance;
  std::string context;

  bool holds() const;
};

/// C and D_Q of one definite order, from the path-basis decomposition of its
/// pure branch state.
DualityReport fixed_order_duality(const SwitchScenario& scn, CausalOrder order);

RelationCheck check_fixed_order_duality(const SwitchScenario& scn, CausalOrder order,
                                        double tol = kRelationTolerance);

/// Reduced-state quantities of the switch. d_bound is the convex upper bound
/// p D^{AB} + (1-p) D^{BA}, reported in place of the mixed-ensemble optimum.
struct IcoReport {
  double c_q = 0.0;
  double c_mix = 0.0;
  double d_bound = 0.0;
};
IcoReport ico_quantities(const SwitchScenario& scn);

/// coherence convexity and the convex-bound duality, in that order.
std::vector<RelationCheck> check_ico_duality(const SwitchScenario& scn,
                                             double tol = kRelationTolerance);

/// Overlaps entering the post-selected closed form, with d_i^X = sqrt(2) <i|Psi_X>.
struct PostSelectionOverlaps {
  Complex gamma_ab;  // <d_1^AB | d_0^AB>
  Complex gamma_ba;  // <d_1^BA | d_0^BA>
  Complex big_gamma[2][2];  // Gamma_ij = <d_i^AB | d_j^BA>
  Complex cross;  // conj(kappa0) e^{-i phi}
  double detector_norms[2][2];  // ||d_i^X||, X = AB, BA
};
PostSelectionOverlaps post_selection_overlaps(const SwitchScenario& scn, double phi);

struct PostSelectedClosedForm {
  double n_plus = 0.0;
  double n_minus = 0.0;
  Complex c_mix;
  Complex gamma_plus;
  Complex gamma_minus;
};
/// N_pm = 1/2 [1 pm Re(c (Gamma_00 + Gamma_11))],
/// gamma_pm = [C_mix pm (c Gamma_10 + conj(c Gamma_01))] / (4 N_pm).
PostSelectedClosedForm post_selected_closed_form(const SwitchScenario& scn, double phi);

/// Throws PreconditionError unless n = 2, the paths are balanced, every d_i^X
/// is normalized and Re(c Gamma_00) = Re(c Gamma_11).
void require_symmetric_post_selection(const SwitchScenario& scn, double phi,
                                      double tol = kRelationTolerance);

/// Per outcome: duality sum, and gamma against the closed form. A degenerate
/// outcome yields a single row asserting its probability is below threshold.
std::vector<RelationCheck> check_post_selected_duality(const SwitchScenario& scn, double phi,
                                                       double tol = kRelationTolerance);

struct NoGoResult {
  double p = 0.5;
  double c_q = 0.0;
  double d_bound = 0.0;
  double c_causal = 0.0;
  /// 2 sqrt(p(1-p)), the value the matrix pipeline must reproduce.
  double c_causal_closed_form = 0.0;

  double violation_margin(double alpha) const { return c_q + d_bound + alpha * c_causal - 1.0; }
};

/// Runs the controlled-flip realization through evolve -> reduce -> measures.
NoGoResult nogo_counterexample(double p);

enum class RegionFamily {
  /// Detector rotation of tunable overlap, U_Q = I.
  Commuting,
  /// Detector phase e^{i chi} on path 1 and a path swap, cos chi = overlap.
  PhaseMismatch,
};

const char* to_string(RegionFamily family);

struct RegionGrid {
  std::size_t p_steps = 21;
  std::size_t overlap_steps = 21;
  RegionFamily family = RegionFamily::Commuting;
};

struct RegionPoint {
  double p = 0.0;
  double overlap = 0.0;
  double x = 0.0;  // C_q + D_bound
  double y = 0.0;  // C_causal
  std::string fingerprint;
};

SwitchScenario region_scenario(RegionFamily family, double p, double overlap);
std::vector<RegionPoint> region_sweep(const RegionGrid& grid, std::uint64_t seed = 0);

struct EntropicCheck {
  EntropicReport report;
  bool pure = true;
  std::vector<RelationCheck> checks;
};

/// Bound 1 - H(O) for a rank-1 global state, 1 + H(O|QD) otherwise.
EntropicCheck check_entropic_bound(const SwitchScenario& scn, double tol = kRelationTolerance);

/// Helstrom invariance under I_Q (x) W, and the classical-quantum form of the
/// Z_O-dephased global state.
std::vector<RelationCheck> check_overlap_lemma(const SwitchScenario& scn, const ComplexMatrix& w,
                                               double tol = 1e-10);

/// Helstrom guess probability for {p, rho_AB; 1-p, rho_BA}.
double causal_helstrom(const SwitchScenario& scn);

/// Every relation that applies to the scenario, tagged with the fingerprint.
/// Post-selected rows appear only when the symmetric conditions hold at phi.
std::vector<RelationCheck> verify_scenario(const SwitchScenario& scn,
                                           const std::string& fingerprint, std::uint64_t seed,
                                           double tol = kRelationTolerance, double phi = 0.0);

}  // namespace switchlab
