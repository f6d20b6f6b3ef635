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

// Interferometer and quantum-switch construction.
//
// Tensor layout is always quanton (n paths) x detector (d levels) x order qubit,
// with the order qubit as the last factor. Order |0> runs the which-path
// interaction A before the interference operation B; order |1> runs B first.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "switchlab/linalg.hpp"

namespace switchlab {

/// Amplitudes sqrt(p_i) e^{i phi_i} of the quanton over n paths.
struct PathPreparation {
  std::vector<double> probabilities;
  std::vector<double> phases;

  static PathPreparation balanced(std::size_t paths);

  std::size_t size() const { return probabilities.size(); }
  void validate() const;
  Ket amplitudes() const;
};

/// Per-path detector unitaries V_i; path i marks the detector with V_i|d0>.
struct WhichPathInteraction {
  std::size_t detector_dim = 0;
  std::vector<ComplexMatrix> detector_unitaries;
  std::size_t initial_detector = 0;

  void validate(std::size_t paths) const;
  Ket initial_state() const;
  Ket detector_state(std::size_t path) const;
};

struct SwitchScenario {
  PathPreparation preparation;
  WhichPathInteraction interaction;
  /// Quanton-only interference unitary U_Q (n x n).
  ComplexMatrix interference;
  /// Weight of the A-then-B order.
  double p = 0.5;
  double theta = 0.0;
  /// Off-diagonal of the initial order qubit. Unset means the pure preparation
  /// sqrt(p)|0> + e^{i theta} sqrt(1-p)|1>.
  std::optional<Complex> order_offdiag;

  void validate() const;

  std::size_t paths() const { return preparation.size(); }
  std::size_t detector_dim() const { return interaction.detector_dim; }
  std::vector<std::size_t> qd_dims() const { return {paths(), detector_dim()}; }
  std::vector<std::size_t> total_dims() const { return {paths(), detector_dim(), 2}; }

  /// Initial order-qubit coherence kappa_0.
  Complex order_coherence() const;
  bool has_pure_order() const;
  ComplexMatrix order_state() const;
  /// Pure quanton-detector input sum_i sqrt(p_i) e^{i phi_i} |i>|d0>.
  Ket initial_state() const;
};

enum class CausalOrder { AThenB, BThenA };
enum class Reduction { QuantonDetector, Quanton, Order };

/// U_A = sum_i |i><i| (x) V_i.
ComplexMatrix build_which_path_unitary(const PathPreparation& prep,
                                       const WhichPathInteraction& interaction);
/// U_B = U_Q (x) I_D.
ComplexMatrix build_interference_unitary(const SwitchScenario& scn);
/// U_B U_A (x) |0><0| + U_A U_B (x) |1><1|.
ComplexMatrix build_switch_unitary(const ComplexMatrix& u_a, const ComplexMatrix& u_b);
ComplexMatrix build_switch_unitary(const SwitchScenario& scn);

/// rho_tot = U_sw (rho0 (x) rho_O) U_sw^dagger with dims {n, d, 2}.
DensityOperator evolve_switch(const SwitchScenario& scn);

/// Quanton-detector state after both operations in a definite order.
Ket branch_state(const SwitchScenario& scn, CausalOrder order);
DensityOperator fixed_order_state(const SwitchScenario& scn, CausalOrder order);

/// sqrt(p)|Psi_AB>|0> + e^{i theta} sqrt(1-p)|Psi_BA>|1>. Requires a pure order
/// preparation.
Ket pure_switch_state(const SwitchScenario& scn);

/// Traces rho_tot (dims {n, d, 2}) down to QD, Q or O.
DensityOperator reduce(const DensityOperator& rho_tot, Reduction target);

enum class Outcome { Plus, Minus };

struct PostSelectionResult {
  static constexpr double kDegenerateThreshold = 1e-12;

  Outcome outcome = Outcome::Plus;
  double probability = 0.0;
  /// <pm_phi| rho_tot |pm_phi> before normalization; always defined.
  ComplexMatrix unnormalized_qd;
  /// Unset when probability < kDegenerateThreshold.
  std::optional<DensityOperator> conditional_qd;
  std::optional<DensityOperator> conditional_q;
  std::optional<Complex> gamma;

  bool degenerate() const { return !conditional_qd.has_value(); }
};

struct PostSelection {
  PostSelectionResult plus;
  PostSelectionResult minus;
};

/// Projects the order qubit on |pm_phi> = (|0> pm e^{i phi}|1>)/sqrt(2).
PostSelection post_select(const DensityOperator& rho_tot, double phi);

/// |pm_phi> as a 2-vector.
std::array<Complex, 2> order_measurement_ket(Outcome outcome, double phi);

}  // namespace switchlab
