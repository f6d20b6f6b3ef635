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

#include <cstddef>
#include <span>
#include <vector>

#include "switchlab/linalg.hpp"

namespace switchlab {

/// Wave/particle pair at one level of description.
struct DualityReport {
  double coherence = 0.0;
  double distinguishability = 0.0;
  double sum = 0.0;
  bool saturated = false;

  static DualityReport make(double coherence, double distinguishability, double tol = 1e-9);
};

/// Conditional entropies (bits) of the order-qubit measurements given QD.
struct EntropicReport {
  double h_z = 0.0;
  double h_x = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  double delta = 0.0;
  double h_order = 0.0;
};

/// Normalized l1 coherence of an n x n state in its own basis.
double l1_coherence(const DensityOperator& rho, std::size_t n);
double l1_coherence(const ComplexMatrix& rho, std::size_t n);

/// Path-basis decomposition of a pure quanton-detector vector:
/// |Phi> = sum_k sqrt(prior_k) |k>|state_k>. Paths carrying no weight get
/// prior 0 and the initial basis vector as a placeholder state.
struct DetectorEnsemble {
  std::vector<double> priors;
  std::vector<Ket> states;
};
DetectorEnsemble detector_ensemble(std::span<const Complex> qd_state, std::size_t paths,
                                   std::size_t detector_dim);

/// 1 - (1/(n-1)) sum_{i != j} sqrt(p_i p_j) |<d_j|d_i>|.
double path_distinguishability(std::span<const double> priors, std::span<const Ket> states);

/// 2 sqrt(p(1-p)) |overlap|.
double causal_coherence(double p, Complex overlap);

struct OrderOutcomes {
  double plus = 0.0;
  double minus = 0.0;
};

/// kappa = rho_O(0, 1).
Complex order_coherence_element(const DensityOperator& rho_o);

/// <pm_phi| rho_O |pm_phi>.
OrderOutcomes order_interference(const DensityOperator& rho_o, double phi);

/// 2|kappa|.
double causal_visibility(const DensityOperator& rho_o);

/// (Pmax - Pmin)/(Pmax + Pmin) of P_+(phi), located on a uniform grid over
/// [0, 2 pi) and polished by golden-section search around each grid extreme.
double causal_visibility_scan(const DensityOperator& rho_o, std::size_t points = 720);

/// h2(x) in bits. Throws std::invalid_argument outside [0, 1] by more than 1e-12.
double binary_entropy(double x);

/// sqrt((2p-1)^2 + c_causal^2). Throws InconsistencyError above 1 + 1e-10.
double delta_parameter(double p, double c_causal);

enum class OrderBasis { Z, X };

/// Dephases the order qubit (last factor of dims {n, d, 2}) in the chosen basis.
DensityOperator dephase_order(const DensityOperator& rho_qdo, OrderBasis basis);

/// H(rho^M) - H(rho_QD) for M in {Z_O, X_O}.
double conditional_entropy_after_measurement(const DensityOperator& rho_qdo, OrderBasis basis);

/// H(O|QD) = H(rho) - H(rho_QD).
double conditional_order_entropy(const DensityOperator& rho_qdo);

}  // namespace switchlab
