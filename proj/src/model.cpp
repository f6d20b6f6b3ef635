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

#include "switchlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "switchlab/errors.hpp"

namespace switchlab {

namespace {

constexpr double kUnitarityTolerance = 1e-10;
constexpr double kProbabilityTolerance = 1e-12;

void require_total_dims(const DensityOperator& rho) {
  if (rho.dims().size() != 3 || rho.dims()[2] != 2) {
    throw std::invalid_argument("expected a switch state with dims {n, d, 2}");
  }
}

}  // namespace

PathPreparation PathPreparation::balanced(std::size_t paths) {
  PathPreparation prep;
  prep.probabilities.assign(paths, 1.0 / static_cast<double>(paths));
  prep.phases.assign(paths, 0.0);
  return prep;
}

void PathPreparation::validate() const {
  if (probabilities.size() < 2) {
    throw ValidationError("probabilities", "at least two paths are required");
  }
  if (phases.size() != probabilities.size()) {
    throw ValidationError("phases", "length must equal the number of paths");
  }
  double sum = 0.0;
  for (double q : probabilities) {
    if (!std::isfinite(q) || q < 0.0) {
      throw ValidationError("probabilities", "entries must be finite and >= 0");
    }
    sum += q;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    throw ValidationError("probabilities", "must sum to 1 within 1e-12");
  }
  for (double phi : phases) {
    if (!std::isfinite(phi)) throw ValidationError("phases", "entries must be finite");
  }
}

Ket PathPreparation::amplitudes() const {
  Ket amp(size());
  for (std::size_t i = 0; i < size(); ++i) {
    amp[i] = std::polar(std::sqrt(probabilities[i]), phases[i]);
  }
  return amp;
}

void WhichPathInteraction::validate(std::size_t paths) const {
  if (detector_dim == 0) throw ValidationError("detector_dim", "must be positive");
  if (initial_detector >= detector_dim) {
    throw ValidationError("initial_detector", "must be below detector_dim");
  }
  if (detector_unitaries.size() != paths) {
    throw ValidationError("detector_unitary", "one unitary per path is required");
  }
  for (std::size_t i = 0; i < paths; ++i) {
    const auto& v = detector_unitaries[i];
    const std::string field = "detector_unitary." + std::to_string(i);
    if (v.rows() != detector_dim || v.cols() != detector_dim) {
      throw ValidationError(field, "must be detector_dim x detector_dim");
    }
    if (!v.is_unitary(kUnitarityTolerance)) {
      throw ValidationError(field, "must be unitary within 1e-10");
    }
  }
}

Ket WhichPathInteraction::initial_state() const {
  return basis_ket(detector_dim, initial_detector);
}

Ket WhichPathInteraction::detector_state(std::size_t path) const {
  return detector_unitaries.at(path) * initial_state();
}

void SwitchScenario::validate() const {
  preparation.validate();
  interaction.validate(paths());
  if (interference.rows() != paths() || interference.cols() != paths()) {
    throw ValidationError("interference", "must be n x n for n paths");
  }
  if (!interference.is_unitary(kUnitarityTolerance)) {
    throw ValidationError("interference", "must be unitary within 1e-10");
  }
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw ValidationError("p", "must lie in [0, 1]");
  }
  if (!std::isfinite(theta)) throw ValidationError("theta", "must be finite");
  if (order_offdiag) {
    const Complex k = *order_offdiag;
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) {
      throw ValidationError("order_offdiag", "must be finite");
    }
    if (std::norm(k) > p * (1.0 - p) + kProbabilityTolerance) {
      throw ValidationError("order_offdiag", "|kappa0|^2 must not exceed p(1-p)");
    }
  }
}

Complex SwitchScenario::order_coherence() const {
  if (order_offdiag) return *order_offdiag;
  return std::polar(std::sqrt(p * (1.0 - p)), -theta);
}

bool SwitchScenario::has_pure_order() const {
  if (!order_offdiag) return true;
  return std::abs(std::norm(*order_offdiag) - p * (1.0 - p)) <= kProbabilityTolerance;
}

ComplexMatrix SwitchScenario::order_state() const {
  const Complex k = order_coherence();
  return ComplexMatrix{{p, k}, {std::conj(k), 1.0 - p}};
}

Ket SwitchScenario::initial_state() const {
  return kron(preparation.amplitudes(), interaction.initial_state());
}

ComplexMatrix build_which_path_unitary(const PathPreparation& prep,
                                       const WhichPathInteraction& interaction) {
  const std::size_t n = prep.size();
  const std::size_t d = interaction.detector_dim;
  if (interaction.detector_unitaries.size() != n) {
    throw std::invalid_argument("which-path interaction needs one detector unitary per path");
  }
  ComplexMatrix u(n * d, n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = interaction.detector_unitaries[i];
    if (v.rows() != d || v.cols() != d) {
      throw std::invalid_argument("detector unitary has the wrong dimension");
    }
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) u(i * d + r, i * d + c) = v(r, c);
    }
  }
  return u;
}

ComplexMatrix build_interference_unitary(const SwitchScenario& scn) {
  return kron(scn.interference, ComplexMatrix::identity(scn.detector_dim()));
}

ComplexMatrix build_switch_unitary(const ComplexMatrix& u_a, const ComplexMatrix& u_b) {
  if (!u_a.is_square() || u_a.rows() != u_b.rows() || !u_b.is_square()) {
    throw std::invalid_argument("switch operations must be square and of equal dimension");
  }
  if (!u_a.is_unitary(kUnitarityTolerance) || !u_b.is_unitary(kUnitarityTolerance)) {
    throw std::invalid_argument("switch operations must be unitary within 1e-10");
  }
  const ComplexMatrix zero = ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix one = ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}};
  return kron(u_b * u_a, zero) + kron(u_a * u_b, one);
}

ComplexMatrix build_switch_unitary(const SwitchScenario& scn) {
  return build_switch_unitary(build_which_path_unitary(scn.preparation, scn.interaction),
                              build_interference_unitary(scn));
}

DensityOperator evolve_switch(const SwitchScenario& scn) {
  scn.validate();
  const ComplexMatrix u_sw = build_switch_unitary(scn);
  const ComplexMatrix rho0 = ComplexMatrix::projector(scn.initial_state());
  const ComplexMatrix rho = u_sw * kron(rho0, scn.order_state()) * u_sw.adjoint();
  return DensityOperator(rho, scn.total_dims());
}

Ket branch_state(const SwitchScenario& scn, CausalOrder order) {
  scn.validate();
  const ComplexMatrix u_a = build_which_path_unitary(scn.preparation, scn.interaction);
  const ComplexMatrix u_b = build_interference_unitary(scn);
  const Ket psi0 = scn.initial_state();
  return order == CausalOrder::AThenB ? u_b * (u_a * psi0) : u_a * (u_b * psi0);
}

DensityOperator fixed_order_state(const SwitchScenario& scn, CausalOrder order) {
  return DensityOperator::pure(branch_state(scn, order), scn.qd_dims());
}

Ket pure_switch_state(const SwitchScenario& scn) {
  if (!scn.has_pure_order()) {
    throw std::invalid_argument("pure_switch_state requires a pure order-qubit preparation");
  }
  const Ket ab = branch_state(scn, CausalOrder::AThenB);
  const Ket ba = branch_state(scn, CausalOrder::BThenA);
  // Amplitudes a0 = sqrt(p), a1 chosen so that a0 conj(a1) = kappa0.
  const Complex a0 = std::sqrt(scn.p);
  const Complex a1 = scn.p > 0.0 ? std::conj(scn.order_coherence()) / std::sqrt(scn.p)
                                 : std::polar(1.0, scn.theta);
  Ket out(ab.size() * 2);
  for (std::size_t k = 0; k < ab.size(); ++k) {
    out[2 * k] = a0 * ab[k];
    out[2 * k + 1] = a1 * ba[k];
  }
  return out;
}

DensityOperator reduce(const DensityOperator& rho_tot, Reduction target) {
  require_total_dims(rho_tot);
  switch (target) {
    case Reduction::QuantonDetector:
      return partial_trace(rho_tot, {0, 1});
    case Reduction::Quanton:
      return partial_trace(rho_tot, {0});
    case Reduction::Order:
      return partial_trace(rho_tot, {2});
  }
  throw std::invalid_argument("unknown reduction target");
}

std::array<Complex, 2> order_measurement_ket(Outcome outcome, double phi) {
  const double sign = outcome == Outcome::Plus ? 1.0 : -1.0;
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex(r), sign * std::polar(r, phi)};
}

PostSelection post_select(const DensityOperator& rho_tot, double phi) {
  require_total_dims(rho_tot);
  const std::size_t qd = rho_tot.dims()[0] * rho_tot.dims()[1];
  const std::vector<std::size_t> qd_dims{rho_tot.dims()[0], rho_tot.dims()[1]};

  auto project = [&](Outcome outcome) {
    const auto c = order_measurement_ket(outcome, phi);
    PostSelectionResult res;
    res.outcome = outcome;
    res.unnormalized_qd = ComplexMatrix(qd, qd);
    for (std::size_t x = 0; x < qd; ++x) {
      for (std::size_t y = 0; y < qd; ++y) {
        Complex acc = 0.0;
        for (std::size_t a = 0; a < 2; ++a) {
          for (std::size_t b = 0; b < 2; ++b) {
            acc += std::conj(c[a]) * rho_tot(2 * x + a, 2 * y + b) * c[b];
          }
        }
        res.unnormalized_qd(x, y) = acc;
      }
    }
    res.probability = std::max(0.0, res.unnormalized_qd.trace().real());
    if (res.probability >= PostSelectionResult::kDegenerateThreshold) {
      ComplexMatrix normalized = res.unnormalized_qd * Complex(1.0 / res.probability);
      // Exact Hermitian symmetry keeps validation independent of round-off.
      normalized = (normalized + normalized.adjoint()) * Complex(0.5);
      res.conditional_qd.emplace(std::move(normalized), qd_dims);
      res.conditional_q.emplace(partial_trace(*res.conditional_qd, {0}));
      if (res.conditional_q->dim() >= 2) res.gamma = (*res.conditional_q)(0, 1);
    }
    return res;
  };

  return PostSelection{project(Outcome::Plus), project(Outcome::Minus)};
}

}  // namespace switchlab
