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

#include "switchlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "switchlab/errors.hpp"
#include "switchlab/model.hpp"

namespace switchlab {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kEntropyRoundOff = 1e-10;

void require_qubit(const DensityOperator& rho_o) {
  if (rho_o.dim() != 2) throw std::invalid_argument("expected a qubit density operator");
}

void require_order_last(const DensityOperator& rho) {
  if (rho.dims().size() != 3 || rho.dims()[2] != 2) {
    throw std::invalid_argument("expected dims {n, d, 2} with the order qubit last");
  }
}

// Golden-section search for an extremum of f on [lo, hi]; sign = +1 maximizes.
template <typename F>
double golden_extremum(F f, double lo, double hi, double sign) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = sign * f(x1);
  double f2 = sign * f(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = sign * f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = sign * f(x2);
    }
  }
  return sign * std::max(f1, f2);
}

}  // namespace

DualityReport DualityReport::make(double coherence, double distinguishability, double tol) {
  DualityReport r;
  r.coherence = coherence;
  r.distinguishability = distinguishability;
  r.sum = coherence + distinguishability;
  r.saturated = std::abs(r.sum - 1.0) < tol;
  return r;
}

double l1_coherence(const ComplexMatrix& rho, std::size_t n) {
  if (n < 2) throw std::invalid_argument("l1_coherence needs at least two basis states");
  if (rho.rows() != n || rho.cols() != n) {
    throw std::invalid_argument("l1_coherence: state is not n x n");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += std::abs(rho(i, j));
    }
  }
  return sum / static_cast<double>(n - 1);
}

double l1_coherence(const DensityOperator& rho, std::size_t n) {
  return l1_coherence(rho.matrix(), n);
}

DetectorEnsemble detector_ensemble(std::span<const Complex> qd_state, std::size_t paths,
                                   std::size_t detector_dim) {
  if (qd_state.size() != paths * detector_dim) {
    throw std::invalid_argument("detector_ensemble: state dimension mismatch");
  }
  DetectorEnsemble ens;
  for (std::size_t k = 0; k < paths; ++k) {
    Ket block(qd_state.begin() + static_cast<std::ptrdiff_t>(k * detector_dim),
              qd_state.begin() + static_cast<std::ptrdiff_t>((k + 1) * detector_dim));
    const double w = norm(block);
    if (w * w < 1e-300) {
      ens.priors.push_back(0.0);
      ens.states.push_back(basis_ket(detector_dim, 0));
    } else {
      ens.priors.push_back(w * w);
      ens.states.push_back(normalized(std::move(block)));
    }
  }
  return ens;
}

double path_distinguishability(std::span<const double> priors, std::span<const Ket> states) {
  const std::size_t n = priors.size();
  if (n < 2 || states.size() != n) {
    throw std::invalid_argument("path_distinguishability: need matching priors and states, n >= 2");
  }
  double total = 0.0;
  for (double q : priors) {
    if (q < 0.0) throw std::invalid_argument("path_distinguishability: negative prior");
    total += q;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw std::invalid_argument("path_distinguishability: priors must sum to 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (priors[i] > 0.0 && std::abs(norm(states[i]) - 1.0) > kNormTolerance) {
      throw std::invalid_argument("path_distinguishability: detector states must be normalized");
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || priors[i] == 0.0 || priors[j] == 0.0) continue;
      sum += std::sqrt(priors[i] * priors[j]) * std::abs(inner(states[j], states[i]));
    }
  }
  return 1.0 - sum / static_cast<double>(n - 1);
}

double causal_coherence(double p, Complex overlap) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("causal_coherence: p outside [0, 1]");
  if (std::abs(overlap) > 1.0 + 1e-12) {
    throw std::invalid_argument("causal_coherence: |overlap| exceeds 1");
  }
  return 2.0 * std::sqrt(p * (1.0 - p)) * std::abs(overlap);
}

Complex order_coherence_element(const DensityOperator& rho_o) {
  require_qubit(rho_o);
  return rho_o(0, 1);
}

OrderOutcomes order_interference(const DensityOperator& rho_o, double phi) {
  require_qubit(rho_o);
  OrderOutcomes out;
  for (Outcome o : {Outcome::Plus, Outcome::Minus}) {
    const double sign = o == Outcome::Plus ? 1.0 : -1.0;
    const Complex c1 = sign * std::polar(1.0, phi);
    // <pm|rho|pm> with |pm> = (|0> + c1|1>)/sqrt(2)
    const Complex v = rho_o(0, 0) + rho_o(0, 1) * c1 + std::conj(c1) * rho_o(1, 0) +
                      std::conj(c1) * rho_o(1, 1) * c1;
    (o == Outcome::Plus ? out.plus : out.minus) = 0.5 * v.real();
  }
  return out;
}

double causal_visibility(const DensityOperator& rho_o) {
  return 2.0 * std::abs(order_coherence_element(rho_o));
}

double causal_visibility_scan(const DensityOperator& rho_o, std::size_t points) {
  require_qubit(rho_o);
  if (points < 3) throw std::invalid_argument("causal_visibility_scan: need at least 3 points");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(points);
  auto p_plus = [&](double phi) { return order_interference(rho_o, phi).plus; };

  std::size_t imax = 0;
  std::size_t imin = 0;
  double vmax = p_plus(0.0);
  double vmin = vmax;
  for (std::size_t k = 1; k < points; ++k) {
    const double v = p_plus(step * static_cast<double>(k));
    if (v > vmax) {
      vmax = v;
      imax = k;
    }
    if (v < vmin) {
      vmin = v;
      imin = k;
    }
  }
  const double cmax = step * static_cast<double>(imax);
  const double cmin = step * static_cast<double>(imin);
  const double pmax = std::max(vmax, golden_extremum(p_plus, cmax - step, cmax + step, 1.0));
  const double pmin = std::min(vmin, golden_extremum(p_plus, cmin - step, cmin + step, -1.0));
  return (pmax - pmin) / (pmax + pmin);
}

double binary_entropy(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double delta_parameter(double p, double c_causal) {
  const double delta = std::sqrt((2.0 * p - 1.0) * (2.0 * p - 1.0) + c_causal * c_causal);
  if (delta > 1.0 + 1e-10) {
    throw InconsistencyError("delta parameter exceeds 1: p and causal coherence are incompatible");
  }
  return std::min(delta, 1.0);
}

DensityOperator dephase_order(const DensityOperator& rho_qdo, OrderBasis basis) {
  require_order_last(rho_qdo);
  const std::size_t qd = rho_qdo.dim() / 2;
  ComplexMatrix out(rho_qdo.dim(), rho_qdo.dim());
  if (basis == OrderBasis::Z) {
    for (std::size_t x = 0; x < qd; ++x) {
      for (std::size_t y = 0; y < qd; ++y) {
        for (std::size_t a = 0; a < 2; ++a) out(2 * x + a, 2 * y + a) = rho_qdo(2 * x + a, 2 * y + a);
      }
    }
  } else {
    // sum over |pm><pm| (x) rho_QD^{pm} (x) |pm><pm| in the order factor.
    for (Outcome o : {Outcome::Plus, Outcome::Minus}) {
      const auto c = order_measurement_ket(o, 0.0);
      for (std::size_t x = 0; x < qd; ++x) {
        for (std::size_t y = 0; y < qd; ++y) {
          Complex block = 0.0;
          for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
              block += std::conj(c[a]) * rho_qdo(2 * x + a, 2 * y + b) * c[b];
            }
          }
          for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
              out(2 * x + a, 2 * y + b) += c[a] * block * std::conj(c[b]);
            }
          }
        }
      }
    }
  }
  out = (out + out.adjoint()) * Complex(0.5);
  return DensityOperator(std::move(out), rho_qdo.dims());
}

double conditional_entropy_after_measurement(const DensityOperator& rho_qdo, OrderBasis basis) {
  const double h_measured = von_neumann_entropy(dephase_order(rho_qdo, basis));
  const double h_qd = von_neumann_entropy(partial_trace(rho_qdo, {0, 1}));
  double h = h_measured - h_qd;
  // Classical-quantum states have nonnegative conditional entropy.
  if (h < 0.0 && h > -kEntropyRoundOff) h = 0.0;
  return h;
}

double conditional_order_entropy(const DensityOperator& rho_qdo) {
  require_order_last(rho_qdo);
  return von_neumann_entropy(rho_qdo) - von_neumann_entropy(partial_trace(rho_qdo, {0, 1}));
}

}  // namespace switchlab
