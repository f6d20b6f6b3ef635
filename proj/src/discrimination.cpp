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

#include "switchlab/discrimination.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace switchlab {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr std::size_t kOracleGrid = 10000;
constexpr int kOracleRefinements = 50;
constexpr int kWeightBisections = 60;
// Round-off allowance when testing I - Pi_a - Pi_b >= 0.
constexpr double kPsdSlack = 1e-14;

void require_pure_pair(double p, std::span<const Complex> a, std::span<const Complex> b) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("prior outside [0, 1]");
  if (a.size() != b.size()) throw std::invalid_argument("hypothesis states differ in dimension");
  if (std::abs(norm(a) - 1.0) > kNormTolerance || std::abs(norm(b) - 1.0) > kNormTolerance) {
    throw std::invalid_argument("hypothesis states must be normalized");
  }
}

using Vec2 = std::array<Complex, 2>;

// Smallest eigenvalue of I - wa |u><u| - wb |v><v| for unit 2-vectors u, v.
double inconclusive_min_eigenvalue(const Vec2& u, double wa, const Vec2& v, double wb) {
  Complex m[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m[i][j] = (i == j ? 1.0 : 0.0) - wa * u[i] * std::conj(u[j]) - wb * v[i] * std::conj(v[j]);
    }
  }
  const double tr = m[0][0].real() + m[1][1].real();
  const double diff = m[0][0].real() - m[1][1].real();
  return 0.5 * (tr - std::sqrt(diff * diff + 4.0 * std::norm(m[0][1])));
}

}  // namespace

void DiscriminationProblem::validate() const {
  if (!(prior >= 0.0 && prior <= 1.0)) throw std::invalid_argument("prior outside [0, 1]");
  if (state_a.dims() != state_b.dims()) {
    throw std::invalid_argument("hypothesis states have different dimensions");
  }
}

double helstrom_guess(const DiscriminationProblem& problem) {
  problem.validate();
  const ComplexMatrix helstrom = problem.state_a.matrix() * Complex(problem.prior) -
                                 problem.state_b.matrix() * Complex(1.0 - problem.prior);
  return 0.5 * (1.0 + trace_norm(helstrom));
}

UqsdResult uqsd_two_pure(double p, std::span<const Complex> a, std::span<const Complex> b) {
  require_pure_pair(p, a, b);
  const double s = std::min(1.0, std::abs(inner(a, b)));
  const double s2 = s * s;
  UqsdResult r;
  r.symmetric_expression = 1.0 - 2.0 * std::sqrt(p * (1.0 - p)) * s;
  // sqrt(p/(1-p)) in [s, 1/s]  <=>  s^2/(1+s^2) <= p <= 1/(1+s^2)
  if (p < s2 / (1.0 + s2)) {
    r.in_symmetric_regime = false;
    r.value = (1.0 - p) * (1.0 - s2);
  } else if (p > 1.0 / (1.0 + s2)) {
    r.in_symmetric_regime = false;
    r.value = p * (1.0 - s2);
  } else {
    r.value = r.symmetric_expression;
  }
  r.value = std::clamp(r.value, 0.0, 1.0);
  return r;
}

double uqsd_numeric_oracle(double p, std::span<const Complex> a, std::span<const Complex> b) {
  require_pure_pair(p, a, b);

  // Orthonormal frame of span{a, b}: e0 = a, e1 along the part of b orthogonal to a.
  const Complex ab = inner(a, b);
  Ket residual(b.begin(), b.end());
  for (std::size_t k = 0; k < residual.size(); ++k) residual[k] -= ab * a[k];
  const double rnorm = norm(residual);
  if (rnorm < 1e-12) return 0.0;
  for (Complex& z : residual) z /= rnorm;
  const Vec2 a2{Complex(1.0), Complex(0.0)};
  const Vec2 b2{ab, inner(residual, b)};

  // Pi_a = wa |b_perp><b_perp| never fires on b; Pi_b = wb |a_perp><a_perp| never on a.
  const Vec2 b_perp{-std::conj(b2[1]), std::conj(b2[0])};
  const Vec2 a_perp{Complex(0.0), Complex(1.0)};
  const double hit_a = std::norm(b_perp[0] * std::conj(a2[0]) + b_perp[1] * std::conj(a2[1]));
  const double hit_b = std::norm(a_perp[0] * std::conj(b2[0]) + a_perp[1] * std::conj(b2[1]));

  auto max_weight_b = [&](double wa) {
    auto feasible = [&](double wb) {
      return inconclusive_min_eigenvalue(b_perp, wa, a_perp, wb) >= -kPsdSlack;
    };
    if (!feasible(0.0)) return -1.0;
    double lo = 0.0;
    double hi = 1.0;
    if (feasible(hi)) return hi;
    for (int it = 0; it < kWeightBisections; ++it) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
  };
  // Success as a function of the failure probability q_a = 1 - wa * hit_a.
  const double q_lo = 1.0 - hit_a;
  auto success = [&](double q_a) {
    const double wa = std::clamp((1.0 - q_a) / hit_a, 0.0, 1.0);
    const double wb = max_weight_b(wa);
    if (wb < 0.0) return 0.0;
    return p * wa * hit_a + (1.0 - p) * wb * hit_b;
  };

  const double step = (1.0 - q_lo) / static_cast<double>(kOracleGrid - 1);
  std::size_t best = 0;
  double best_val = success(q_lo);
  for (std::size_t k = 1; k < kOracleGrid; ++k) {
    const double v = success(q_lo + step * static_cast<double>(k));
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }
  double lo = q_lo + step * static_cast<double>(best == 0 ? 0 : best - 1);
  double hi = q_lo + step * static_cast<double>(std::min(best + 1, kOracleGrid - 1));
  for (int it = 0; it < kOracleRefinements; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double h = 1e-3 * (hi - lo);
    (success(mid + h) > success(mid - h) ? lo : hi) = mid;
  }
  return std::max(best_val, success(0.5 * (lo + hi)));
}

DualityReport causal_duality(double p, std::span<const Complex> ab, std::span<const Complex> ba) {
  const UqsdResult d = uqsd_two_pure(p, ab, ba);
  return DualityReport::make(causal_coherence(p, std::min(1.0, std::abs(inner(ab, ba)))), d.value);
}

}  // namespace switchlab
