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


#include "switchlab/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace switchlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  return {re, g(rng)};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
  std::vector<Ket> cols;
  cols.reserve(dim);
  while (cols.size() < dim) {
    Ket v(dim);
    for (Complex& z : v) z = gaussian(rng);
    for (const Ket& u : cols) {
      const Complex proj = inner(u, v);
      for (std::size_t k = 0; k < dim; ++k) v[k] -= proj * u[k];
    }
    // Second pass keeps columns orthonormal to machine precision.
    for (const Ket& u : cols) {
      const Complex proj = inner(u, v);
      for (std::size_t k = 0; k < dim; ++k) v[k] -= proj * u[k];
    }
    if (norm(v) < 1e-8) continue;
    cols.push_back(normalized(std::move(v)));
  }
  ComplexMatrix u(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = cols[c][r];
  }
  return u;
}

Ket random_ket(Rng& rng, std::size_t dim) {
  Ket v(dim);
  for (Complex& z : v) z = gaussian(rng);
  return normalized(std::move(v));
}

std::vector<double> dirichlet(Rng& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = e(rng);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

SwitchScenario random_scenario(std::uint64_t seed, const SamplingOptions& options) {
  if (options.min_paths < 2 || options.min_paths > options.max_paths ||
      options.min_detector < 1 || options.min_detector > options.max_detector) {
    throw std::invalid_argument("random_scenario: bad size ranges");
  }
  Rng rng(seed);
  const std::size_t n = pick(rng, options.min_paths, options.max_paths);
  const std::size_t d = pick(rng, options.min_detector, options.max_detector);

  SwitchScenario scn;
  scn.preparation.probabilities = dirichlet(rng, n);
  for (std::size_t i = 0; i < n; ++i) scn.preparation.phases.push_back(uniform(rng, 0.0, kTwoPi));
  scn.interaction.detector_dim = d;
  scn.interaction.initial_detector = 0;
  for (std::size_t i = 0; i < n; ++i) {
    scn.interaction.detector_unitaries.push_back(random_unitary(rng, d));
  }
  scn.interference = random_unitary(rng, n);
  scn.p = uniform(rng, 0.0, 1.0);
  scn.theta = uniform(rng, 0.0, kTwoPi);
  if (options.mixed_order) {
    const double shrink = uniform(rng, 0.0, 1.0);
    scn.order_offdiag =
        std::polar(shrink * std::sqrt(scn.p * (1.0 - scn.p)), uniform(rng, 0.0, kTwoPi));
  }
  return scn;
}

SymmetricSample random_symmetric_scenario(std::uint64_t seed) {
  Rng rng(seed);
  SymmetricSample out;
  SwitchScenario& scn = out.scenario;
  const std::size_t d = pick(rng, 2, 3);
  scn.preparation = PathPreparation::balanced(2);
  scn.preparation.phases = {uniform(rng, 0.0, kTwoPi), uniform(rng, 0.0, kTwoPi)};
  scn.interaction.detector_dim = d;
  scn.interaction.detector_unitaries = {random_unitary(rng, d), random_unitary(rng, d)};
  scn.p = uniform(rng, 0.05, 0.95);
  scn.theta = uniform(rng, 0.0, kTwoPi);
  const Complex e0 = std::polar(1.0, uniform(rng, 0.0, kTwoPi));
  const Complex e1 = std::polar(1.0, uniform(rng, 0.0, kTwoPi));
  if (pick(rng, 0, 1) == 0) {
    // Diagonal U_Q commutes with the which-path unitary: any basis phase works.
    scn.interference = ComplexMatrix{{e0, 0.0}, {0.0, e1}};
    out.phi = uniform(rng, 0.0, kTwoPi);
  } else {
    // Path swap: the branch overlaps obey Gamma_11 = conj(Gamma_00), so the
    // symmetric condition needs a real cross coefficient, i.e. phi = theta.
    scn.interference = ComplexMatrix{{0.0, e0}, {e1, 0.0}};
    out.phi = scn.theta;
  }
  return out;
}

}  // namespace switchlab
