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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "switchlab/config.hpp"
#include "switchlab/errors.hpp"
#include "switchlab/measures.hpp"
#include "switchlab/model.hpp"
#include "switchlab/sampling.hpp"

using namespace switchlab;

namespace {

DensityOperator qubit(double p, Complex kappa) {
  return DensityOperator(ComplexMatrix{{p, kappa}, {std::conj(kappa), 1.0 - p}});
}

}  // namespace

TEST_CASE("l1 coherence") {
  const std::vector<Complex> diag{0.2, 0.3, 0.5};
  CHECK(l1_coherence(DensityOperator(ComplexMatrix::diagonal(diag)), 3) == 0.0);
  for (std::size_t n = 2; n <= 5; ++n) {
    const Ket plus(n, Complex(1.0 / std::sqrt(static_cast<double>(n))));
    CHECK(l1_coherence(DensityOperator::pure(plus, {n}), n) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(l1_coherence(qubit(0.5, 0.3), 2) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK_THROWS_AS(l1_coherence(DensityOperator(ComplexMatrix{{1.0}}), 1), std::invalid_argument);
  CHECK_THROWS_AS(l1_coherence(qubit(0.5, 0.3), 3), std::invalid_argument);

  SUBCASE("convex under mixing") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u;
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexMatrix a = oracle::random_density(rng, 3);
      const ComplexMatrix b = oracle::random_density(rng, 3);
      const double lam = u(rng);
      const ComplexMatrix mix = a * Complex(lam) + b * Complex(1.0 - lam);
      CHECK(l1_coherence(mix, 3) <=
            lam * l1_coherence(a, 3) + (1.0 - lam) * l1_coherence(b, 3) + 1e-10);
    }
  }
}

TEST_CASE("path distinguishability") {
  const std::vector<double> half{0.5, 0.5};
  const std::vector<Ket> orth{basis_ket(2, 0), basis_ket(2, 1)};
  CHECK(path_distinguishability(half, orth) == doctest::Approx(1.0));
  const std::vector<Ket> same{basis_ket(2, 0), basis_ket(2, 0)};
  CHECK(path_distinguishability(half, same) == doctest::Approx(0.0));
  const std::vector<Ket> tilted{basis_ket(2, 0), Ket{0.6, 0.8}};
  CHECK(path_distinguishability(half, tilted) == doctest::Approx(0.4).epsilon(1e-15));

  const std::vector<Ket> unnormalized{basis_ket(2, 0), Ket{1.0, 1.0}};
  CHECK_THROWS_AS(path_distinguishability(half, unnormalized), std::invalid_argument);
  const std::vector<double> bad_priors{0.5, 0.6};
  CHECK_THROWS_AS(path_distinguishability(bad_priors, orth), std::invalid_argument);
}

TEST_CASE("causal coherence") {
  CHECK(causal_coherence(0.5, 1.0) == doctest::Approx(1.0));
  CHECK(causal_coherence(0.0, 1.0) == 0.0);
  CHECK(causal_coherence(1.0, Complex(0.0, 1.0)) == 0.0);

  SUBCASE("p = 0.3 with branch overlap 0.5, from explicit states") {
    // sqrt(p)|a>|0> + sqrt(1-p)|b>|1> with <a|b> = 0.5.
    const double p = 0.3;
    const Ket a{1.0, 0.0};
    const Ket b{0.5, std::sqrt(0.75)};
    Ket psi(4);
    for (int k = 0; k < 2; ++k) {
      psi[2 * k] = std::sqrt(p) * a[k];
      psi[2 * k + 1] = std::sqrt(1.0 - p) * b[k];
    }
    const DensityOperator rho_o = partial_trace(DensityOperator::pure(psi, {2, 2}), {1});
    CHECK(std::abs(2.0 * std::abs(rho_o(0, 1)) - 2.0 * std::sqrt(0.21) * 0.5) < 1e-15);
    CHECK(causal_coherence(p, 0.5) == doctest::Approx(2.0 * std::sqrt(0.21) * 0.5));
  }
  CHECK_THROWS_AS(causal_coherence(0.5, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(causal_coherence(-0.1, 0.5), std::invalid_argument);
  for (double p = 0.0; p <= 1.0; p += 0.05) CHECK(causal_coherence(p, 1.0) <= 1.0 + 1e-15);
}

TEST_CASE("order-qubit interference") {
  for (double phi : {0.0, 1.0, 2.5}) {
    const OrderOutcomes o = order_interference(qubit(0.3, 0.0), phi);
    CHECK(o.plus == doctest::Approx(0.5));
    CHECK(o.minus == doctest::Approx(0.5));
  }
  const double phi0 = 0.7;
  const OrderOutcomes peak = order_interference(qubit(0.5, std::polar(0.5, phi0)), -phi0);
  CHECK(peak.plus == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(peak.minus == doctest::Approx(0.0).epsilon(1e-15));

  SUBCASE("64-point grid follows a cosine") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const DensityOperator rho(oracle::random_density(rng, 2));
      std::vector<double> xs, plus, minus;
      for (int k = 0; k < 64; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / 64.0;
        const OrderOutcomes o = order_interference(rho, phi);
        xs.push_back(phi);
        plus.push_back(o.plus);
        minus.push_back(o.minus);
        CHECK(std::abs(o.plus + o.minus - 1.0) < 1e-14);
        const Complex kappa = rho(0, 1);
        CHECK(std::abs(o.plus - 0.5 * (1.0 + 2.0 * std::abs(kappa) * std::cos(phi + std::arg(kappa)))) < 1e-12);
      }
      CHECK(oracle::cosine_fit_residual(xs, plus) < 1e-10);
      CHECK(oracle::cosine_fit_residual(xs, minus) < 1e-10);
    }
  }
}

TEST_CASE("causal visibility") {
  CHECK(causal_visibility(qubit(0.4, 0.0)) == 0.0);
  CHECK(causal_visibility_scan(qubit(0.4, 0.0)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(causal_visibility(qubit(0.5, 0.5)) == doctest::Approx(1.0));
  CHECK(causal_visibility_scan(qubit(0.5, 0.5)) == doctest::Approx(1.0).epsilon(1e-12));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SwitchScenario s = random_scenario(seed, SamplingOptions{.mixed_order = seed % 3 == 0});
    const DensityOperator rho_o = reduce(evolve_switch(s), Reduction::Order);
    CHECK(std::abs(causal_visibility_scan(rho_o) - 2.0 * std::abs(rho_o(0, 1))) < 1e-9);
    if (s.has_pure_order()) {
      const Complex overlap = inner(branch_state(s, CausalOrder::AThenB),
                                    branch_state(s, CausalOrder::BThenA));
      CHECK(std::abs(causal_visibility(rho_o) - causal_coherence(s.p, std::min(1.0, std::abs(overlap)))) < 1e-9);
    }
  }
}

TEST_CASE("binary entropy and delta") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  const std::vector<Complex> d{0.75, 0.25};
  CHECK(std::abs(binary_entropy(0.75) - von_neumann_entropy(DensityOperator(ComplexMatrix::diagonal(d)))) < 1e-12);
  CHECK(std::abs(binary_entropy(0.75) - oracle::h2(0.75)) < 1e-14);
  CHECK_THROWS_AS(binary_entropy(1.1), std::invalid_argument);
  CHECK_THROWS_AS(binary_entropy(-0.01), std::invalid_argument);

  CHECK(delta_parameter(0.5, 1.0) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.5 * (1.0 + delta_parameter(0.5, 1.0))) == doctest::Approx(0.0));
  CHECK(delta_parameter(0.5, 0.0) == 0.0);
  CHECK(binary_entropy(0.5 * (1.0 + delta_parameter(0.5, 0.0))) == doctest::Approx(1.0));
  CHECK(delta_parameter(0.7, 0.3) == doctest::Approx(0.5).epsilon(1e-15));
  const HermitianEigen e = hermitian_eig(qubit(0.7, std::polar(0.15, 2.0)).matrix());
  CHECK(std::abs(e.eigenvalues[0] - 0.25) < 1e-10);
  CHECK(std::abs(e.eigenvalues[1] - 0.75) < 1e-10);
  CHECK_THROWS_AS(delta_parameter(0.9, 0.9), InconsistencyError);
}

TEST_CASE("conditional entropies") {
  std::mt19937_64 rng(8);
  const ComplexMatrix rho_qd = oracle::random_density(rng, 4);
  const ComplexMatrix zero{{1.0, 0.0}, {0.0, 0.0}};
  const DensityOperator product(kron(rho_qd, zero), {2, 2, 2});
  CHECK(conditional_entropy_after_measurement(product, OrderBasis::Z) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(conditional_entropy_after_measurement(product, OrderBasis::X) == doctest::Approx(1.0).epsilon(1e-10));

  const DensityOperator realization = evolve_switch(explicit_realization());
  const double sum = conditional_entropy_after_measurement(realization, OrderBasis::Z) +
                     conditional_entropy_after_measurement(realization, OrderBasis::X);
  const double h_o = von_neumann_entropy(reduce(realization, Reduction::Order));
  CHECK(h_o == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(sum >= 1.0 - h_o - 1e-9);

  SUBCASE("mixed global states obey the conditional form") {
    for (int trial = 0; trial < 30; ++trial) {
      const DensityOperator rho(oracle::random_density(rng, 8), {2, 2, 2});
      const double hz = conditional_entropy_after_measurement(rho, OrderBasis::Z);
      const double hx = conditional_entropy_after_measurement(rho, OrderBasis::X);
      CHECK(hz >= 0.0);
      CHECK(hx >= 0.0);
      CHECK(hz + hx >= 1.0 + conditional_order_entropy(rho) - 1e-9);
    }
  }
  SUBCASE("pure global states: H(O|QD) = -H(O)") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const DensityOperator rho = evolve_switch(random_scenario(seed));
      CHECK(std::abs(conditional_order_entropy(rho) +
                     von_neumann_entropy(reduce(rho, Reduction::Order))) < 1e-9);
    }
  }
  CHECK_THROWS_AS(conditional_entropy_after_measurement(DensityOperator(rho_qd, {2, 2}), OrderBasis::Z),
                  std::invalid_argument);
}
