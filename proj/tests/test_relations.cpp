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

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "switchlab/config.hpp"
#include "switchlab/errors.hpp"
#include "switchlab/relations.hpp"
#include "switchlab/sampling.hpp"

using namespace switchlab;

namespace {

bool all_hold(const std::vector<RelationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
}

const RelationCheck& find(const std::vector<RelationCheck>& checks, const std::string& name) {
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const auto& c) { return c.name == name; });
  REQUIRE(it != checks.end());
  return *it;
}

}  // namespace

TEST_CASE("relation kinds") {
  CHECK(RelationCheck{"a", RelationKind::AtMost, 1.0, 1.0 - 5e-10, 1e-9, ""}.holds());
  CHECK_FALSE(RelationCheck{"a", RelationKind::AtMost, 1.0, 1.0 - 2e-9, 1e-9, ""}.holds());
  CHECK(RelationCheck{"a", RelationKind::AtLeast, 1.0 - 5e-10, 1.0, 1e-9, ""}.holds());
  CHECK_FALSE(RelationCheck{"a", RelationKind::Equal, 1.0, 1.1, 1e-9, ""}.holds());
  CHECK(RelationCheck{"a", RelationKind::Exceeds, 1e-12, 0.0, 1.0, ""}.holds());
  CHECK_FALSE(RelationCheck{"a", RelationKind::Exceeds, 0.0, 0.0, 1.0, ""}.holds());
  CHECK_FALSE(RelationCheck{"a", RelationKind::Equal, std::nan(""), 0.0, 1.0, ""}.holds());
}

TEST_CASE("fixed-order duality") {
  const DualityReport marked = fixed_order_duality(full_marking(), CausalOrder::AThenB);
  CHECK(marked.coherence == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(marked.distinguishability == doctest::Approx(1.0));
  const DualityReport unmarked = fixed_order_duality(no_marking(), CausalOrder::BThenA);
  CHECK(unmarked.coherence == doctest::Approx(1.0));
  CHECK(unmarked.distinguishability == doctest::Approx(0.0).epsilon(1e-12));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SwitchScenario s = random_scenario(seed);
    for (CausalOrder o : {CausalOrder::AThenB, CausalOrder::BThenA}) {
      const RelationCheck c = check_fixed_order_duality(s, o);
      CHECK(c.holds());
      CHECK(std::abs(c.lhs - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("reduced-state duality chain") {
  SwitchScenario s = random_scenario(5);
  s.p = 1.0;
  const IcoReport r = ico_quantities(s);
  const DualityReport ab = fixed_order_duality(s, CausalOrder::AThenB);
  CHECK(r.c_q == doctest::Approx(ab.coherence).epsilon(1e-12));
  CHECK(r.c_q + r.d_bound == doctest::Approx(1.0).epsilon(1e-12));

  const IcoReport e = ico_quantities(explicit_realization());
  CHECK(e.c_q == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e.d_bound == doctest::Approx(1.0).epsilon(1e-12));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto checks = check_ico_duality(random_scenario(seed, {.mixed_order = seed % 2 == 1}));
    CHECK(checks.size() == 2);
    CHECK(all_hold(checks));
  }
}

TEST_CASE("post-selected duality") {
  SUBCASE("no order coherence: N = 1/2 and gamma = C_mix / 2") {
    SymmetricSample sym = random_symmetric_scenario(17);
    sym.scenario.order_offdiag = Complex(0.0);
    const PostSelectedClosedForm cf = post_selected_closed_form(sym.scenario, sym.phi);
    CHECK(cf.n_plus == doctest::Approx(0.5));
    CHECK(cf.n_minus == doctest::Approx(0.5));
    CHECK(std::abs(cf.gamma_plus - cf.c_mix / 2.0) < 1e-12);
    CHECK(std::abs(cf.gamma_minus - cf.c_mix / 2.0) < 1e-12);
    CHECK(all_hold(check_post_selected_duality(sym.scenario, sym.phi)));
  }
  SUBCASE("commuting sector, theta = phi = 0: the minus outcome is degenerate") {
    const auto checks = check_post_selected_duality(explicit_realization(), 0.0);
    CHECK(all_hold(checks));
    CHECK(find(checks, "post_selected.minus.degenerate").lhs < 1e-12);
    CHECK(find(checks, "post_selected.plus.duality").lhs == doctest::Approx(1.0));
  }
  SUBCASE("random symmetric scenarios: closed form against the matrix pipeline") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const SymmetricSample sym = random_symmetric_scenario(seed);
      const auto checks = check_post_selected_duality(sym.scenario, sym.phi);
      CHECK(all_hold(checks));
      const PostSelection ps = post_select(evolve_switch(sym.scenario), sym.phi);
      const PostSelectedClosedForm cf = post_selected_closed_form(sym.scenario, sym.phi);
      CHECK(std::abs(ps.plus.probability - cf.n_plus) < 1e-10);
      CHECK(std::abs(ps.minus.probability - cf.n_minus) < 1e-10);
    }
  }
  SUBCASE("precondition violations name the condition") {
    Rng rng(4);
    SwitchScenario s = explicit_realization(0.5, 0.3);
    s.interaction.detector_unitaries[1] = random_unitary(rng, 2);
    s.interference = ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    CHECK_NOTHROW(require_symmetric_post_selection(s, 0.3));
    try {
      check_post_selected_duality(s, 1.0);
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("Re(c Gamma_00) = Re(c Gamma_11)") != std::string::npos);
    }
    CHECK_THROWS_AS(check_post_selected_duality(full_marking(), 0.0), PreconditionError);
    SwitchScenario skewed = explicit_realization();
    skewed.preparation.probabilities = {0.3, 0.7};
    CHECK_THROWS_AS(check_post_selected_duality(skewed, 0.0), PreconditionError);
  }
}

TEST_CASE("no-go counterexample") {
  const NoGoResult half = nogo_counterexample(0.5);
  CHECK(half.c_q == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(half.d_bound == doctest::Approx(1.0));
  CHECK(half.c_causal == doctest::Approx(1.0));
  for (double alpha : {0.01, 0.1, 1.0}) CHECK(std::abs(half.violation_margin(alpha) - alpha) < 1e-9);

  const NoGoResult quarter = nogo_counterexample(0.25);
  CHECK(std::abs(quarter.c_causal - 2.0 * std::sqrt(0.1875)) < 1e-9);
  CHECK(std::abs(quarter.c_causal - quarter.c_causal_closed_form) < 1e-9);

  for (int k = 1; k < 20; ++k) {
    const NoGoResult r = nogo_counterexample(k / 20.0);
    CHECK(std::abs(r.c_causal - r.c_causal_closed_form) < 1e-9);
    CHECK(r.violation_margin(0.01) > 0.0);
  }
  CHECK_THROWS_AS(nogo_counterexample(0.0), std::invalid_argument);
  CHECK_THROWS_AS(nogo_counterexample(1.0), std::invalid_argument);
}

TEST_CASE("region sweep") {
  const std::vector<RegionPoint> pts = region_sweep(RegionGrid{});
  CHECK(pts.size() == 21 * 21);
  for (const auto& pt : pts) {
    CHECK(pt.x >= -1e-9);
    CHECK(pt.x <= 1.0 + 1e-9);
    CHECK(pt.y >= -1e-9);
    CHECK(pt.y <= 1.0 + 1e-9);
    CHECK(pt.fingerprint.size() == 16);
    if (pt.p == 1.0) CHECK(pt.y == doctest::Approx(0.0).epsilon(1e-12));
    if (pt.p == 0.5 && pt.overlap == 0.0) {
      CHECK(pt.x == doctest::Approx(1.0));
      CHECK(pt.y == doctest::Approx(1.0));
    }
    // Both orders coincide, so the reduced state is pure and x saturates.
    CHECK(std::abs(pt.x - 1.0) < 1e-9);
  }
  SUBCASE("phase-mismatch family: x = y = overlap at p = 1/2") {
    for (double s : {0.0, 0.3, 0.7, 1.0}) {
      const SwitchScenario scn = region_scenario(RegionFamily::PhaseMismatch, 0.5, s);
      const IcoReport r = ico_quantities(scn);
      CHECK(r.c_q + r.d_bound == doctest::Approx(s).epsilon(1e-12));
      CHECK(causal_visibility(reduce(evolve_switch(scn), Reduction::Order)) ==
            doctest::Approx(s).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(region_scenario(RegionFamily::Commuting, 0.5, 1.2), std::invalid_argument);
}

TEST_CASE("entropic bound") {
  const EntropicCheck commuting = check_entropic_bound(explicit_realization());
  CHECK(commuting.pure);
  CHECK(commuting.report.delta == doctest::Approx(1.0));
  CHECK(commuting.report.bound == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(commuting.report.slack >= -1e-9);
  CHECK(all_hold(commuting.checks));

  const EntropicCheck orthogonal =
      check_entropic_bound(region_scenario(RegionFamily::PhaseMismatch, 0.5, 0.0));
  CHECK(orthogonal.report.delta == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(orthogonal.report.bound == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(orthogonal.report.h_order == doctest::Approx(1.0));
  CHECK(all_hold(orthogonal.checks));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SwitchScenario s = random_scenario(seed);
    s.p = 0.5;
    s.order_offdiag = Complex(0.0);
    const EntropicCheck mixed = check_entropic_bound(s);
    CHECK_FALSE(mixed.pure);
    const double h_cond = conditional_order_entropy(evolve_switch(s));
    CHECK(mixed.report.bound == doctest::Approx(1.0 + h_cond).epsilon(1e-12));
    CHECK(all_hold(mixed.checks));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const EntropicCheck c = check_entropic_bound(random_scenario(seed));
    CHECK(c.pure);
    CHECK(c.checks.size() == 3);
    CHECK(all_hold(c.checks));
    CHECK(std::abs(c.report.slack - (c.report.h_z + c.report.h_x - c.report.bound)) < 1e-15);
  }
}

TEST_CASE("detector overlap lemma") {
  const SwitchScenario s = random_scenario(31);
  const std::size_t d = s.detector_dim();
  CHECK(all_hold(check_overlap_lemma(s, ComplexMatrix::identity(d))));

  ComplexMatrix perm(d, d);
  for (std::size_t r = 0; r < d; ++r) perm((r + 1) % d, r) = 1.0;
  const auto permuted = check_overlap_lemma(s, perm, 1e-12);
  CHECK(all_hold(permuted));

  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SwitchScenario r = random_scenario(seed, {.mixed_order = seed % 2 == 0});
    CHECK(all_hold(check_overlap_lemma(r, random_unitary(rng, r.detector_dim()))));
  }
  CHECK_THROWS_AS(check_overlap_lemma(s, ComplexMatrix::identity(d) * Complex(2.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_overlap_lemma(s, ComplexMatrix::identity(d + 1)), std::invalid_argument);
}

TEST_CASE("verify_scenario") {
  for (const SwitchScenario& s : {explicit_realization(), no_marking(), full_marking()}) {
    const auto rows = verify_scenario(s, "fp", 1);
    CHECK_FALSE(rows.empty());
    CHECK(all_hold(rows));
    for (const auto& r : rows) CHECK(r.context == "fp");
  }
  const auto rows = verify_scenario(explicit_realization(), "fp", 1);
  CHECK(find(rows, "causal.coherence_consistency").lhs == doctest::Approx(1.0));
  CHECK(find(rows, "ico.duality_bound").lhs == doctest::Approx(1.0));

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SymmetricSample sym = random_symmetric_scenario(seed);
    const auto sym_rows = verify_scenario(sym.scenario, "sym", seed, kRelationTolerance, sym.phi);
    CHECK(all_hold(sym_rows));
    CHECK(std::any_of(sym_rows.begin(), sym_rows.end(), [](const auto& r) {
      return r.name.rfind("post_selected.", 0) == 0;
    }));
  }
}
