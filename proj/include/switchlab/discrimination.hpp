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

#include <span>

#include "switchlab/linalg.hpp"
#include "switchlab/measures.hpp"

namespace switchlab {

/// Two hypotheses: state_a with probability prior, state_b otherwise.
struct DiscriminationProblem {
  double prior = 0.5;
  DensityOperator state_a;
  DensityOperator state_b;

  void validate() const;
};

/// Minimum-error success probability 1/2 (1 + || p rho_a - (1-p) rho_b ||_1).
double helstrom_guess(const DiscriminationProblem& problem);

struct UqsdResult {
  /// Optimal unambiguous success probability.
  double value = 0.0;
  /// 1 - 2 sqrt(p(1-p)) |<a|b>|, reported even when it is not achievable.
  double symmetric_expression = 0.0;
  /// True when sqrt(p/(1-p)) lies in [|<a|b>|, 1/|<a|b>|] and value equals
  /// symmetric_expression. Otherwise value is the projective optimum.
  bool in_symmetric_regime = true;
};

/// Optimal unambiguous discrimination of two pure states with priors p, 1-p.
UqsdResult uqsd_two_pure(double p, std::span<const Complex> a, std::span<const Complex> b);

/// Brute-force optimum over unambiguous POVMs in span{a, b}: a grid over the
/// failure probability of a, then bisection refinement, with the largest
/// feasible weight for the b-detecting element found by PSD bisection.
double uqsd_numeric_oracle(double p, std::span<const Complex> a, std::span<const Complex> b);

/// Causal coherence paired with the unambiguous causal-order distinguishability.
DualityReport causal_duality(double p, std::span<const Complex> ab, std::span<const Complex> ba);

}  // namespace switchlab
