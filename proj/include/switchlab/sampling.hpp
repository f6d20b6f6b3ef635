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
#include <random>
#include <vector>

#include "switchlab/linalg.hpp"
#include "switchlab/model.hpp"

namespace switchlab {

/// splitmix64 step: decorrelated per-sample seeds from one base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

using Rng = std::mt19937_64;

/// Haar-style unitary: Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, std::size_t dim);
/// Uniform random unit vector.
Ket random_ket(Rng& rng, std::size_t dim);
/// Symmetric Dirichlet(1, ..., 1) sample.
std::vector<double> dirichlet(Rng& rng, std::size_t n);

struct SamplingOptions {
  std::size_t min_paths = 2;
  std::size_t max_paths = 3;
  std::size_t min_detector = 2;
  std::size_t max_detector = 3;
  /// Draw a mixed order qubit: kappa0 shrunk by a uniform factor in [0, 1).
  bool mixed_order = false;
};

SwitchScenario random_scenario(std::uint64_t seed, const SamplingOptions& options = {});

/// Two balanced paths whose branch states satisfy the symmetric post-selection
/// conditions at basis phase phi.
struct SymmetricSample {
  SwitchScenario scenario;
  double phi = 0.0;
};
SymmetricSample random_symmetric_scenario(std::uint64_t seed);

}  // namespace switchlab
