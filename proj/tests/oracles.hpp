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


// Test-side reference computations. Nothing here calls into the library's
// numerical routines; each helper is a direct transcription of a definition.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "switchlab/linalg.hpp"

namespace oracle {

using switchlab::Complex;
using switchlab::ComplexMatrix;
using switchlab::Ket;

/// Trace over the middle factor of a (d0 x d1 x d2) operator by explicit
/// index summation: out[(a,c),(a',c')] = sum_b m[(a,b,c),(a',b,c')].
inline ComplexMatrix trace_middle(const ComplexMatrix& m, std::size_t d0, std::size_t d1,
                                  std::size_t d2) {
  ComplexMatrix out(d0 * d2, d0 * d2);
  for (std::size_t a = 0; a < d0; ++a)
    for (std::size_t c = 0; c < d2; ++c)
      for (std::size_t ap = 0; ap < d0; ++ap)
        for (std::size_t cp = 0; cp < d2; ++cp) {
          Complex acc = 0.0;
          for (std::size_t b = 0; b < d1; ++b) {
            acc += m((a * d1 + b) * d2 + c, (ap * d1 + b) * d2 + cp);
          }
          out(a * d2 + c, ap * d2 + cp) = acc;
        }
  return out;
}

/// Trace over the last factor of a (d0 x d1) operator.
inline ComplexMatrix trace_last(const ComplexMatrix& m, std::size_t d0, std::size_t d1) {
  ComplexMatrix out(d0, d0);
  for (std::size_t a = 0; a < d0; ++a)
    for (std::size_t ap = 0; ap < d0; ++ap)
      for (std::size_t b = 0; b < d1; ++b) out(a, ap) += m(a * d1 + b, ap * d1 + b);
  return out;
}

/// Roots of the characteristic polynomial of a 2x2 Hermitian matrix, ascending.
inline std::pair<double, double> eig2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double tr = a + d;
  const double det = a * d - std::norm(h(0, 1));
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  return {tr / 2.0 - disc, tr / 2.0 + disc};
}

/// Binary entropy in bits via natural logarithms.
inline double h2(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -(x * std::log(x) + (1.0 - x) * std::log(1.0 - x)) / std::log(2.0);
}

/// Helstrom guess probability for two pure states with equal priors.
inline double helstrom_equal_pure(double overlap_abs) {
  return 0.5 * (1.0 + std::sqrt(1.0 - overlap_abs * overlap_abs));
}

/// Least-squares fit of y = c0 + c1 cos(x) + c2 sin(x); returns the maximum
/// absolute residual of the fit.
inline double cosine_fit_residual(const std::vector<double>& xs, const std::vector<double>& ys) {
  double a[3][4] = {};
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double f[3] = {1.0, std::cos(xs[k]), std::sin(xs[k])};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a[i][j] += f[i] * f[j];
      a[i][3] += f[i] * ys[k];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    for (int j = 0; j < 4; ++j) std::swap(a[col][j], a[piv][j]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int j = 0; j < 4; ++j) a[r][j] -= f * a[col][j];
    }
  }
  const double c[3] = {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
  double worst = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double fit = c[0] + c[1] * std::cos(xs[k]) + c[2] * std::sin(xs[k]);
    worst = std::max(worst, std::abs(fit - ys[k]));
  }
  return worst;
}

/// Plain matrix-vector product written out element by element.
inline Ket apply(const ComplexMatrix& m, const Ket& v) {
  Ket out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

inline Complex dot(const Ket& a, const Ket& b) {
  Complex acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

/// Random Hermitian matrix (G + G^dagger)/2 with Gaussian entries.
inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double re = g(rng);
      const Complex z(re, g(rng));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

/// Random full-rank density matrix A A^dagger / Tr.
inline ComplexMatrix random_density(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = g(rng);
      a(i, j) = Complex(re, g(rng));
    }
  ComplexMatrix m = a * a.adjoint();
  const double tr = m.trace().real();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) /= tr;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(j, i) = std::conj(m(i, j));
  return m;
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

}  // namespace oracle
