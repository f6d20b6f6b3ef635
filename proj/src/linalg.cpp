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

#include "switchlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace switchlab {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kJacobiThreshold = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Applies A <- G^dagger A G and V <- V G, where G acts on coordinates (p, q)
// as the 2x2 unitary [[g00, g01], [g10, g11]].
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, Complex g00,
            Complex g01, Complex g10, Complex g11) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * g00 + akq * g10;
    a(k, q) = akp * g01 + akq * g11;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
    a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * g00 + vkq * g10;
    v(k, q) = vkp * g01 + vkq * g11;
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match rows x cols");
  }
  require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  require_finite(m.entries_);
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  }
  require_finite(m.entries_);
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) { return outer(v, v); }

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  return max_abs_diff(adjoint() * (*this), identity(rows_)) <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("operator*: inner dimension mismatch");
  ComplexMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

Ket operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("operator*: vector dimension mismatch");
  Ket out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < a.cols_; ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Ket normalized(Ket v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  for (Complex& z : v) z /= n;
  return v;
}

Ket basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  Ket v(dim);
  v[index] = 1.0;
  return v;
}

Ket kron(std::span<const Complex> a, std::span<const Complex> b) {
  Ket out;
  out.reserve(a.size() * b.size());
  for (const Complex& x : a) {
    for (const Complex& y : b) out.push_back(x * y);
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return m;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return m;
}

ComplexMatrix HermitianEigen::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += eigenvectors(i, k) * eigenvalues[k] * std::conj(eigenvectors(j, k));
      }
      m(i, j) = acc;
    }
  }
  return m;
}

HermitianEigen hermitian_eig(const ComplexMatrix& h) {
  if (!h.is_hermitian(kHermitianTolerance)) {
    throw std::invalid_argument("hermitian_eig: input is not Hermitian within 1e-10");
  }
  const std::size_t n = h.rows();
  ComplexMatrix a = (h + h.adjoint()) * Complex(0.5);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = a.frobenius_norm();
  if (scale > 0.0) {
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
      if (off_diagonal_norm(a) <= kJacobiThreshold * scale) break;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const Complex apq = a(p, q);
          const double mag = std::abs(apq);
          if (mag == 0.0) continue;
          const Complex phase = std::conj(apq) / mag;  // e^{-i arg a_pq}
          const double app = a(p, p).real();
          const double aqq = a(q, q).real();
          const double theta = (aqq - app) / (2.0 * mag);
          const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;
          rotate(a, v, p, q, c, s, -s * phase, c * phase);
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = app - t * mag;
          a(q, q) = aqq + t * mag;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  HermitianEigen result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

double trace_norm(const ComplexMatrix& m) {
  if (!m.is_hermitian(kHermitianTolerance)) {
    throw std::invalid_argument("trace_norm: input is not Hermitian within 1e-10");
  }
  double sum = 0.0;
  for (double lambda : hermitian_eig(m).eigenvalues) sum += std::abs(lambda);
  return sum;
}

DensityOperator::DensityOperator(ComplexMatrix matrix, std::vector<std::size_t> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (!matrix_.is_square() || matrix_.rows() == 0) {
    throw std::invalid_argument("density operator must be a non-empty square matrix");
  }
  const std::size_t product =
      std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
  if (dims_.empty() || product != matrix_.rows()) {
    throw std::invalid_argument("subsystem dimensions do not multiply to the matrix dimension");
  }
  if (!matrix_.is_hermitian(kTolerance)) {
    throw std::invalid_argument("density operator is not Hermitian within 1e-10");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTolerance) {
    throw std::invalid_argument("density operator trace differs from 1 by more than 1e-10");
  }
  const auto eig = hermitian_eig(matrix_);
  if (eig.eigenvalues.front() < -kTolerance) {
    throw std::invalid_argument("density operator has an eigenvalue below -1e-10");
  }
}

DensityOperator::DensityOperator(ComplexMatrix matrix)
    : DensityOperator(matrix, std::vector<std::size_t>{matrix.rows()}) {}

DensityOperator DensityOperator::pure(std::span<const Complex> v, std::vector<std::size_t> dims) {
  if (std::abs(norm(v) - 1.0) > kTolerance) {
    throw std::invalid_argument("pure state vector is not normalized");
  }
  return DensityOperator(ComplexMatrix::projector(v), std::move(dims));
}

double DensityOperator::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const Complex& z : matrix_.entries()) s += std::norm(z);
  return s;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const std::size_t factors = dims.size();
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (!m.is_square() || m.rows() != total) {
    throw std::invalid_argument("partial_trace: dimensions do not match the matrix");
  }
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<bool> kept(factors, false);
  for (std::size_t k : keep) {
    if (k >= factors) throw std::invalid_argument("partial_trace: subsystem index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate subsystem index");
    kept[k] = true;
  }

  // Row-major strides of the full index.
  std::vector<std::size_t> stride(factors, 1);
  for (std::size_t f = factors; f-- > 1;) stride[f - 1] = stride[f] * dims[f];

  // Offsets into the full index contributed by each kept (resp. traced) multi-index,
  // enumerated in row-major order over the kept (resp. traced) factors.
  auto offsets = [&](bool want_kept) {
    std::vector<std::size_t> out{0};
    for (std::size_t f = 0; f < factors; ++f) {
      if (kept[f] != want_kept) continue;
      std::vector<std::size_t> next;
      next.reserve(out.size() * dims[f]);
      for (std::size_t base : out) {
        for (std::size_t x = 0; x < dims[f]; ++x) next.push_back(base + x * stride[f]);
      }
      out = std::move(next);
    }
    return out;
  };
  const auto kept_off = offsets(true);
  const auto traced_off = offsets(false);

  ComplexMatrix out(kept_off.size(), kept_off.size());
  for (std::size_t r = 0; r < kept_off.size(); ++r) {
    for (std::size_t c = 0; c < kept_off.size(); ++c) {
      Complex acc = 0.0;
      for (std::size_t t : traced_off) acc += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep) {
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.dims(), sorted);
  std::vector<std::size_t> dims;
  for (std::size_t k : sorted) dims.push_back(rho.dims()[k]);
  return DensityOperator(std::move(reduced), std::move(dims));
}

double von_neumann_entropy(const DensityOperator& rho) {
  double h = 0.0;
  for (double lambda : hermitian_eig(rho.matrix()).eigenvalues) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

}  // namespace switchlab
