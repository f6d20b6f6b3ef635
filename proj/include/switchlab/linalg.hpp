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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace switchlab {

using Complex = std::complex<double>;

/// A state vector in the computational basis.
using Ket = std::vector<Complex>;

/// Dense row-major complex matrix. Entries are finite at construction.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  /// |a><b|
  static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);
  /// |v><v|
  static ComplexMatrix projector(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const Complex> entries() const { return entries_; }

  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  /// max |A - A^dagger| <= tol
  bool is_hermitian(double tol) const;
  /// max |A^dagger A - I| <= tol
  bool is_unitary(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend Ket operator*(const ComplexMatrix& a, std::span<const Complex> v);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

inline Ket operator*(const ComplexMatrix& a, const Ket& v) {
  return a * std::span<const Complex>(v);
}

/// <a|b>, antilinear in the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);
Ket normalized(Ket v);
/// Basis vector |index> of dimension dim.
Ket basis_ket(std::size_t dim, std::size_t index);
Ket kron(std::span<const Complex> a, std::span<const Complex> b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product: (i*rows_b + k, j*cols_b + l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues ascending; eigenvectors are the columns of a unitary matrix.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  /// V diag(lambda) V^dagger
  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Throws std::invalid_argument for non-Hermitian input
/// (tolerance 1e-10, max-entry).
HermitianEigen hermitian_eig(const ComplexMatrix& h);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

/// Hermitian, unit-trace, positive semidefinite matrix with tensor-factor
/// dimensions. Index 0 of dims is the leftmost factor.
class DensityOperator {
 public:
  static constexpr double kTolerance = 1e-10;

  DensityOperator(ComplexMatrix matrix, std::vector<std::size_t> dims);
  /// Single-factor convenience constructor.
  explicit DensityOperator(ComplexMatrix matrix);

  /// |v><v| for a unit-norm v.
  static DensityOperator pure(std::span<const Complex> v, std::vector<std::size_t> dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim() const { return matrix_.rows(); }
  Complex operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  double purity() const;

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
};

/// Partial trace over every factor not listed in keep. The kept factors retain
/// their original order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep);
inline DensityOperator partial_trace(const DensityOperator& rho,
                                     std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

/// -sum lambda log2 lambda over clamped eigenvalues.
double von_neumann_entropy(const DensityOperator& rho);

}  // namespace switchlab
