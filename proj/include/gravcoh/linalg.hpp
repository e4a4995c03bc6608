// Copyright 2026 The gravcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

#include "gravcoh/tolerances.hpp"

namespace gravcoh {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Every entry is finite; constructors and
/// arithmetic reject NaN/Inf with InvalidInput.
class ComplexMatrix {
 public:
  /// rows x cols zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-by-row literal, e.g. `ComplexMatrix{{1, 0}, {0, 1}}`.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  Complex trace() const;
  /// Entrywise complex conjugate (no transpose).
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void check_finite() const;

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product. Row/column index of the result is i_a * dim_b + i_b,
/// so `a` is the high-order factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// max_ij |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - conj(a_ji)|.
double hermiticity_residual(const ComplexMatrix& a);

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws InvalidInput for non-square or non-Hermitian input and
/// NumericalFailure if the sweep cap is reached.
Spectrum hermitian_eig(const ComplexMatrix& a, const Tolerances& tol = kDefaultTolerances);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          const Tolerances& tol = kDefaultTolerances);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a, const Tolerances& tol = kDefaultTolerances);

}  // namespace gravcoh
