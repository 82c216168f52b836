// Copyright 2026 The tqed Authors
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

// Dense complex linear algebra for the small matrices of this library
// (excitation blocks of dimension <= 4, two-qubit states, and assembled
// full-space operators of a few hundred rows in tests).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tqed {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> d);
  static ComplexMatrix diagonal(std::span<const Complex> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |a_ij - b_ij|; matrices must have the same shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |M_ij - conj(M_ji)|.
double hermiticity_defect(const ComplexMatrix& m);

inline constexpr double kHermitianTolerance = 1e-12;

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);

// (M + M^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column l is the eigenvector of values[l]
};

// Cyclic Jacobi diagonalisation. Rejects non-square input and input whose
// Hermiticity defect exceeds 1e-12 (the message names the offending pair).
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

// Hermitian square root of a positive semidefinite matrix. Eigenvalues in
// [-1e-12, 0) are clamped to zero; anything more negative is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// Roots of the characteristic polynomial of a general 4x4 matrix.
std::vector<Complex> eigvals_general_4x4(const ComplexMatrix& m);

// exp(-i t H) for Hermitian H via its eigendecomposition.
ComplexMatrix unitary_from_eigen(const HermitianEigen& eig, double t);

}  // namespace tqed
