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

#include "tqed/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tqed/error.hpp"

namespace tqed {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw ValidationError("ComplexMatrix: entry count does not match shape");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
  return acc;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("ComplexMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("ComplexMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("ComplexMatrix: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.square()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_defect(m) < tol; }

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out = m + m.adjoint();
  out *= 0.5;
  return out;
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffNormTarget = 1e-14;

void check_hermitian_input(const ComplexMatrix& m, const char* who) {
  if (m.empty() || !m.square()) {
    std::ostringstream os;
    os << who << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw ValidationError(os.str());
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      const double d = std::abs(m(i, j) - std::conj(m(j, i)));
      if (!(d < kHermitianTolerance)) {
        std::ostringstream os;
        os.precision(3);
        os << who << ": matrix is not Hermitian, |M(" << i << "," << j << ") - conj(M(" << j
           << "," << i << "))| = " << d;
        throw ValidationError(os.str());
      }
    }
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  check_hermitian_input(m, "hermitian_eigen");
  const std::size_t n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Absolute target for O(1) matrices, relative for larger ones.
  const double target = kOffNormTarget * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const Complex phase = a(p, q) / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex s_pq = s * phase;             // J(p,q)
        const Complex s_qp = -s * std::conj(phase);  // J(q,p)

        for (std::size_t r = 0; r < n; ++r) {
          const Complex arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp + s_qp * arq;
          a(r, q) = s_pq * arp + c * arq;
          const Complex vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp + s_qp * vrq;
          v(r, q) = s_pq * vrp + c * vrq;
        }
        for (std::size_t col = 0; col < n; ++col) {
          const Complex apc = a(p, col), aqc = a(q, col);
          a(p, col) = c * apc + std::conj(s_qp) * aqc;
          a(q, col) = std::conj(s_pq) * apc + c * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (off_diagonal_norm(a) > 1e3 * target) {
    throw EngineError("hermitian_eigen: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t l = 0; l < n; ++l) {
    out.values[l] = a(order[l], order[l]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, l) = v(r, order[l]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const HermitianEigen eig = hermitian_eigen(m);
  const std::size_t n = m.rows();
  std::vector<double> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lam = eig.values[i];
    if (lam < -1e-12) {
      std::ostringstream os;
      os << "psd_sqrt: matrix is not positive semidefinite (eigenvalue " << lam << ")";
      throw ValidationError(os.str());
    }
    roots[i] = std::sqrt(std::max(lam, 0.0));
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < n; ++l)
        acc += eig.vectors(i, l) * roots[l] * std::conj(eig.vectors(j, l));
      out(i, j) = acc;
    }
  return hermitian_part(out);
}

std::vector<Complex> eigvals_general_4x4(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw ValidationError("eigvals_general_4x4: expected 4x4");

  // Faddeev-LeVerrier: char poly x^4 + c[3] x^3 + c[2] x^2 + c[1] x + c[0].
  std::array<Complex, 5> c{};
  c[4] = 1.0;
  ComplexMatrix mk(4, 4);
  const ComplexMatrix id = ComplexMatrix::identity(4);
  for (int k = 1; k <= 4; ++k) {
    mk = m * mk + c[5 - k] * id;
    c[4 - k] = -(m * mk).trace() / static_cast<double>(k);
  }

  double scale = 0.0;
  for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(c[i]));
  if (scale == 0.0) return std::vector<Complex>(4, Complex{});

  auto poly = [&](Complex z) { return (((z + c[3]) * z + c[2]) * z + c[1]) * z + c[0]; };
  auto dpoly = [&](Complex z) { return ((4.0 * z + 3.0 * c[3]) * z + 2.0 * c[2]) * z + c[1]; };

  // Aberth-Ehrlich simultaneous iteration from a rotated circle inside the
  // Cauchy bound.
  const double radius = 1.0 + scale;
  std::vector<Complex> z(4);
  for (int i = 0; i < 4; ++i) z[i] = std::polar(0.5 * radius, 0.4 + 2.0 * M_PI * i / 4.0);

  for (int iter = 0; iter < 2000; ++iter) {
    double biggest_step = 0.0;
    for (int i = 0; i < 4; ++i) {
      const Complex p = poly(z[i]);
      if (p == Complex{}) continue;
      const Complex ratio = p / dpoly(z[i]);
      Complex repulse = 0.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) repulse += 1.0 / (z[i] - z[j]);
      Complex step = ratio / (1.0 - ratio * repulse);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      biggest_step = std::max(biggest_step, std::abs(step));
    }
    double biggest_root = 0.0;
    for (const auto& r : z) biggest_root = std::max(biggest_root, std::abs(r));
    if (biggest_step <= 1e-16 * std::max(1e-300, biggest_root)) break;
  }
  return z;
}

ComplexMatrix unitary_from_eigen(const HermitianEigen& eig, double t) {
  const std::size_t n = eig.values.size();
  std::vector<Complex> phase(n);
  for (std::size_t l = 0; l < n; ++l) phase[l] = std::exp(-kI * (eig.values[l] * t));
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < n; ++l)
        acc += eig.vectors(i, l) * phase[l] * std::conj(eig.vectors(j, l));
      out(i, j) = acc;
    }
  return out;
}

}  // namespace tqed
