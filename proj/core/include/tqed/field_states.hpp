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

#include <cstddef>
#include <variant>
#include <vector>

#include "tqed/linalg.hpp"

namespace tqed {

struct BinomialKind {
  double eta = 0.0;
  int m = 0;
  bool operator==(const BinomialKind&) const = default;
};

struct NumberKind {
  int m = 0;
  bool operator==(const NumberKind&) const = default;
};

struct CoherentKind {
  Complex alpha{};
  bool operator==(const CoherentKind&) const = default;
};

using FieldKind = std::variant<BinomialKind, NumberKind, CoherentKind>;

// Pure single-mode field state on Fock indices 0..n_max.
class FieldState {
 public:
  FieldState(FieldKind kind, std::vector<Complex> amplitudes);

  const FieldKind& kind() const noexcept { return kind_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  int n_max() const noexcept { return static_cast<int>(amplitudes_.size()) - 1; }

  // Amplitude of |n>; zero outside 0..n_max (including negative n).
  Complex amplitude(int n) const noexcept {
    return (n < 0 || n > n_max()) ? Complex{} : amplitudes_[static_cast<std::size_t>(n)];
  }

  double norm_squared() const;
  double mean_photon_number() const;

 private:
  FieldKind kind_;
  std::vector<Complex> amplitudes_;
};

// Field density operator over Fock indices 0..n_max.
struct FieldDensity {
  ComplexMatrix matrix;
  int n_max() const noexcept { return static_cast<int>(matrix.rows()) - 1; }
};

// sqrt(C(m,n) eta^n (1-eta)^(m-n)) for 0 <= n <= m; exactly m+1 amplitudes.
FieldState binomial_amplitudes(double eta, int m);

FieldState number_state(int m);

inline constexpr double kCoherentDeficitLimit = 1e-10;

// e^{-|alpha|^2/2} alpha^n / sqrt(n!) for n <= n_max. Throws ValidationError
// (with the smallest adequate n_max in the message) when the truncated norm
// falls short of one by more than 1e-10.
FieldState coherent_amplitudes(Complex alpha, int n_max);

// Smallest n_max for which coherent_amplitudes(alpha, n_max) is accepted.
int coherent_min_n_max(Complex alpha);

// |<a|b>|^2, zero-padding the shorter state.
double fidelity(const FieldState& a, const FieldState& b);

FieldDensity pure_density(const FieldState& s);

}  // namespace tqed
