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

#include <array>
#include <vector>

#include "tqed/cavity_model.hpp"
#include "tqed/field_states.hpp"
#include "tqed/observables.hpp"

namespace tqed {

// (sigma_y x sigma_y) rho* (sigma_y x sigma_y) in the fixed product basis.
ComplexMatrix spin_flip(const ComplexMatrix& rho);

struct ConcurrenceResult {
  double value = 0.0;
  // Square roots of the eigenvalues of rho * spin_flip(rho), descending.
  std::array<double, 4> lambdas{};
};

// Wootters concurrence. The eigenvalues of rho * spin_flip(rho) are taken
// from the Hermitian matrix sqrt(rho) spin_flip(rho) sqrt(rho), which has the
// same spectrum. Throws EngineError if that spectrum dips below -1e-10.
ConcurrenceResult concurrence_mixed(const TwoQubitDensity& rho);

// Binary entropy of (1 + sqrt(1 - c^2)) / 2; c must lie in [0, 1].
double entanglement_of_formation(double c);

// Pure state sum_{i,j,n} psi_ij(n) |i, j, n> with local dimension d.
class PureBipartiteState {
 public:
  PureBipartiteState(int local_dim, int photons, std::vector<Complex> amplitudes);

  int local_dim() const noexcept { return d_; }
  int photons() const noexcept { return photons_; }
  Complex operator()(int i, int j, int n) const {
    return amp_[static_cast<std::size_t>((i * d_ + j) * photons_ + n)];
  }

 private:
  int d_;
  int photons_;
  std::vector<Complex> amp_;
};

struct PureConcurrence {
  double from_purity = 0.0;       // sqrt(2 (1 - Tr rho_A^2))
  double from_minors = 0.0;       // sqrt(sum |psi_ik psi_jm - psi_im psi_jk|^2)
};

// Both forms; they are required to agree within 1e-10 (EngineError otherwise).
PureConcurrence concurrence_pure_both(const PureBipartiteState& psi);
double concurrence_pure(const PureBipartiteState& psi);

// Closed form for qubit 1 initially excited and qubit 2 mixed with angle
// theta, from the weak-coupling coefficients:
//   C = |sin(2 theta)/2| sqrt(sum_n b_n^2 b_{n-k}^2 |A_n B*_{n+k} - B_n A*_{n+k}|^2)
double concurrence_analytic(const ModelParams& params, const FieldState& field, double theta, double t);

}  // namespace tqed
