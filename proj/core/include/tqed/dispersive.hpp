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

// Closed-form propagation when the second qubit is weakly coupled. Qubit 1
// undergoes two-level dynamics inside each excitation block, qubit 2 only
// contributes a photon-number dependent shift and never changes state.

#include <array>

#include "tqed/cavity_model.hpp"

namespace tqed {

struct DispersiveCoeffs {
  Complex a{1.0, 0.0};  // amplitude that stays in the qubit-1-excited state
  Complex b{};          // amplitude transferred to the qubit-1-ground state
  double mu = 0.0;      // half the effective Rabi splitting
  double g = 0.0;       // common frequency shift of the block
  int n = 0;
  double t = 0.0;
  // Set when gamma2/gamma1 > 0.5, i.e. outside the weak-coupling regime.
  bool regime_warning = false;
};

inline constexpr double kDispersiveRegimeRatio = 0.5;

// A_n^t and B_n^t for the transition between photon numbers n-k and n:
//   mu_n = sqrt(gamma2^2/4 + gamma1^2 n!/(n-k)!),  g_n = delta + gamma2 (n + k/2),
//   A = exp(-i t (g-mu)) / 2 * [1 + gamma2/(2 mu) + exp(-2 i mu t) (1 - gamma2/(2 mu))],
//   B = -gamma1/(2 mu) sqrt(n!/(n-k)!) exp(-i t (g-mu)) [1 - exp(-2 i mu t)].
// Couplings must be real. Rejects n < 0 and non-finite t.
DispersiveCoeffs dispersive_coefficients(const ModelParams& params, int n, double t);

struct DispersiveDensity {
  JointDensity rho;
  // |Tr rho - 1|, reported rather than corrected.
  double trace_deviation = 0.0;
  bool regime_warning = false;
};

// Coefficient map of the weak-coupling solution. Only Omega11, Omega12,
// Omega22 (Psi1/Psi2 sector) and Omega33, Omega34, Omega44 (Psi3/Psi4 sector)
// and their adjoints are populated; the two sectors never mix.
DispersiveDensity dispersive_density(const AtomPrep& prep, const FieldState& field,
                                     const ModelParams& params, double t,
                                     PairSelection selection = PairSelection::kAll);

// Same, with the branch weights (ee, eg, ge, gg) given directly.
DispersiveDensity dispersive_density(const std::array<double, 4>& weights, const FieldState& field,
                                     const ModelParams& params, double t,
                                     PairSelection selection = PairSelection::kAll);

}  // namespace tqed
