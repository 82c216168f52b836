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

// Two qubits exchanging k photons with one cavity mode. The interaction
// Hamiltonian conserves the excitation number, so it is block diagonal in
// the four-state blocks
//
//   block n:  Psi1 = |e1 e2, n-k>   Psi2 = |g1 e2, n>
//             Psi3 = |e1 g2, n>     Psi4 = |g1 g2, n+k>
//
// States with a negative photon index are dropped, which leaves 3-state
// blocks for 0 <= n < k and 1-state blocks (Psi4 only) for -k <= n < 0.

#include <array>
#include <optional>
#include <vector>

#include "tqed/field_states.hpp"
#include "tqed/linalg.hpp"

namespace tqed {

// Two-qubit product basis, in the order used by every 4x4 matrix here.
enum class QubitConfig : int { kEE = 0, kEG = 1, kGE = 2, kGG = 3 };

inline constexpr int kNumConfigs = 4;

// Psi index (0..3 for Psi1..Psi4) -> two-qubit configuration.
inline constexpr std::array<QubitConfig, 4> kPsiConfig = {QubitConfig::kEE, QubitConfig::kGE,
                                                          QubitConfig::kEG, QubitConfig::kGG};

// Photon index of Psi_i in block n, in units of k: n + kPsiPhotonShift[i] * k.
inline constexpr std::array<int, 4> kPsiPhotonShift = {-1, 0, 0, 1};

inline int psi_photon(int psi, int n, int k) { return n + kPsiPhotonShift[psi] * k; }

struct ModelParams {
  double omega = 1.0;
  double omega1 = 1.0;
  double omega2 = 1.0;
  Complex gamma1{1.0, 0.0};
  Complex gamma2{0.0, 0.0};
  double delta = 0.0;
  int k = 1;
  // beta1_i multiplies the ground-level projector of qubit i, beta2_i the
  // excited one; both scale with the photon number and only act for k > 1.
  double beta1_1 = 0.0;
  double beta1_2 = 0.0;
  double beta2_1 = 0.0;
  double beta2_2 = 0.0;

  int theta_flag() const noexcept { return k > 1 ? 1 : 0; }

  // sqrt(beta2_i / beta1_i); empty unless beta1_i > 0.
  std::optional<double> stark_ratio(int qubit) const;

  void validate() const;

  bool operator==(const ModelParams&) const = default;
};

struct AtomPrep {
  double theta1 = 0.0;
  double theta2 = 0.0;

  // Weights of |ee>, |eg>, |ge>, |gg> in the initial diagonal atomic state.
  std::array<double, 4> weights() const;

  bool operator==(const AtomPrep&) const = default;
};

// Psi indices present in block n, ascending.
std::vector<int> block_members(int n, int k);

// Matrix of the interaction Hamiltonian on the members of block n (n >= -k).
ComplexMatrix build_block(const ModelParams& params, int n);

struct BlockEigen {
  int n = 0;
  std::vector<int> members;
  HermitianEigen eig;

  std::size_t dim() const noexcept { return members.size(); }
};

// Diagonalised blocks for n = 0..n_max.
std::vector<BlockEigen> eigen_blocks(const ModelParams& params, int n_max);

// Which (n, v) coefficient blocks an evolution should produce.
enum class PairSelection {
  kAll,
  // Pairs with |n - v| in {0, k, 2k}: enough for every qubit marginal and
  // the interaction energy, but not for the field marginal.
  kQubitMarginals,
};

// Density operator on qubits x field, stored as coefficient matrices
// Omega(n, v) with entries <Psi_i(n)| rho |Psi_z(v)>.
class JointDensity {
 public:
  JointDensity(int k, int max_label);

  int k() const noexcept { return k_; }
  int min_label() const noexcept { return -k_; }
  int max_label() const noexcept { return max_label_; }
  int num_labels() const noexcept { return max_label_ + k_ + 1; }
  // Largest photon number any basis state can carry.
  int max_photon() const noexcept { return max_label_ + k_; }

  const std::vector<int>& members(int n) const { return members_[index(n)]; }

  // Null when the pair is not stored (i.e. identically zero).
  const ComplexMatrix* block(int n, int v) const;
  ComplexMatrix& block_or_insert(int n, int v);

  template <typename Fn>
  void for_each_block(Fn&& fn) const {
    for (int n = min_label(); n <= max_label_; ++n)
      for (int v = min_label(); v <= max_label_; ++v)
        if (const auto* b = block(n, v)) fn(n, v, *b);
  }

  std::size_t stored_blocks() const;

  Complex trace() const;

  // Dense matrix over (configuration, photon), photon 0..max_photon(); row
  // index = config * (max_photon() + 1) + photon.
  ComplexMatrix assemble() const;

  JointDensity& operator+=(const JointDensity& o);
  JointDensity& operator*=(double s);

 private:
  std::size_t index(int n) const;
  std::size_t pair_index(int n, int v) const { return index(n) * num_labels() + index(v); }

  int k_;
  int max_label_;
  std::vector<std::vector<int>> members_;
  std::vector<ComplexMatrix> blocks_;
};

// Label range needed to hold a field with support 0..field_n_max.
inline int max_label_for(int field_n_max, int k) { return field_n_max + k; }

// rho_a(0) (x) |field><field|.
JointDensity initial_joint(const AtomPrep& prep, const FieldState& field, int k);

// |config><config| (x) |field><field|; initial_joint is the weighted sum of
// the four branches, and evolution is linear, so callers that sweep the
// mixing angles can evolve each branch once.
JointDensity initial_branch(QubitConfig config, const FieldState& field, int k);

// exp(-i H_in t) on every block in -k..max_label, from cached eigensystems.
class Propagator {
 public:
  Propagator(const ModelParams& params, int max_label);

  const ModelParams& params() const noexcept { return params_; }
  int max_label() const noexcept { return max_label_; }
  const BlockEigen& block(int n) const { return blocks_.at(static_cast<std::size_t>(n + params_.k)); }

  ComplexMatrix unitary(int n, double t) const;

  // Omega(n, v, t) = U(n) Omega(n, v, 0) U(v)^dagger for each stored pair
  // allowed by `selection`.
  JointDensity evolve(const JointDensity& initial, double t,
                      PairSelection selection = PairSelection::kAll) const;

  // Tr(rho H_in).
  double energy(const JointDensity& rho) const;

 private:
  ModelParams params_;
  int max_label_;
  std::vector<BlockEigen> blocks_;
  std::vector<ComplexMatrix> hamiltonians_;
};

// One-shot exact evolution. Throws ValidationError on non-finite t.
JointDensity evolve_exact(const AtomPrep& prep, const FieldState& field,
                          const ModelParams& params, double t);

}  // namespace tqed
