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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "tqed/cavity_model.hpp"
#include "tqed/error.hpp"

namespace tqed {
namespace {

ModelParams random_params(std::mt19937_64& rng, int k) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ModelParams p;
  p.k = k;
  p.gamma1 = {1.0 + 0.3 * u(rng), 0.2 * u(rng)};
  p.gamma2 = {0.5 * u(rng), 0.2 * u(rng)};
  p.delta = u(rng);
  p.beta1_1 = 0.3 * u(rng);
  p.beta1_2 = 0.3 * u(rng);
  p.beta2_1 = 0.3 * u(rng);
  p.beta2_2 = 0.3 * u(rng);
  return p;
}

std::vector<double> spectrum(const ComplexMatrix& m) { return hermitian_eigen(hermitian_part(m)).values; }

TEST(BuildBlock, DecoupledLimitIsDetuningDiagonal) {
  ModelParams p;
  p.gamma1 = p.gamma2 = Complex{};
  p.delta = 0.7;
  const auto b = build_block(p, 3);
  ASSERT_EQ(b.rows(), 4u);
  const std::vector<double> expect = {1.4, 0.0, 0.0, -1.4};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(b(i, j), i == j ? Complex(expect[i], 0.0) : Complex{});
}

TEST(BuildBlock, EdgeBlocksDropNegativePhotonStates) {
  ModelParams p;
  EXPECT_EQ(build_block(p, 0).rows(), 3u);
  EXPECT_EQ(build_block(p, -1).rows(), 1u);
  EXPECT_EQ(build_block(p, 1).rows(), 4u);
  p.k = 3;
  for (int n = -3; n < 0; ++n) EXPECT_EQ(build_block(p, n).rows(), 1u);
  for (int n = 0; n < 3; ++n) EXPECT_EQ(build_block(p, n).rows(), 3u);
  EXPECT_EQ(build_block(p, 3).rows(), 4u);
  EXPECT_EQ(block_members(0, 1), (std::vector<int>{1, 2, 3}));
}

TEST(BuildBlock, ResonantSpectrumIsSymmetric) {
  ModelParams p;
  p.gamma1 = p.gamma2 = Complex{1.0, 0.0};
  auto ev = spectrum(build_block(p, 1));
  for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], -ev[ev.size() - 1 - i], 1e-12);
}

TEST(BuildBlock, MatchesFullSpaceOperatorAlgebra) {
  std::mt19937_64 rng(21);
  for (int k : {1, 2, 3}) {
    const ModelParams p = random_params(rng, k);
    const int photons = 12;
    const auto h = oracle::full_hamiltonian(p, photons);
    for (int n = -k; n + k < photons; ++n) {
      const auto members = block_members(n, k);
      const auto b = build_block(p, n);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
          const auto ri = static_cast<std::size_t>(static_cast<int>(kPsiConfig[members[i]]) * photons +
                                                   psi_photon(members[i], n, k));
          const auto rj = static_cast<std::size_t>(static_cast<int>(kPsiConfig[members[j]]) * photons +
                                                   psi_photon(members[j], n, k));
          EXPECT_LT(std::abs(b(i, j) - h(ri, rj)), 1e-12) << "k=" << k << " n=" << n << " (" << i << "," << j << ")";
        }
    }
  }
}

TEST(EigenBlocks, CountsAndDimensions) {
  ModelParams p;
  p.k = 2;
  const auto blocks = eigen_blocks(p, 5);
  ASSERT_EQ(blocks.size(), 6u);
  EXPECT_EQ(blocks[0].dim(), 3u);
  EXPECT_EQ(blocks[1].dim(), 3u);
  for (std::size_t i = 2; i < 6; ++i) EXPECT_EQ(blocks[i].dim(), 4u);
  EXPECT_THROW(eigen_blocks(p, 1), ValidationError);
}

TEST(EigenBlocks, IdenticalResonantAtomsClosedForm) {
  // Symmetric combination of the singly excited states couples with sqrt(2)
  // times the single-atom element; the antisymmetric one is dark.
  ModelParams p;
  const double g = 0.8;
  p.gamma1 = p.gamma2 = Complex{g, 0.0};
  for (const auto& b : eigen_blocks(p, 20)) {
    if (b.dim() != 4) continue;
    const double w = g * std::sqrt(2.0 * (2 * b.n + 1));
    const std::vector<double> expect = {-w, 0.0, 0.0, w};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(b.eig.values[i], expect[i], 1e-11) << "n=" << b.n;
  }
}

TEST(EigenBlocks, ReconstructionAndUnitarity) {
  std::mt19937_64 rng(22);
  const ModelParams p = random_params(rng, 2);
  for (const auto& b : eigen_blocks(p, 30)) {
    const auto& v = b.eig.vectors;
    EXPECT_LT(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(b.dim())), 1e-10);
    const auto back = v * ComplexMatrix::diagonal(std::span<const double>(b.eig.values)) * v.adjoint();
    EXPECT_LT(max_abs_diff(back, build_block(p, b.n)), 1e-10);
  }
}

TEST(InitialJoint, BranchWeights) {
  const auto f = binomial_amplitudes(0.3, 4);
  const auto rho = initial_joint(AtomPrep{0.0, M_PI / 4}, f, 1);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-15);
  const auto full = rho.assemble();
  const auto q = oracle::trace_field(full, rho.max_photon() + 1);
  EXPECT_NEAR(q(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(q(1, 1).real(), 0.5, 1e-15);
  EXPECT_EQ(q(2, 2), Complex{});
  EXPECT_EQ(q(3, 3), Complex{});

  const auto only_ee = initial_joint(AtomPrep{0.0, 0.0}, f, 2).assemble();
  const auto q2 = oracle::trace_field(only_ee, 2 * 2 + f.n_max() + 1);
  EXPECT_NEAR(q2(0, 0).real(), 1.0, 1e-15);
}

TEST(InitialJoint, MatchesFullSpaceConstruction) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int k : {1, 2}) {
    const auto f = binomial_amplitudes(0.45, 3);
    const AtomPrep prep{ang(rng), ang(rng)};
    const auto rho = initial_joint(prep, f, k);
    const int photons = rho.max_photon() + 1;
    EXPECT_LT(max_abs_diff(rho.assemble(), oracle::full_initial(prep, f, photons)), 1e-15);
    const auto w = prep.weights();
    EXPECT_NEAR(w[0] + w[1] + w[2] + w[3], 1.0, 1e-15);
  }
}

TEST(EvolveExact, TimeZeroIsInitialState) {
  const auto f = binomial_amplitudes(0.5, 3);
  ModelParams p;
  p.gamma2 = 0.3;
  const AtomPrep prep{0.4, 1.1};
  EXPECT_TRUE(evolve_exact(prep, f, p, 0.0).assemble() == initial_joint(prep, f, 1).assemble());
  const Propagator prop(p, max_label_for(f.n_max(), 1));
  EXPECT_LT(max_abs_diff(prop.evolve(initial_joint(prep, f, 1), 0.0).assemble(), initial_joint(prep, f, 1).assemble()),
            1e-15);
}

TEST(EvolveExact, MatchesDenseExponentialOracle) {
  std::mt19937_64 rng(24);
  for (int k : {1, 2, 3}) {
    for (int rep = 0; rep < 3; ++rep) {
      const ModelParams p = random_params(rng, k);
      const auto f = binomial_amplitudes(0.6, 2 + rep);
      const AtomPrep prep{0.3 * rep + 0.2, 0.9 - 0.2 * rep};
      const int photons = f.n_max() + 2 * k + 1;
      const auto h = oracle::full_hamiltonian(p, photons);
      const auto rho0 = oracle::full_initial(prep, f, photons);
      for (double t : {0.1, 1.0, 5.0}) {
        const auto lib = evolve_exact(prep, f, p, t).assemble();
        const auto ref = oracle::evolve_full(h, rho0, t);
        EXPECT_LT(max_abs_diff(lib, ref), 1e-10) << "k=" << k << " t=" << t;
      }
    }
  }
}

TEST(EvolveExact, ConservationLaws) {
  std::mt19937_64 rng(25);
  const ModelParams p = random_params(rng, 1);
  const auto f = binomial_amplitudes(0.5, 10);
  const AtomPrep prep{0.7, 0.3};
  const auto rho0 = initial_joint(prep, f, 1);
  const Propagator prop(p, rho0.max_label());
  const auto spec0 = spectrum(rho0.assemble());
  const double e0 = prop.energy(rho0);
  const int photons = rho0.max_photon() + 1;
  const auto h = oracle::full_hamiltonian(p, photons);
  EXPECT_NEAR(e0, (rho0.assemble() * h).trace().real(), 1e-12);
  for (double t : {0.5, 3.0, 40.0}) {
    const auto rho = prop.evolve(rho0, t);
    const auto full = rho.assemble();
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
    EXPECT_LT(hermiticity_defect(full), 1e-11);
    const auto spec = spectrum(full);
    for (std::size_t i = 0; i < spec.size(); ++i) EXPECT_NEAR(spec[i], spec0[i], 1e-9);
    EXPECT_NEAR(prop.energy(rho), e0, 1e-9);
    EXPECT_EQ(rho.stored_blocks(), rho0.stored_blocks());
  }
}

TEST(EvolveExact, MarginalSelectionPreservesQubitReduction) {
  std::mt19937_64 rng(26);
  for (int k : {1, 2}) {
    const ModelParams p = random_params(rng, k);
    const auto f = binomial_amplitudes(0.4, 6);
    const auto rho0 = initial_joint(AtomPrep{0.5, 0.8}, f, k);
    const Propagator prop(p, rho0.max_label());
    const int photons = rho0.max_photon() + 1;
    const auto all = oracle::trace_field(prop.evolve(rho0, 2.5).assemble(), photons);
    const auto sel = oracle::trace_field(prop.evolve(rho0, 2.5, PairSelection::kQubitMarginals).assemble(), photons);
    EXPECT_LT(max_abs_diff(all, sel), 1e-14);
  }
}

TEST(EvolveExact, BranchLinearity) {
  std::mt19937_64 rng(27);
  const ModelParams p = random_params(rng, 1);
  const auto f = binomial_amplitudes(0.5, 5);
  const AtomPrep prep{0.6, 1.2};
  const auto w = prep.weights();
  const Propagator prop(p, max_label_for(f.n_max(), 1));
  JointDensity sum(1, prop.max_label());
  for (int c = 0; c < 4; ++c) {
    auto part = prop.evolve(initial_branch(static_cast<QubitConfig>(c), f, 1), 1.7);
    part *= w[static_cast<std::size_t>(c)];
    sum += part;
  }
  EXPECT_LT(max_abs_diff(sum.assemble(), prop.evolve(initial_joint(prep, f, 1), 1.7).assemble()), 1e-14);
}

TEST(EvolveExact, RejectsNonFiniteTime) {
  const auto f = binomial_amplitudes(0.5, 2);
  EXPECT_THROW(evolve_exact(AtomPrep{}, f, ModelParams{}, std::numeric_limits<double>::infinity()), ValidationError);
  EXPECT_THROW(evolve_exact(AtomPrep{}, f, ModelParams{}, std::nan("")), ValidationError);
}

TEST(ModelParams, DerivedQuantities) {
  ModelParams p;
  EXPECT_EQ(p.theta_flag(), 0);
  p.k = 2;
  EXPECT_EQ(p.theta_flag(), 1);
  EXPECT_FALSE(p.stark_ratio(1).has_value());
  p.beta1_1 = 2.0;
  p.beta2_1 = 0.98;
  ASSERT_TRUE(p.stark_ratio(1).has_value());
  EXPECT_NEAR(*p.stark_ratio(1), 0.7, 1e-15);
  p.k = 0;
  EXPECT_THROW(p.validate(), ValidationError);
}

}  // namespace
}  // namespace tqed
