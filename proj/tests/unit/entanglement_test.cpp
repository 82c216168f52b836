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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tqed/dispersive.hpp"
#include "tqed/entanglement.hpp"
#include "tqed/error.hpp"

namespace tqed {
namespace {

constexpr double kPi = std::numbers::pi;

TwoQubitDensity pure(const std::array<Complex, 4>& psi) {
  TwoQubitDensity r{ComplexMatrix(4, 4)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r.matrix(i, j) = psi[i] * std::conj(psi[j]);
  return r;
}

TwoQubitDensity bell() {
  const double s = 1.0 / std::sqrt(2.0);
  return pure({s, 0.0, 0.0, s});
}

TwoQubitDensity werner(double p) {
  TwoQubitDensity r = bell();
  r.matrix *= p;
  r.matrix += ComplexMatrix::identity(4) * Complex{(1.0 - p) / 4.0, 0.0};
  return r;
}

ComplexMatrix sigma_yy() {
  const ComplexMatrix sy(2, 2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0});
  return kron(sy, sy);
}

// Wootters value from long-double eigenvalues of rho * flipped(rho); valid
// when the product is Hermitian, as for Werner states.
double werner_oracle(const TwoQubitDensity& r) {
  const auto yy = sigma_yy();
  const ComplexMatrix flipped = yy * r.matrix.conj() * yy;
  auto ev = oracle::hermitian_eigenvalues_ld(hermitian_part(r.matrix * flipped));
  std::vector<long double> l;
  for (auto v : ev) l.push_back(std::sqrt(std::max(0.0L, v)));
  std::sort(l.rbegin(), l.rend());
  return static_cast<double>(std::max(0.0L, l[0] - l[1] - l[2] - l[3]));
}

TEST(SpinFlip, KnownActions) {
  EXPECT_LT(max_abs_diff(spin_flip(bell().matrix), bell().matrix), 1e-15);
  const auto ee = pure({1.0, 0.0, 0.0, 0.0});
  const auto gg = pure({0.0, 0.0, 0.0, 1.0});
  EXPECT_LT(max_abs_diff(spin_flip(ee.matrix), gg.matrix), 1e-15);
  std::mt19937_64 rng(41);
  const auto r = oracle::random_density(rng, 4);
  EXPECT_LT(max_abs_diff(spin_flip(spin_flip(r)), r), 1e-14);
  const auto yy = sigma_yy();
  EXPECT_LT(max_abs_diff(spin_flip(r), yy * r.conj() * yy), 1e-15);
}

TEST(ConcurrenceMixed, BellAndProduct) {
  EXPECT_NEAR(concurrence_mixed(bell()).value, 1.0, 1e-10);
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = oracle::random_density(rng, 2);
    const auto b = oracle::random_density(rng, 2);
    EXPECT_LT(concurrence_mixed(TwoQubitDensity{kron(a, b)}).value, 1e-10);
  }
}

TEST(ConcurrenceMixed, WernerSweepAgainstExtendedPrecision) {
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const auto r = werner(p);
    const double c = concurrence_mixed(r).value;
    EXPECT_NEAR(c, std::max(0.0, (3 * p - 1) / 2), 1e-9);
    EXPECT_NEAR(c, werner_oracle(r), 1e-9);
  }
  EXPECT_NEAR(concurrence_mixed(werner(0.8)).value, 0.7, 1e-12);
}

TEST(ConcurrenceMixed, AgreesWithNonHermitianEigenvalues) {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 100; ++rep) {
    const TwoQubitDensity r{oracle::random_density(rng, 4)};
    const ComplexMatrix prod = r.matrix * spin_flip(r.matrix);
    std::vector<double> l;
    for (const auto& z : eigvals_general_4x4(prod)) l.push_back(std::sqrt(std::max(0.0, z.real())));
    std::sort(l.rbegin(), l.rend());
    const auto res = concurrence_mixed(r);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(res.lambdas[i], l[i], 1e-7);
    EXPECT_NEAR(res.value, std::max(0.0, l[0] - l[1] - l[2] - l[3]), 1e-7);
    EXPECT_TRUE(std::is_sorted(res.lambdas.rbegin(), res.lambdas.rend()));
  }
}

TEST(ConcurrenceMixed, PureStateClosedForm) {
  std::mt19937_64 rng(44);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 100; ++rep) {
    std::array<Complex, 4> psi;
    double norm = 0.0;
    for (auto& z : psi) {
      z = {g(rng), g(rng)};
      norm += std::norm(z);
    }
    for (auto& z : psi) z /= std::sqrt(norm);
    const double expect = 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    EXPECT_NEAR(concurrence_mixed(pure(psi)).value, expect, 1e-7);
    const PureBipartiteState s(2, 1, {psi.begin(), psi.end()});
    EXPECT_NEAR(concurrence_pure(s), expect, 1e-10);
  }
}

TEST(ConcurrenceMixed, LocalUnitaryInvariance) {
  std::mt19937_64 rng(45);
  for (int rep = 0; rep < 50; ++rep) {
    const TwoQubitDensity r{oracle::random_density(rng, 4)};
    TwoQubitDensity mix = werner(0.9);
    mix.matrix *= 0.7;
    mix.matrix += r.matrix * Complex{0.3, 0.0};
    const auto u = kron(oracle::random_unitary(rng, 2), oracle::random_unitary(rng, 2));
    const TwoQubitDensity rotated{hermitian_part(u * mix.matrix * u.adjoint())};
    EXPECT_NEAR(concurrence_mixed(mix).value, concurrence_mixed(rotated).value, 1e-9);
  }
}

TEST(ConcurrenceMixed, RejectsNonPhysicalInput) {
  TwoQubitDensity bad{ComplexMatrix(4, 4)};
  bad.matrix(0, 0) = 1.0;
  bad.matrix(3, 3) = 1.0;
  bad.matrix(0, 3) = bad.matrix(3, 0) = 2.0;
  EXPECT_ANY_THROW(concurrence_mixed(bad));
}

TEST(EntanglementOfFormation, Values) {
  EXPECT_EQ(entanglement_of_formation(0.0), 0.0);
  EXPECT_NEAR(entanglement_of_formation(1.0), 1.0, 1e-15);
  const double h = -0.9 * std::log2(0.9) - 0.1 * std::log2(0.1);
  EXPECT_NEAR(entanglement_of_formation(0.6), h, 1e-14);
  EXPECT_NEAR(h, 0.46900, 1e-5);
  double previous = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double e = entanglement_of_formation(i / 1000.0);
    EXPECT_GE(e, previous);
    EXPECT_LE(e, 1.0);
    previous = e;
  }
  EXPECT_THROW(entanglement_of_formation(1.2), ValidationError);
  EXPECT_THROW(entanglement_of_formation(-0.1), ValidationError);
}

TEST(ConcurrencePure, ProductBellAndRandomWithPhotons) {
  std::vector<Complex> product(2 * 2 * 3, Complex{});
  product[(0 * 2 + 1) * 3 + 2] = 1.0;
  EXPECT_EQ(concurrence_pure(PureBipartiteState(2, 3, product)), 0.0);

  std::vector<Complex> b(2 * 2 * 4, Complex{});
  b[(0 * 2 + 0) * 4 + 2] = b[(1 * 2 + 1) * 4 + 2] = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(concurrence_pure(PureBipartiteState(2, 4, b)), 1.0, 1e-12);

  std::mt19937_64 rng(46);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Complex> amps(2 * 2 * 5);
    double norm = 0.0;
    for (auto& z : amps) {
      z = {g(rng), g(rng)};
      norm += std::norm(z);
    }
    for (auto& z : amps) z /= std::sqrt(norm);
    const auto both = concurrence_pure_both(PureBipartiteState(2, 5, amps));
    EXPECT_NEAR(both.from_purity, both.from_minors, 1e-10);
  }
  EXPECT_THROW(PureBipartiteState(2, 1, {1.0, 1.0, 0.0, 0.0}), ValidationError);
}

ModelParams fig_params(int k = 1) {
  ModelParams p;
  p.k = k;
  p.gamma1 = 1.0;
  p.gamma2 = 0.2;
  return p;
}

TEST(ConcurrenceAnalytic, ZerosAndSymmetry) {
  const auto f = binomial_amplitudes(0.5, 20);
  for (int k : {1, 2}) {
    const auto p = fig_params(k);
    for (double t : {0.4, 3.3, 12.0}) {
      EXPECT_LT(concurrence_analytic(p, f, 0.0, t), 1e-15);
      EXPECT_LT(concurrence_analytic(p, f, kPi / 2, t), 1e-8);
      for (double th : {0.1, 0.5, 1.2})
        EXPECT_NEAR(concurrence_analytic(p, f, th, t), concurrence_analytic(p, f, -th, t), 1e-10);
    }
    EXPECT_EQ(concurrence_analytic(p, f, kPi / 4, 0.0), 0.0);
  }
}

TEST(ConcurrenceAnalytic, PrefactorPeaksAtQuarterPi) {
  const auto f = binomial_amplitudes(0.5, 20);
  const auto p = fig_params(1);
  const double t = 2.0;
  const double top = concurrence_analytic(p, f, kPi / 4, t);
  for (double th : {0.2, 0.5, 1.0, 1.3}) {
    const double c = concurrence_analytic(p, f, th, t);
    EXPECT_LE(c, top + 1e-15);
    EXPECT_NEAR(c, top * std::abs(std::sin(2 * th)), 1e-13);
  }
}

TEST(ConcurrenceAnalytic, SumMatchesDirectCoefficientEvaluation) {
  const auto f = binomial_amplitudes(0.5, 20);
  for (int k : {1, 2}) {
    const auto p = fig_params(k);
    const double t = 1.7, th = 0.6;
    double sum = 0.0;
    for (int n = k; n <= f.n_max(); ++n) {
      const auto cn = dispersive_coefficients(p, n, t);
      const auto cnk = dispersive_coefficients(p, n + k, t);
      sum += std::norm(f.amplitude(n)) * std::norm(f.amplitude(n - k)) *
             std::norm(cn.a * std::conj(cnk.b) - cn.b * std::conj(cnk.a));
    }
    EXPECT_NEAR(concurrence_analytic(p, f, th, t), std::abs(std::sin(2 * th)) / 2 * std::sqrt(sum), 1e-14);
  }
}

}  // namespace
}  // namespace tqed
