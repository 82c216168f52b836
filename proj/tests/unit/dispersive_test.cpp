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

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "tqed/dispersive.hpp"
#include "tqed/error.hpp"
#include "tqed/observables.hpp"

namespace tqed {
namespace {

using LD = long double;
using CLD = std::complex<long double>;

ModelParams weak_second(double g2 = 0.2, int k = 1) {
  ModelParams p;
  p.k = k;
  p.gamma1 = 1.0;
  p.gamma2 = g2;
  return p;
}

// Trigonometric form of the coefficients in extended precision.
std::pair<CLD, CLD> reference_ab(const ModelParams& p, int n, LD t) {
  LD ladder = 1;
  for (int i = 0; i < p.k; ++i) ladder *= (n - i);
  if (n < p.k) ladder = 0;
  const LD g1 = p.gamma1.real(), g2 = p.gamma2.real();
  const LD mu = std::sqrt(g2 * g2 / 4 + g1 * g1 * ladder);
  const LD g = p.delta + g2 * (n + p.k / 2.0L);
  const CLD phase = std::exp(CLD(0, -g * t));
  const CLD a = phase * CLD(std::cos(mu * t), g2 / (2 * mu) * std::sin(mu * t));
  const CLD b = phase * CLD(0, -g1 * std::sqrt(ladder) / mu * std::sin(mu * t));
  return {a, b};
}

TEST(DispersiveCoefficients, IdentityAtTimeZero) {
  for (int n : {0, 1, 5, 70}) {
    const auto c = dispersive_coefficients(weak_second(), n, 0.0);
    EXPECT_EQ(c.a, Complex(1.0, 0.0));
    EXPECT_EQ(c.b, Complex{});
  }
}

TEST(DispersiveCoefficients, DecoupledFirstQubit) {
  ModelParams p = weak_second();
  p.gamma1 = 0.0;
  for (double t : {0.3, 2.0, 11.0}) {
    const auto c = dispersive_coefficients(p, 4, t);
    EXPECT_EQ(c.b, Complex{});
    EXPECT_NEAR(std::abs(c.a), 1.0, 1e-15);
  }
}

TEST(DispersiveCoefficients, RateAndShiftMatchExtendedPrecision) {
  const ModelParams p = weak_second(0.2);
  const auto c = dispersive_coefficients(p, 14, 1.3);
  const LD mu = std::sqrt(0.04L / 4 + 14.0L);
  EXPECT_NEAR(c.mu, static_cast<double>(mu), 1e-14);
  EXPECT_NEAR(c.g, 0.2 * 14.5, 1e-14);
  for (int k : {1, 2, 3}) {
    const ModelParams q = weak_second(0.2, k);
    for (int n : {0, 2, 9, 40})
      for (double t : {0.1, 2.5, 17.0}) {
        const auto got = dispersive_coefficients(q, n, t);
        const auto [a, b] = reference_ab(q, n, t);
        EXPECT_LT(std::abs(CLD(got.a) - a), 1e-12L) << k << " " << n << " " << t;
        EXPECT_LT(std::abs(CLD(got.b) - b), 1e-12L) << k << " " << n << " " << t;
      }
  }
}

TEST(DispersiveCoefficients, NormPreserving) {
  for (int n = 0; n < 30; ++n) {
    const auto c = dispersive_coefficients(weak_second(0.3, 2), n, 0.77 * n);
    EXPECT_NEAR(std::norm(c.a) + std::norm(c.b), 1.0, 1e-13);
  }
}

TEST(DispersiveCoefficients, ContinuityLadder) {
  const ModelParams p = weak_second();
  const auto c0 = dispersive_coefficients(p, 10, 3.0);
  double previous = 1.0;
  for (double h : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const auto c1 = dispersive_coefficients(p, 10, 3.0 + h);
    const double step = std::abs(c1.a - c0.a) + std::abs(c1.b - c0.b);
    // Lipschitz constant bounded by g + 2 mu.
    EXPECT_LT(step, (c0.g + 2.0 * c0.mu + 1.0) * h);
    EXPECT_LT(step, previous);
    previous = step;
  }
}

TEST(DispersiveCoefficients, RegimeFlagAndErrors) {
  EXPECT_FALSE(dispersive_coefficients(weak_second(0.2), 1, 1.0).regime_warning);
  EXPECT_TRUE(dispersive_coefficients(weak_second(0.8), 1, 1.0).regime_warning);
  EXPECT_THROW(dispersive_coefficients(weak_second(), -1, 1.0), ValidationError);
  ModelParams p = weak_second();
  p.gamma2 = Complex{0.2, 0.1};
  EXPECT_THROW(dispersive_coefficients(p, 1, 1.0), ValidationError);
}

TEST(DispersiveDensity, TimeZeroIsInitialJoint) {
  const auto f = binomial_amplitudes(0.4, 6);
  for (int k : {1, 2}) {
    const AtomPrep prep{0.5, 1.0};
    const auto d = dispersive_density(prep, f, weak_second(0.2, k), 0.0);
    EXPECT_LT(max_abs_diff(d.rho.assemble(), initial_joint(prep, f, k).assemble()), 1e-15);
  }
}

TEST(DispersiveDensity, BothExcitedPopulatesOnlyFirstSector) {
  const auto f = binomial_amplitudes(0.5, 8);
  const auto d = dispersive_density(AtomPrep{0.0, 0.0}, f, weak_second(), 2.3);
  d.rho.for_each_block([&](int n, int v, const ComplexMatrix& b) {
    const auto& mn = d.rho.members(n);
    const auto& mv = d.rho.members(v);
    for (std::size_t i = 0; i < mn.size(); ++i)
      for (std::size_t j = 0; j < mv.size(); ++j)
        if (mn[i] > 1 || mv[j] > 1) EXPECT_EQ(b(i, j), Complex{}) << n << "," << v;
  });
}

TEST(DispersiveDensity, SectorStructureAndHermiticity) {
  const auto f = binomial_amplitudes(0.5, 8);
  const auto d = dispersive_density(AtomPrep{0.4, 0.9}, f, weak_second(0.1, 2), 4.1);
  d.rho.for_each_block([&](int n, int v, const ComplexMatrix& b) {
    const auto& mn = d.rho.members(n);
    const auto& mv = d.rho.members(v);
    for (std::size_t i = 0; i < mn.size(); ++i)
      for (std::size_t j = 0; j < mv.size(); ++j)
        if ((mn[i] < 2) != (mv[j] < 2)) EXPECT_EQ(b(i, j), Complex{});
  });
  EXPECT_LT(hermiticity_defect(d.rho.assemble()), 1e-15);
  EXPECT_LT(d.trace_deviation, 1e-12);
}

TEST(DispersiveDensity, WeightsOverloadMatchesAngles) {
  const auto f = binomial_amplitudes(0.3, 5);
  const AtomPrep prep{0.2, 1.3};
  const auto a = dispersive_density(prep, f, weak_second(), 1.9);
  const auto b = dispersive_density(prep.weights(), f, weak_second(), 1.9);
  EXPECT_TRUE(a.rho.assemble() == b.rho.assemble());
}

// Weak, far-detuned second qubit: the closed form should track the exact
// two-qubit state to within a 0.05 approximation budget.
TEST(DispersiveDensity, AgreesWithExactEvolutionInDispersiveRegime) {
  ModelParams p;
  p.gamma1 = 1.0;
  p.gamma2 = 0.01;
  p.delta = 20.0;
  const auto f = binomial_amplitudes(0.5, 4);
  const AtomPrep prep{0.0, M_PI / 4};
  double worst = 0.0;
  for (int i = 1; i <= 40; ++i) {
    const double t = 0.25 * i;
    const auto approx = reduce_to_qubits(dispersive_density(prep, f, p, t).rho);
    const auto exact = reduce_to_qubits(evolve_exact(prep, f, p, t));
    worst = std::max(worst, max_abs_diff(approx.matrix, exact.matrix));
  }
  EXPECT_LE(worst, 0.05);
}

}  // namespace
}  // namespace tqed
