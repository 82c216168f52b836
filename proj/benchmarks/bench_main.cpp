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

#include <benchmark/benchmark.h>

#include <random>

#include "tqed/cavity_model.hpp"
#include "tqed/dispersive.hpp"
#include "tqed/entanglement.hpp"
#include "tqed/field_states.hpp"
#include "tqed/linalg.hpp"
#include "tqed/observables.hpp"

namespace {

using namespace tqed;

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex{g(rng), g(rng)};
  return hermitian_part(m);
}

void BM_HermitianEigen(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen)->Arg(4)->Arg(16)->Arg(52);

ModelParams bench_params(int k) {
  ModelParams p;
  p.k = k;
  p.gamma1 = 1.0;
  p.gamma2 = 0.2;
  return p;
}

void BM_ExactEvolve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto field = binomial_amplitudes(0.7, m);
  const auto p = bench_params(1);
  const auto rho0 = initial_joint(AtomPrep{0.0, 0.78}, field, 1);
  const Propagator prop(p, rho0.max_label());
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(prop.evolve(rho0, t, PairSelection::kQubitMarginals));
  }
}
BENCHMARK(BM_ExactEvolve)->Arg(20)->Arg(70);

void BM_DispersiveDensity(benchmark::State& state) {
  const auto field = binomial_amplitudes(0.7, static_cast<int>(state.range(0)));
  const auto p = bench_params(1);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(dispersive_density(AtomPrep{0.0, 0.78}, field, p, t, PairSelection::kQubitMarginals));
  }
}
BENCHMARK(BM_DispersiveDensity)->Arg(20)->Arg(70);

void BM_ConcurrenceMixed(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto m = random_hermitian(rng, 4);
  m = m * m;
  Complex tr = 0.0;
  for (std::size_t i = 0; i < 4; ++i) tr += m(i, i);
  m *= 1.0 / tr.real();
  const TwoQubitDensity rho{m};
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_mixed(rho));
}
BENCHMARK(BM_ConcurrenceMixed);

}  // namespace
BENCHMARK_MAIN();
