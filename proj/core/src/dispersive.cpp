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

#include "tqed/dispersive.hpp"

#include <cmath>
#include <string>

#include "tqed/error.hpp"

namespace tqed {

namespace {

void check_real_couplings(const ModelParams& p) {
  if (p.gamma1.imag() != 0.0 || p.gamma2.imag() != 0.0) {
    throw ValidationError("dispersive engine requires real couplings gamma1, gamma2");
  }
}

bool outside_regime(const ModelParams& p) {
  const double g1 = std::abs(p.gamma1.real());
  const double g2 = std::abs(p.gamma2.real());
  if (g2 == 0.0) return false;
  return g1 == 0.0 || g2 / g1 > kDispersiveRegimeRatio;
}

DispersiveCoeffs coefficients_unchecked(const ModelParams& p, int n, double t) {
  const int k = p.k;
  const double g1 = p.gamma1.real();
  const double g2 = p.gamma2.real();
  // n!/(n-k)!, zero below the k-photon threshold. A direct product of k
  // integers stays exact far longer than a log-gamma difference.
  double ladder_sq = n < k ? 0.0 : 1.0;
  for (int j = 0; j < k && n >= k; ++j) ladder_sq *= static_cast<double>(n - j);

  DispersiveCoeffs c;
  c.n = n;
  c.t = t;
  c.mu = std::sqrt(0.25 * g2 * g2 + g1 * g1 * ladder_sq);
  c.g = p.delta + g2 * (n + 0.5 * k);
  c.regime_warning = outside_regime(p);
  if (t == 0.0) {
    c.a = 1.0;
    c.b = 0.0;
    return c;
  }
  if (c.mu == 0.0) {
    c.a = std::exp(-kI * (c.g * t));
    c.b = 0.0;
    return c;
  }
  const Complex lead = std::exp(-kI * (t * (c.g - c.mu)));
  const Complex osc = std::exp(-2.0 * kI * (c.mu * t));
  const double x = g2 / (2.0 * c.mu);
  c.a = 0.5 * lead * ((1.0 + x) + osc * (1.0 - x));
  c.b = -(g1 / (2.0 * c.mu)) * std::sqrt(ladder_sq) * lead * (1.0 - osc);
  return c;
}

// Per-index propagator entries: first column (A, B) is the evolution of the
// qubit-1-excited member of a sector, second column (B, D) of the ground one.
struct SectorPropagator {
  Complex a{}, b{}, d{};
};

}  // namespace

DispersiveCoeffs dispersive_coefficients(const ModelParams& params, int n, double t) {
  params.validate();
  check_real_couplings(params);
  if (n < 0) throw ValidationError("dispersive_coefficients: photon index must be non-negative");
  if (!std::isfinite(t)) throw ValidationError("dispersive_coefficients: time must be finite");
  return coefficients_unchecked(params, n, t);
}

DispersiveDensity dispersive_density(const AtomPrep& prep, const FieldState& field,
                                     const ModelParams& params, double t, PairSelection selection) {
  return dispersive_density(prep.weights(), field, params, t, selection);
}

DispersiveDensity dispersive_density(const std::array<double, 4>& w, const FieldState& field,
                                     const ModelParams& params, double t, PairSelection selection) {
  params.validate();
  check_real_couplings(params);
  if (!std::isfinite(t)) throw ValidationError("dispersive_density: time must be finite");
  const int k = params.k;
  const int max_label = max_label_for(field.n_max(), k);

  // Index range touched: n-k .. n+k over all labels.
  std::vector<SectorPropagator> prop(static_cast<std::size_t>(max_label + k + 1));
  for (int n = 0; n <= max_label + k; ++n) {
    const auto c = coefficients_unchecked(params, n, t);
    prop[static_cast<std::size_t>(n)] = {c.a, c.b, std::exp(-2.0 * kI * (c.g * t)) * std::conj(c.a)};
  }
  auto at = [&](int n) { return n < 0 ? SectorPropagator{} : prop[static_cast<std::size_t>(n)]; };
  auto b = [&](int n) { return field.amplitude(n); };

  const double w_ee = w[0], w_eg = w[1], w_ge = w[2], w_gg = w[3];

  DispersiveDensity out{JointDensity(k, max_label), 0.0, outside_regime(params)};
  for (int n = -k; n <= max_label; ++n) {
    for (int l = -k; l <= max_label; ++l) {
      if (selection == PairSelection::kQubitMarginals) {
        const int d = std::abs(n - l);
        if (d != 0 && d != k && d != 2 * k) continue;
      }
      const SectorPropagator pn = at(n), pl = at(l);
      const SectorPropagator qn = at(n + k), ql = at(l + k);
      // Field amplitudes entering each branch.
      const Complex ee = b(n - k) * std::conj(b(l - k));
      const Complex mid = b(n) * std::conj(b(l));
      const Complex gg = b(n + k) * std::conj(b(l + k));

      ComplexMatrix omega(4, 4);
      omega(0, 0) = pn.a * std::conj(pl.a) * ee * w_ee + pn.b * std::conj(pl.b) * mid * w_ge;
      omega(0, 1) = pn.a * std::conj(pl.b) * ee * w_ee + pn.b * std::conj(pl.d) * mid * w_ge;
      omega(1, 0) = pn.b * std::conj(pl.a) * ee * w_ee + pn.d * std::conj(pl.b) * mid * w_ge;
      omega(1, 1) = pn.b * std::conj(pl.b) * ee * w_ee + pn.d * std::conj(pl.d) * mid * w_ge;
      omega(2, 2) = qn.a * std::conj(ql.a) * mid * w_eg + qn.b * std::conj(ql.b) * gg * w_gg;
      omega(2, 3) = qn.a * std::conj(ql.b) * mid * w_eg + qn.b * std::conj(ql.d) * gg * w_gg;
      omega(3, 2) = qn.b * std::conj(ql.a) * mid * w_eg + qn.d * std::conj(ql.b) * gg * w_gg;
      omega(3, 3) = qn.b * std::conj(ql.b) * mid * w_eg + qn.d * std::conj(ql.d) * gg * w_gg;

      const auto& mn = out.rho.members(n);
      const auto& ml = out.rho.members(l);
      bool any = false;
      for (int i : mn)
        for (int z : ml) any = any || omega(static_cast<std::size_t>(i), static_cast<std::size_t>(z)) != Complex{};
      if (!any) continue;
      ComplexMatrix& blk = out.rho.block_or_insert(n, l);
      for (std::size_t i = 0; i < mn.size(); ++i)
        for (std::size_t z = 0; z < ml.size(); ++z)
          blk(i, z) = omega(static_cast<std::size_t>(mn[i]), static_cast<std::size_t>(ml[z]));
    }
  }
  out.trace_deviation = std::abs(out.rho.trace() - 1.0);
  return out;
}

}  // namespace tqed
