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

#include "tqed/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tqed/error.hpp"
#include "tqed/parallel.hpp"

namespace tqed {

namespace {

std::size_t config_index(int psi) { return static_cast<std::size_t>(kPsiConfig[psi]); }

void check_which(int which) {
  if (which != 1 && which != 2) throw ValidationError("qubit index must be 1 or 2");
}

}  // namespace

TwoQubitDensity reduce_to_qubits(const JointDensity& rho) {
  const int k = rho.k();
  ComplexMatrix out(4, 4);
  rho.for_each_block([&](int n, int v, const ComplexMatrix& b) {
    const int d = std::abs(n - v);
    if (d != 0 && d != k && d != 2 * k) return;
    const auto& mn = rho.members(n);
    const auto& mv = rho.members(v);
    for (std::size_t i = 0; i < mn.size(); ++i)
      for (std::size_t z = 0; z < mv.size(); ++z)
        if (psi_photon(mn[i], n, k) == psi_photon(mv[z], v, k))
          out(config_index(mn[i]), config_index(mv[z])) += b(i, z);
  });
  return TwoQubitDensity{std::move(out)};
}

ComplexMatrix reduce_to_qubit(const TwoQubitDensity& rho, int which) {
  check_which(which);
  // config index = 2 * q1 + q2 with e = 0, g = 1.
  ComplexMatrix out(2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t other = 0; other < 2; ++other) {
        const std::size_t r = which == 1 ? 2 * a + other : 2 * other + a;
        const std::size_t c = which == 1 ? 2 * b + other : 2 * other + b;
        out(a, b) += rho.matrix(r, c);
      }
  return out;
}

ComplexMatrix reduce_to_qubit(const JointDensity& rho, int which) {
  return reduce_to_qubit(reduce_to_qubits(rho), which);
}

double inversion(const TwoQubitDensity& rho, int which) {
  const ComplexMatrix q = reduce_to_qubit(rho, which);
  return 0.5 * (q(0, 0).real() - q(1, 1).real());
}

double inversion(const JointDensity& rho, int which) { return inversion(reduce_to_qubits(rho), which); }

double total_inversion(const TwoQubitDensity& rho) {
  return 0.5 * (inversion(rho, 1) + inversion(rho, 2));
}

double total_inversion(const JointDensity& rho) { return total_inversion(reduce_to_qubits(rho)); }

FieldDensity reduce_to_field(const JointDensity& rho) {
  const int k = rho.k();
  const std::size_t photons = static_cast<std::size_t>(rho.max_photon()) + 1;
  ComplexMatrix out(photons, photons);
  rho.for_each_block([&](int n, int v, const ComplexMatrix& b) {
    const auto& mn = rho.members(n);
    const auto& mv = rho.members(v);
    for (std::size_t i = 0; i < mn.size(); ++i)
      for (std::size_t z = 0; z < mv.size(); ++z)
        if (kPsiConfig[mn[i]] == kPsiConfig[mv[z]])
          out(static_cast<std::size_t>(psi_photon(mn[i], n, k)),
              static_cast<std::size_t>(psi_photon(mv[z], v, k))) += b(i, z);
  });
  return FieldDensity{std::move(out)};
}

namespace {

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 2) throw ValidationError("grid axes need at least two points");
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
  return out;
}

}  // namespace

QGrid husimi_q(const FieldDensity& rho_f, const GridAxes& axes) {
  if (!(axes.x_max > axes.x_min) || !(axes.y_max > axes.y_min)) {
    throw ValidationError("husimi_q: empty grid range");
  }
  QGrid q;
  q.x_axis = linspace(axes.x_min, axes.x_max, axes.x_points);
  q.y_axis = linspace(axes.y_min, axes.y_max, axes.y_points);
  const int n_max = rho_f.n_max();
  const double reach = std::sqrt(static_cast<double>(n_max)) + 3.0;
  const double covered = std::min({-axes.x_min, axes.x_max, -axes.y_min, axes.y_max});
  q.coverage_warning = covered < reach;

  const std::size_t nx = q.x_axis.size();
  const std::size_t photons = static_cast<std::size_t>(n_max) + 1;
  std::vector<double> log_fact_half(photons);
  for (std::size_t n = 0; n < photons; ++n) log_fact_half[n] = 0.5 * std::lgamma(n + 1.0);

  q.values.assign(nx * q.y_axis.size(), 0.0);
  parallel_for(q.y_axis.size(), [&](std::size_t iy) {
    std::vector<Complex> c(photons);  // <n|zeta>
    std::vector<Complex> rc(photons);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const Complex zeta(q.x_axis[ix], q.y_axis[iy]);
      const double r = std::abs(zeta);
      const double phi = std::arg(zeta);
      for (std::size_t n = 0; n < photons; ++n) {
        if (r == 0.0) {
          c[n] = n == 0 ? 1.0 : 0.0;
        } else {
          c[n] = std::polar(std::exp(-0.5 * r * r + n * std::log(r) - log_fact_half[n]), n * phi);
        }
      }
      double acc = 0.0;
      for (std::size_t n = 0; n < photons; ++n) {
        Complex row = 0.0;
        for (std::size_t l = 0; l < photons; ++l) row += rho_f.matrix(n, l) * c[l];
        acc += (std::conj(c[n]) * row).real();
      }
      q.values[iy * nx + ix] = acc / std::numbers::pi;
    }
  });
  return q;
}

double riemann_sum(const QGrid& q) {
  const double dx = q.x_axis[1] - q.x_axis[0];
  const double dy = q.y_axis[1] - q.y_axis[0];
  double s = 0.0;
  for (double v : q.values) s += v;
  return s * dx * dy;
}

std::vector<std::pair<std::size_t, std::size_t>> local_maxima(const QGrid& q, double fraction) {
  const std::size_t nx = q.x_axis.size();
  const std::size_t ny = q.y_axis.size();
  const double top = *std::max_element(q.values.begin(), q.values.end());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t iy = 1; iy + 1 < ny; ++iy) {
    for (std::size_t ix = 1; ix + 1 < nx; ++ix) {
      const double v = q.at(ix, iy);
      if (v < fraction * top) continue;
      bool peak = true;
      for (int dy = -1; dy <= 1 && peak; ++dy)
        for (int dx = -1; dx <= 1 && peak; ++dx)
          if ((dx || dy) && q.at(ix + dx, iy + dy) > v) peak = false;
      if (peak) out.emplace_back(ix, iy);
    }
  }
  return out;
}

}  // namespace tqed
