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

#include "tqed/field_states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tqed/error.hpp"

namespace tqed {

FieldState::FieldState(FieldKind kind, std::vector<Complex> amplitudes)
    : kind_(std::move(kind)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw ValidationError("FieldState: empty amplitude vector");
}

double FieldState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

double FieldState::mean_photon_number() const {
  double s = 0.0;
  for (std::size_t n = 0; n < amplitudes_.size(); ++n) s += static_cast<double>(n) * std::norm(amplitudes_[n]);
  return s;
}

FieldState binomial_amplitudes(double eta, int m) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw ValidationError("binomial_amplitudes: eta must lie in [0, 1], got " + std::to_string(eta));
  }
  if (m < 0) throw ValidationError("binomial_amplitudes: m must be non-negative");
  std::vector<Complex> amp(static_cast<std::size_t>(m) + 1);
  if (eta == 0.0) {
    amp.front() = 1.0;
  } else if (eta == 1.0) {
    amp.back() = 1.0;
  } else {
    const double log_eta = std::log(eta);
    const double log_rest = std::log1p(-eta);
    const double lg_m = std::lgamma(m + 1.0);
    for (int n = 0; n <= m; ++n) {
      const double log_p = lg_m - std::lgamma(n + 1.0) - std::lgamma(m - n + 1.0) + n * log_eta +
                           (m - n) * log_rest;
      amp[static_cast<std::size_t>(n)] = std::exp(0.5 * log_p);
    }
  }
  return FieldState(BinomialKind{eta, m}, std::move(amp));
}

FieldState number_state(int m) {
  if (m < 0) throw ValidationError("number_state: m must be non-negative");
  std::vector<Complex> amp(static_cast<std::size_t>(m) + 1);
  amp.back() = 1.0;
  return FieldState(NumberKind{m}, std::move(amp));
}

namespace {

std::vector<Complex> coherent_vector(Complex alpha, int n_max) {
  std::vector<Complex> amp(static_cast<std::size_t>(n_max) + 1);
  const double r = std::abs(alpha);
  const double phi = std::arg(alpha);
  for (int n = 0; n <= n_max; ++n) {
    if (r == 0.0) {
      amp[static_cast<std::size_t>(n)] = n == 0 ? 1.0 : 0.0;
      continue;
    }
    const double log_mag = -0.5 * r * r + n * std::log(r) - 0.5 * std::lgamma(n + 1.0);
    amp[static_cast<std::size_t>(n)] = std::polar(std::exp(log_mag), n * phi);
  }
  return amp;
}

double deficit(const std::vector<Complex>& amp) {
  double s = 0.0;
  for (const auto& a : amp) s += std::norm(a);
  return 1.0 - s;
}

}  // namespace

int coherent_min_n_max(Complex alpha) {
  int n = 0;
  while (deficit(coherent_vector(alpha, n)) >= kCoherentDeficitLimit) {
    ++n;
    if (n > 100000) throw ValidationError("coherent_min_n_max: |alpha| too large");
  }
  return n;
}

FieldState coherent_amplitudes(Complex alpha, int n_max) {
  if (n_max < 0) throw ValidationError("coherent_amplitudes: n_max must be non-negative");
  auto amp = coherent_vector(alpha, n_max);
  const double d = deficit(amp);
  if (d >= kCoherentDeficitLimit) {
    throw ValidationError("coherent_amplitudes: truncation deficit " + std::to_string(d) +
                          " at n_max=" + std::to_string(n_max) + "; need n_max >= " +
                          std::to_string(coherent_min_n_max(alpha)));
  }
  return FieldState(CoherentKind{alpha}, std::move(amp));
}

double fidelity(const FieldState& a, const FieldState& b) {
  const int n = std::min(a.n_max(), b.n_max());
  Complex overlap = 0.0;
  for (int i = 0; i <= n; ++i) overlap += std::conj(a.amplitude(i)) * b.amplitude(i);
  return std::min(1.0, std::norm(overlap));
}

FieldDensity pure_density(const FieldState& s) {
  const std::size_t d = s.amplitudes().size();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = s.amplitudes()[i] * std::conj(s.amplitudes()[j]);
  return FieldDensity{std::move(m)};
}

}  // namespace tqed
