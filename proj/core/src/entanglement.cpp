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

#include "tqed/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tqed/dispersive.hpp"
#include "tqed/error.hpp"

namespace tqed {

namespace {

constexpr double kNegativeEigenTolerance = 1e-10;
constexpr double kNegativeConcurrenceClamp = 1e-10;

const ComplexMatrix& sigma_yy() {
  static const ComplexMatrix m = [] {
    const ComplexMatrix sy(2, 2, {0.0, -kI, kI, 0.0});
    return kron(sy, sy);
  }();
  return m;
}

}  // namespace

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw ValidationError("spin_flip: expected a 4x4 matrix");
  return sigma_yy() * rho.conj() * sigma_yy();
}

ConcurrenceResult concurrence_mixed(const TwoQubitDensity& rho) {
  const ComplexMatrix r = hermitian_part(rho.matrix);
  const ComplexMatrix root = psd_sqrt(r);
  const ComplexMatrix sandwich = hermitian_part(root * spin_flip(r) * root);
  const HermitianEigen eig = hermitian_eigen(sandwich);

  ConcurrenceResult out;
  for (std::size_t i = 0; i < 4; ++i) {
    const double ev = eig.values[3 - i];
    if (ev < -kNegativeEigenTolerance) {
      std::ostringstream os;
      os << "concurrence_mixed: eigenvalue " << ev << " of rho * spin_flip(rho) is negative";
      throw EngineError(os.str());
    }
    out.lambdas[i] = std::sqrt(std::max(ev, 0.0));
  }
  double c = out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3];
  if (c < 0.0 && c >= -kNegativeConcurrenceClamp) c = 0.0;
  out.value = std::max(0.0, c);
  return out;
}

double entanglement_of_formation(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw ValidationError("entanglement_of_formation: c outside [0, 1]");
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double plus = 0.5 * (1.0 + root);
  const double minus = 0.5 * (1.0 - root);
  auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return term(plus) + term(minus);
}

PureBipartiteState::PureBipartiteState(int local_dim, int photons, std::vector<Complex> amplitudes)
    : d_(local_dim), photons_(photons), amp_(std::move(amplitudes)) {
  if (d_ < 1 || photons_ < 1) throw ValidationError("PureBipartiteState: empty dimensions");
  if (amp_.size() != static_cast<std::size_t>(d_ * d_ * photons_)) {
    throw ValidationError("PureBipartiteState: amplitude count does not match d*d*photons");
  }
  double norm = 0.0;
  for (const auto& a : amp_) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw ValidationError("PureBipartiteState: state is not normalised");
  }
}

PureConcurrence concurrence_pure_both(const PureBipartiteState& psi) {
  const int d = psi.local_dim();
  const int photons = psi.photons();

  // Subsystem A is the first local index; B is the second local index
  // together with the photon number.
  ComplexMatrix rho_a(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (int b = 0; b < d; ++b)
        for (int n = 0; n < photons; ++n) acc += psi(i, b, n) * std::conj(psi(j, b, n));
      rho_a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
    }
  double purity = 0.0;
  for (const auto& z : rho_a.data()) purity += std::norm(z);

  // Minors over every pair of first indices and every pair of (second
  // index, photon) labels: sum |psi_ik psi_jm - psi_im psi_jk|^2.
  double minors = 0.0;
  const int cols = d * photons;
  auto at = [&](int i, int col) { return psi(i, col / photons, col % photons); };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int a = 0; a < cols; ++a)
        for (int b = 0; b < cols; ++b)
          minors += std::norm(at(i, a) * at(j, b) - at(i, b) * at(j, a));

  PureConcurrence out;
  out.from_purity = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
  out.from_minors = std::sqrt(minors);
  if (std::abs(out.from_purity - out.from_minors) > 1e-10) {
    throw EngineError("concurrence_pure: purity and minor expressions disagree");
  }
  return out;
}

double concurrence_pure(const PureBipartiteState& psi) { return concurrence_pure_both(psi).from_purity; }

double concurrence_analytic(const ModelParams& params, const FieldState& field, double theta, double t) {
  const int k = params.k;
  double sum = 0.0;
  for (int n = k; n <= field.n_max(); ++n) {
    const double weight = std::norm(field.amplitude(n)) * std::norm(field.amplitude(n - k));
    if (weight == 0.0) continue;
    const auto lo = dispersive_coefficients(params, n, t);
    const auto hi = dispersive_coefficients(params, n + k, t);
    sum += weight * std::norm(lo.a * std::conj(hi.b) - lo.b * std::conj(hi.a));
  }
  return std::abs(0.5 * std::sin(2.0 * theta)) * std::sqrt(sum);
}

}  // namespace tqed
