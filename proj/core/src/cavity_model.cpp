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

#include "tqed/cavity_model.hpp"

#include <cmath>
#include <string>

#include "tqed/error.hpp"

namespace tqed {

namespace {

// sqrt(p! / (p-k)!), zero when p < k.
double ladder_factor(int p, int k) {
  if (p < k) return 0.0;
  double prod = 1.0;
  for (int j = 0; j < k; ++j) prod *= static_cast<double>(p - j);
  return std::sqrt(prod);
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::optional<double> ModelParams::stark_ratio(int qubit) const {
  const double b1 = qubit == 1 ? beta1_1 : beta1_2;
  const double b2 = qubit == 1 ? beta2_1 : beta2_2;
  if (!(b1 > 0.0) || b2 < 0.0) return std::nullopt;
  return std::sqrt(b2 / b1);
}

void ModelParams::validate() const {
  if (k < 1) throw ValidationError("k must be a positive integer, got " + std::to_string(k));
  if (k > 16) throw ValidationError("k larger than 16 is not supported");
  for (double x : {omega, omega1, omega2, delta, beta1_1, beta1_2, beta2_1, beta2_2}) {
    if (!std::isfinite(x)) throw ValidationError("model parameters must be finite");
  }
  if (!finite(gamma1) || !finite(gamma2)) throw ValidationError("couplings must be finite");
}

std::array<double, 4> AtomPrep::weights() const {
  const double c1 = std::cos(theta1) * std::cos(theta1);
  const double s1 = std::sin(theta1) * std::sin(theta1);
  const double c2 = std::cos(theta2) * std::cos(theta2);
  const double s2 = std::sin(theta2) * std::sin(theta2);
  return {c1 * c2, c1 * s2, s1 * c2, s1 * s2};
}

std::vector<int> block_members(int n, int k) {
  std::vector<int> out;
  for (int psi = 0; psi < 4; ++psi)
    if (psi_photon(psi, n, k) >= 0) out.push_back(psi);
  return out;
}

ComplexMatrix build_block(const ModelParams& params, int n) {
  const int k = params.k;
  if (n < -k) throw ValidationError("build_block: block label below -k");
  const std::vector<int> members = block_members(n, k);

  // Dense 4x4 over Psi1..Psi4 first, then restricted to the members.
  ComplexMatrix full(4, 4);
  const double stark = params.theta_flag();
  auto photons = [&](int psi) { return static_cast<double>(psi_photon(psi, n, k)); };
  full(0, 0) = 2.0 * params.delta + stark * photons(0) * (params.beta2_1 + params.beta2_2);
  full(1, 1) = stark * photons(1) * (params.beta1_1 + params.beta2_2);
  full(2, 2) = stark * photons(2) * (params.beta2_1 + params.beta1_2);
  full(3, 3) = -2.0 * params.delta + stark * photons(3) * (params.beta1_1 + params.beta1_2);

  // gamma_i S_eg^(i) a^k lowers the photon number by k while exciting qubit i.
  const double lower = ladder_factor(n, k);      // n -> n-k
  const double upper = ladder_factor(n + k, k);  // n+k -> n
  full(0, 1) = params.gamma1 * lower;
  full(0, 2) = params.gamma2 * lower;
  full(2, 3) = params.gamma1 * upper;
  full(1, 3) = params.gamma2 * upper;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) full(j, i) = std::conj(full(i, j));

  ComplexMatrix out(members.size(), members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      out(i, j) = full(static_cast<std::size_t>(members[i]), static_cast<std::size_t>(members[j]));
  return out;
}

std::vector<BlockEigen> eigen_blocks(const ModelParams& params, int n_max) {
  params.validate();
  if (n_max < params.k) throw ValidationError("eigen_blocks: n_max must be at least k");
  std::vector<BlockEigen> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(BlockEigen{n, block_members(n, params.k), hermitian_eigen(build_block(params, n))});
  }
  return out;
}

// --- JointDensity ---------------------------------------------------------

JointDensity::JointDensity(int k, int max_label) : k_(k), max_label_(max_label) {
  if (k < 1) throw ValidationError("JointDensity: k must be positive");
  if (max_label < -k) throw ValidationError("JointDensity: empty label range");
  members_.reserve(static_cast<std::size_t>(num_labels()));
  for (int n = -k; n <= max_label; ++n) members_.push_back(block_members(n, k));
  blocks_.resize(static_cast<std::size_t>(num_labels()) * static_cast<std::size_t>(num_labels()));
}

std::size_t JointDensity::index(int n) const {
  if (n < -k_ || n > max_label_) {
    throw ValidationError("JointDensity: block label " + std::to_string(n) + " out of range");
  }
  return static_cast<std::size_t>(n + k_);
}

const ComplexMatrix* JointDensity::block(int n, int v) const {
  if (n < -k_ || n > max_label_ || v < -k_ || v > max_label_) return nullptr;
  const ComplexMatrix& b = blocks_[pair_index(n, v)];
  return b.empty() ? nullptr : &b;
}

ComplexMatrix& JointDensity::block_or_insert(int n, int v) {
  ComplexMatrix& b = blocks_[pair_index(n, v)];
  if (b.empty()) b = ComplexMatrix(members(n).size(), members(v).size());
  return b;
}

std::size_t JointDensity::stored_blocks() const {
  std::size_t c = 0;
  for (const auto& b : blocks_) c += b.empty() ? 0 : 1;
  return c;
}

Complex JointDensity::trace() const {
  Complex acc = 0.0;
  for (int n = min_label(); n <= max_label_; ++n)
    if (const auto* b = block(n, n)) acc += b->trace();
  return acc;
}

ComplexMatrix JointDensity::assemble() const {
  const std::size_t photons = static_cast<std::size_t>(max_photon()) + 1;
  ComplexMatrix out(kNumConfigs * photons, kNumConfigs * photons);
  auto global = [&](int psi, int n) {
    return static_cast<std::size_t>(kPsiConfig[psi]) * photons +
           static_cast<std::size_t>(psi_photon(psi, n, k_));
  };
  for_each_block([&](int n, int v, const ComplexMatrix& b) {
    const auto& mn = members(n);
    const auto& mv = members(v);
    for (std::size_t i = 0; i < mn.size(); ++i)
      for (std::size_t z = 0; z < mv.size(); ++z) out(global(mn[i], n), global(mv[z], v)) += b(i, z);
  });
  return out;
}

JointDensity& JointDensity::operator+=(const JointDensity& o) {
  if (o.k_ != k_ || o.max_label_ != max_label_) throw ValidationError("JointDensity: layout mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (o.blocks_[i].empty()) continue;
    if (blocks_[i].empty()) {
      blocks_[i] = o.blocks_[i];
    } else {
      blocks_[i] += o.blocks_[i];
    }
  }
  return *this;
}

JointDensity& JointDensity::operator*=(double s) {
  for (auto& b : blocks_)
    if (!b.empty()) b *= s;
  return *this;
}

// --- initial states ---------------------------------------------------------

namespace {

int psi_of(QubitConfig c) {
  for (int psi = 0; psi < 4; ++psi)
    if (kPsiConfig[psi] == c) return psi;
  return 0;
}

void add_branch(JointDensity& rho, QubitConfig config, const FieldState& field, double weight) {
  if (weight == 0.0) return;
  const int k = rho.k();
  const int psi = psi_of(config);
  auto slot = [&](int n) {
    const auto& m = rho.members(n);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] == psi) return i;
    throw EngineError("initial state: basis state missing from block");
  };
  for (int p = 0; p <= field.n_max(); ++p) {
    const Complex bp = field.amplitude(p);
    if (bp == Complex{}) continue;
    const int n = p - kPsiPhotonShift[psi] * k;
    for (int q = 0; q <= field.n_max(); ++q) {
      const Complex bq = field.amplitude(q);
      if (bq == Complex{}) continue;
      const int v = q - kPsiPhotonShift[psi] * k;
      rho.block_or_insert(n, v)(slot(n), slot(v)) += weight * bp * std::conj(bq);
    }
  }
}

}  // namespace

JointDensity initial_joint(const AtomPrep& prep, const FieldState& field, int k) {
  JointDensity rho(k, max_label_for(field.n_max(), k));
  const auto w = prep.weights();
  for (int c = 0; c < kNumConfigs; ++c) add_branch(rho, static_cast<QubitConfig>(c), field, w[c]);
  return rho;
}

JointDensity initial_branch(QubitConfig config, const FieldState& field, int k) {
  JointDensity rho(k, max_label_for(field.n_max(), k));
  add_branch(rho, config, field, 1.0);
  return rho;
}

// --- Propagator -------------------------------------------------------------

Propagator::Propagator(const ModelParams& params, int max_label)
    : params_(params), max_label_(max_label) {
  params_.validate();
  for (int n = -params_.k; n <= max_label_; ++n) {
    ComplexMatrix h = build_block(params_, n);
    blocks_.push_back(BlockEigen{n, block_members(n, params_.k), hermitian_eigen(h)});
    hamiltonians_.push_back(std::move(h));
  }
}

ComplexMatrix Propagator::unitary(int n, double t) const { return unitary_from_eigen(block(n).eig, t); }

namespace {

bool selected(PairSelection sel, int n, int v, int k) {
  if (sel == PairSelection::kAll) return true;
  const int d = std::abs(n - v);
  return d == 0 || d == k || d == 2 * k;
}

}  // namespace

JointDensity Propagator::evolve(const JointDensity& initial, double t, PairSelection selection) const {
  if (!std::isfinite(t)) throw ValidationError("evolve: time must be finite");
  if (initial.k() != params_.k || initial.max_label() > max_label_) {
    throw ValidationError("evolve: state layout does not match the propagator");
  }
  std::vector<ComplexMatrix> u;
  u.reserve(static_cast<std::size_t>(initial.num_labels()));
  for (int n = initial.min_label(); n <= initial.max_label(); ++n) u.push_back(unitary(n, t));
  auto u_of = [&](int n) -> const ComplexMatrix& { return u[static_cast<std::size_t>(n + params_.k)]; };

  JointDensity out(initial.k(), initial.max_label());
  initial.for_each_block([&](int n, int v, const ComplexMatrix& b) {
    if (!selected(selection, n, v, params_.k)) return;
    out.block_or_insert(n, v) = u_of(n) * b * u_of(v).adjoint();
  });
  return out;
}

double Propagator::energy(const JointDensity& rho) const {
  double e = 0.0;
  for (int n = rho.min_label(); n <= rho.max_label(); ++n) {
    const auto* b = rho.block(n, n);
    if (!b) continue;
    e += ((*b) * hamiltonians_[static_cast<std::size_t>(n + params_.k)]).trace().real();
  }
  return e;
}

JointDensity evolve_exact(const AtomPrep& prep, const FieldState& field, const ModelParams& params,
                          double t) {
  if (!std::isfinite(t)) throw ValidationError("evolve_exact: time must be finite");
  const JointDensity initial = initial_joint(prep, field, params.k);
  if (t == 0.0) return initial;
  const Propagator prop(params, initial.max_label());
  return prop.evolve(initial, t);
}

}  // namespace tqed
