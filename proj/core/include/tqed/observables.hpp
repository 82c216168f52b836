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

#include <vector>

#include "tqed/cavity_model.hpp"
#include "tqed/field_states.hpp"

namespace tqed {

// 4x4 state in the basis |e1e2>, |e1g2>, |g1e2>, |g1g2>.
struct TwoQubitDensity {
  ComplexMatrix matrix;
};

// Field traced out. Only pairs of basis states with equal photon numbers
// contribute, which couples blocks n and v with |n - v| in {0, k, 2k}.
TwoQubitDensity reduce_to_qubits(const JointDensity& rho);

// 2x2 state of qubit `which` (1 or 2) in the basis |e>, |g>.
ComplexMatrix reduce_to_qubit(const JointDensity& rho, int which);
ComplexMatrix reduce_to_qubit(const TwoQubitDensity& rho, int which);

// (rho[e,e] - rho[g,g]) / 2 for qubit `which`.
double inversion(const JointDensity& rho, int which);
double inversion(const TwoQubitDensity& rho, int which);

// Mean of the two single-qubit inversions.
double total_inversion(const JointDensity& rho);
double total_inversion(const TwoQubitDensity& rho);

// Both qubits traced out; Fock indices 0..rho.max_photon().
FieldDensity reduce_to_field(const JointDensity& rho);

struct GridAxes {
  double x_min = -12.0;
  double x_max = 12.0;
  int x_points = 201;
  double y_min = -12.0;
  double y_max = 12.0;
  int y_points = 201;

  static GridAxes square(double extent, int points) {
    return GridAxes{-extent, extent, points, -extent, extent, points};
  }
};

struct QGrid {
  std::vector<double> x_axis;
  std::vector<double> y_axis;
  // values[iy * x_axis.size() + ix] = Q(x_axis[ix], y_axis[iy])
  std::vector<double> values;
  // Set when the grid does not reach radius sqrt(n_max) + 3 in every direction.
  bool coverage_warning = false;

  double at(std::size_t ix, std::size_t iy) const { return values[iy * x_axis.size() + ix]; }
};

// Q(x, y) = <zeta| rho_F |zeta> / pi with zeta = x + i y.
QGrid husimi_q(const FieldDensity& rho_f, const GridAxes& axes);

// Sum of Q dx dy over the grid.
double riemann_sum(const QGrid& q);

// Points that are >= all 8 neighbours (edges excluded) and >= `fraction` of
// the global maximum; returned as (ix, iy).
std::vector<std::pair<std::size_t, std::size_t>> local_maxima(const QGrid& q, double fraction);

}  // namespace tqed
