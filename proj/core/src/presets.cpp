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

#include "tqed/presets.hpp"

#include <array>
#include <string>

#include "tqed/error.hpp"

namespace tqed {

namespace {

struct Preset {
  const char* name;
  const char* description;
  const char* text;
};

// Shared blocks. Couplings are in units of gamma1.
#define TQED_INVERSION_OUTPUT \
  "[time]\nstart = 0\nstop = 60\nsteps = 3001\n[output]\nobservables = inversion, inversion_per_qubit\n"

#define TQED_SURFACE_OUTPUT                                                                \
  "[time]\nstart = 0\nstop = 20\nsteps = 201\n"                                           \
  "[output]\nobservables = concurrence_surface\ntheta_min = -pi/2\ntheta_max = pi/2\n"    \
  "theta_steps = 37\nconcurrence_method = analytic, mixed\n"

constexpr std::array<Preset, 16> kPresets = {{
    {"fig2a", "total inversion, k=1, theta2=pi/4, theta1=0, m=70, eta=0.2",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = 0\ntheta2 = pi/4\n"
     "[field]\nkind = binomial\neta = 0.2\nm = 70\n" TQED_INVERSION_OUTPUT},
    {"fig2b", "total inversion, k=1, theta2=pi/4, theta1=0, m=70, eta=0.7",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = 0\ntheta2 = pi/4\n"
     "[field]\nkind = binomial\neta = 0.7\nm = 70\n" TQED_INVERSION_OUTPUT},
    // beta1 = gamma1 is an assumed scale; only the ratio r is given.
    {"fig3a", "total inversion, two-photon k=2 with Stark shifts, r=1, eta=0.2",
     "[model]\nk = 2\ngamma1 = 1\ngamma2 = 0.2\nbeta1 = 1\nstark_ratio = 1\n[prep]\ntheta1 = 0\ntheta2 = pi/4\n"
     "[field]\nkind = binomial\neta = 0.2\nm = 70\n"
     "[time]\nstart = 0\nstop = 30\nsteps = 3001\n[output]\nobservables = inversion, inversion_per_qubit\n"},
    {"fig3b", "total inversion, two-photon k=2 with Stark shifts, r=0.7, eta=0.2",
     "[model]\nk = 2\ngamma1 = 1\ngamma2 = 0.2\nbeta1 = 1\nstark_ratio = 0.7\n[prep]\ntheta1 = 0\ntheta2 = pi/4\n"
     "[field]\nkind = binomial\neta = 0.2\nm = 70\n"
     "[time]\nstart = 0\nstop = 30\nsteps = 3001\n[output]\nobservables = inversion, inversion_per_qubit\n"},
    {"fig4a", "total inversion, first qubit mixed theta1=pi/3, eta=0.2",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = pi/3\ntheta2 = pi/4\n"
     "[field]\nkind = binomial\neta = 0.2\nm = 70\n" TQED_INVERSION_OUTPUT},
    {"fig4b", "total inversion, first qubit mixed theta1=pi/3, eta=0.7",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = pi/3\ntheta2 = pi/4\n"
     "[field]\nkind = binomial\neta = 0.7\nm = 70\n" TQED_INVERSION_OUTPUT},
    {"fig5a", "field Q-function at gamma1 t = 5pi/2, eta=0.2",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = 0\ntheta2 = pi/4\n"
     "[field]\nkind = binomial\neta = 0.2\nm = 70\n"
     "[time]\nstart = 0\nstop = 5*pi/2\nsteps = 2\n"
     "[output]\nobservables = q_grid\nq_grid_time = 5*pi/2\nq_grid_extent = 12\nq_grid_points = 201\n"},
    {"fig5b", "field Q-function at gamma1 t = 5pi/2, eta=0.7",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = 0\ntheta2 = pi/4\n"
     "[field]\nkind = binomial\neta = 0.7\nm = 70\n"
     "[time]\nstart = 0\nstop = 5*pi/2\nsteps = 2\n"
     "[output]\nobservables = q_grid\nq_grid_time = 5*pi/2\nq_grid_extent = 12\nq_grid_points = 201\n"},
    // Coherent limit of the binomial state at fixed eta m = nbar.
    {"fig6a", "concurrence surface, coherent limit nbar=20",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = 0\ntheta2 = 0\n"
     "[field]\nkind = coherent\nalpha = 4.4721359549995796\n" TQED_SURFACE_OUTPUT},
    {"fig6b", "concurrence surface, coherent limit nbar=8",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = 0\ntheta2 = 0\n"
     "[field]\nkind = coherent\nalpha = 2.8284271247461903\n" TQED_SURFACE_OUTPUT},
    {"fig7a", "concurrence surface, binomial m=70, eta=0.7",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = 0\ntheta2 = 0\n"
     "[field]\nkind = binomial\neta = 0.7\nm = 70\n" TQED_SURFACE_OUTPUT},
    {"fig7b", "concurrence surface, binomial m=70, eta=0.9",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = 0\ntheta2 = 0\n"
     "[field]\nkind = binomial\neta = 0.9\nm = 70\n" TQED_SURFACE_OUTPUT},
    {"fig8a", "concurrence surface as fig7a with gamma2/gamma1=0.01",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.01\n[prep]\ntheta1 = 0\ntheta2 = 0\n"
     "[field]\nkind = binomial\neta = 0.7\nm = 70\n" TQED_SURFACE_OUTPUT},
    {"fig8b", "concurrence surface as fig7b with gamma2/gamma1=0.01",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.01\n[prep]\ntheta1 = 0\ntheta2 = 0\n"
     "[field]\nkind = binomial\neta = 0.9\nm = 70\n" TQED_SURFACE_OUTPUT},
    {"fig9a", "concurrence surface, k=2, delta=0, m=70, eta=0.7",
     "[model]\nk = 2\ngamma1 = 1\ngamma2 = 0.2\n[prep]\ntheta1 = 0\ntheta2 = 0\n"
     "[field]\nkind = binomial\neta = 0.7\nm = 70\n" TQED_SURFACE_OUTPUT},
    {"fig9b", "concurrence surface, k=1, delta/gamma1=10, m=70, eta=0.7",
     "[model]\nk = 1\ngamma1 = 1\ngamma2 = 0.2\ndelta = 10\n[prep]\ntheta1 = 0\ntheta2 = 0\n"
     "[field]\nkind = binomial\neta = 0.7\nm = 70\n" TQED_SURFACE_OUTPUT},
}};

#undef TQED_INVERSION_OUTPUT
#undef TQED_SURFACE_OUTPUT

}  // namespace

std::vector<PresetInfo> list_builtin_figures() {
  std::vector<PresetInfo> out;
  out.reserve(kPresets.size());
  for (const auto& p : kPresets) out.push_back({p.name, p.description});
  return out;
}

Scenario builtin_figure(std::string_view name) {
  for (const auto& p : kPresets) {
    if (name != p.name) continue;
    Scenario s = parse_scenario(std::string("name = ") + p.name + "\n" + p.text);
    return s;
  }
  throw ValidationError("unknown preset '" + std::string(name) + "'; see list-figures");
}

}  // namespace tqed
