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

// Declarative run description. Text form is INI-like:
//
//   name = fig2a              # optional, before any section
//   engine = exact            # exact | dispersive
//   [model]   k, gamma1, gamma2, (gamma1_im, gamma2_im, delta, omega, omega1,
//             omega2, beta1_1, beta1_2, beta2_1, beta2_2 | beta1 + stark_ratio)
//   [prep]    theta1, theta2
//   [field]   kind = binomial (eta, m) | number (m) | coherent (alpha,
//             alpha_im, n_max)
//   [time]    start, stop, steps          (units of gamma1 t)
//   [output]  observables = inversion, inversion_per_qubit, q_grid,
//             concurrence_surface
//             q_grid_time, q_grid_extent, q_grid_points
//             theta_min, theta_max, theta_steps, concurrence_method
//
// Numbers accept multiples of pi: "pi/4", "5*pi/2", "-pi".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqed/cavity_model.hpp"
#include "tqed/field_states.hpp"

namespace tqed {

enum class Engine { kExact, kDispersive };

std::string_view to_string(Engine e);
Engine parse_engine(std::string_view s);

enum class FieldSpecKind { kBinomial, kNumber, kCoherent };

struct FieldSpec {
  FieldSpecKind kind = FieldSpecKind::kBinomial;
  double eta = 0.0;
  int m = 0;
  Complex alpha{};
  // Coherent truncation; 0 selects the smallest adequate value.
  int n_max = 0;

  FieldState build() const;
  bool operator==(const FieldSpec&) const = default;
};

struct TimeGrid {
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  // Evenly spaced, both ends included.
  std::vector<double> points() const;
  bool operator==(const TimeGrid&) const = default;
};

struct QGridRequest {
  double time = 0.0;  // gamma1 t
  double extent = 12.0;
  int points = 201;
  bool operator==(const QGridRequest&) const = default;
};

enum class ConcurrenceMethod {
  // Wootters concurrence of the engine's field-traced two-qubit state.
  kMixed,
  // Closed-form expression for qubit 1 initially excited.
  kAnalytic,
};

std::string_view to_string(ConcurrenceMethod m);

struct ConcurrenceRequest {
  double theta_min = 0.0;
  double theta_max = 1.5707963267948966;
  int theta_steps = 19;
  std::vector<ConcurrenceMethod> methods{ConcurrenceMethod::kMixed};

  std::vector<double> thetas() const;
  bool operator==(const ConcurrenceRequest&) const = default;
};

struct OutputRequests {
  bool inversion = false;
  bool inversion_per_qubit = false;
  std::optional<QGridRequest> q_grid;
  std::optional<ConcurrenceRequest> concurrence;
  bool operator==(const OutputRequests&) const = default;
};

struct Scenario {
  std::string name;
  Engine engine = Engine::kExact;
  ModelParams params;
  AtomPrep prep;
  FieldSpec field;
  TimeGrid time;
  OutputRequests outputs;

  // Throws ValidationError on any violated constraint.
  void validate() const;
  bool operator==(const Scenario&) const = default;
};

// Throws ParseError (with line number) or ValidationError.
Scenario parse_scenario(std::string_view text);

// Same schema as a JSON object: {"name", "engine", "model": {...},
// "prep": {...}, "field": {...}, "time": {...}, "output": {...}}; string
// values go through the same number parser as the text form.
Scenario parse_scenario_json(std::string_view text);

// Text form; parse_scenario(emit_scenario(s)) == s.
std::string emit_scenario(const Scenario& s);

// Parses a number or pi-multiple; nullopt on malformed input.
std::optional<double> parse_number(std::string_view s);

}  // namespace tqed
