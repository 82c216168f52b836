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

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tqed/observables.hpp"
#include "tqed/scenario.hpp"

namespace tqed {

struct TimeSeries {
  std::vector<double> gamma1_t;
  std::vector<double> value;
};

struct ConcurrenceSurface {
  ConcurrenceMethod method = ConcurrenceMethod::kMixed;
  std::vector<double> gamma1_t;
  std::vector<double> theta2;
  std::vector<double> values;  // [it * theta2.size() + ith]

  double at(std::size_t it, std::size_t ith) const { return values[it * theta2.size() + ith]; }
};

struct RunData {
  std::optional<TimeSeries> inversion;
  std::optional<TimeSeries> inversion_qubit1;
  std::optional<TimeSeries> inversion_qubit2;
  std::optional<QGrid> q_grid;
  std::vector<ConcurrenceSurface> concurrence;
  std::vector<std::string> warnings;
};

// Engine-agnostic access to the evolved state of a scenario. Times are in
// units of gamma1 t.
class Simulation {
 public:
  explicit Simulation(const Scenario& s);

  const Scenario& scenario() const noexcept { return scenario_; }
  const FieldState& field() const noexcept { return field_; }

  // Field-traced two-qubit state of the pure branch `config` (weight one).
  TwoQubitDensity branch_qubits(QubitConfig config, double gamma1_t) const;

  // Field-traced two-qubit state for an arbitrary preparation.
  TwoQubitDensity qubits(const AtomPrep& prep, double gamma1_t) const;

  FieldDensity field_density(const AtomPrep& prep, double gamma1_t) const;

  double to_time(double gamma1_t) const { return gamma1_t / time_unit_; }

  // Largest trace deviation seen by the dispersive engine so far.
  double max_trace_deviation() const noexcept { return max_trace_deviation_; }

 private:
  Scenario scenario_;
  FieldState field_;
  double time_unit_;
  std::optional<Propagator> propagator_;
  mutable double max_trace_deviation_ = 0.0;
};

// Weighted sum of branch states with the given (ee, eg, ge, gg) weights.
TwoQubitDensity combine_branches(const std::array<std::optional<TwoQubitDensity>, 4>& branches,
                                 const std::array<double, 4>& weights);

RunData compute(const Scenario& s);

struct RunResult {
  std::vector<std::filesystem::path> files;  // includes the manifest, last
  std::vector<std::string> warnings;
};

// Writes one file per requested observable plus manifest.json into out_dir
// (created when missing). Throws ValidationError for an unusable out_dir.
RunResult run_scenario(const Scenario& s, const std::filesystem::path& out_dir);

// Library version string baked in at build time.
std::string library_version();

}  // namespace tqed
