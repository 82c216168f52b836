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

#include "tqed/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "tqed/dispersive.hpp"
#include "tqed/entanglement.hpp"
#include "tqed/error.hpp"
#include "tqed/numeric_format.hpp"
#include "tqed/parallel.hpp"

#ifndef TQED_VERSION
#define TQED_VERSION "0.0.0"
#endif

namespace tqed {

namespace {

constexpr std::array<QubitConfig, 4> kConfigs = {QubitConfig::kEE, QubitConfig::kEG, QubitConfig::kGE,
                                                 QubitConfig::kGG};

std::array<double, 4> unit_weights(QubitConfig c) {
  std::array<double, 4> w{};
  w[static_cast<std::size_t>(c)] = 1.0;
  return w;
}

// Branches needed for any preparation sharing theta1 (mask over ee, eg, ge, gg).
std::array<bool, 4> branches_for_theta1(double theta1) {
  const double c1 = std::cos(theta1) * std::cos(theta1);
  const double s1 = std::sin(theta1) * std::sin(theta1);
  return {c1 > 0.0, c1 > 0.0, s1 > 0.0, s1 > 0.0};
}

std::array<std::optional<TwoQubitDensity>, 4> evolve_branches(const Simulation& sim, const std::array<bool, 4>& mask,
                                                              double gamma1_t) {
  std::array<std::optional<TwoQubitDensity>, 4> out;
  for (std::size_t c = 0; c < 4; ++c)
    if (mask[c]) out[c] = sim.branch_qubits(kConfigs[c], gamma1_t);
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ValidationError("cannot write " + path.string());
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw ValidationError("failed writing " + path.string());
}

std::string series_csv(const TimeSeries& s) {
  std::string out = "gamma1_t,value\n";
  for (std::size_t i = 0; i < s.gamma1_t.size(); ++i)
    out += format_double(s.gamma1_t[i]) + "," + format_double(s.value[i]) + "\n";
  return out;
}

std::string surface_csv(const ConcurrenceSurface& s) {
  std::string out = "gamma1_t,theta2,concurrence\n";
  for (std::size_t it = 0; it < s.gamma1_t.size(); ++it)
    for (std::size_t ith = 0; ith < s.theta2.size(); ++ith)
      out += format_double(s.gamma1_t[it]) + "," + format_double(s.theta2[ith]) + "," +
             format_double(s.at(it, ith)) + "\n";
  return out;
}

std::string qgrid_json(const QGrid& q) {
  nlohmann::ordered_json j;
  j["x_axis"] = q.x_axis;
  j["y_axis"] = q.y_axis;
  j["values"] = q.values;
  return j.dump() + "\n";
}

nlohmann::ordered_json complex_json(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

nlohmann::ordered_json scenario_json(const Scenario& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["engine"] = to_string(s.engine);
  const ModelParams& p = s.params;
  j["model"] = {{"k", p.k},
                {"gamma1", complex_json(p.gamma1)},
                {"gamma2", complex_json(p.gamma2)},
                {"delta", p.delta},
                {"omega", p.omega},
                {"omega1", p.omega1},
                {"omega2", p.omega2},
                {"beta1_1", p.beta1_1},
                {"beta1_2", p.beta1_2},
                {"beta2_1", p.beta2_1},
                {"beta2_2", p.beta2_2},
                {"stark_flag", p.theta_flag()}};
  j["prep"] = {{"theta1", s.prep.theta1}, {"theta2", s.prep.theta2}};
  j["time"] = {{"start", s.time.start}, {"stop", s.time.stop}, {"steps", s.time.steps}};
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["inversion"] = s.outputs.inversion;
  out["inversion_per_qubit"] = s.outputs.inversion_per_qubit;
  if (s.outputs.q_grid)
    out["q_grid"] = {{"time", s.outputs.q_grid->time},
                     {"extent", s.outputs.q_grid->extent},
                     {"points", s.outputs.q_grid->points}};
  if (s.outputs.concurrence) {
    const auto& c = *s.outputs.concurrence;
    nlohmann::ordered_json methods = nlohmann::ordered_json::array();
    for (auto m : c.methods) methods.push_back(to_string(m));
    out["concurrence_surface"] = {{"theta_min", c.theta_min},
                                  {"theta_max", c.theta_max},
                                  {"theta_steps", c.theta_steps},
                                  {"methods", methods}};
  }
  j["output"] = out;
  return j;
}

nlohmann::ordered_json field_json(const FieldSpec& spec, const FieldState& f) {
  nlohmann::ordered_json j;
  switch (spec.kind) {
    case FieldSpecKind::kBinomial:
      j["kind"] = "binomial";
      j["eta"] = spec.eta;
      j["m"] = spec.m;
      break;
    case FieldSpecKind::kNumber:
      j["kind"] = "number";
      j["m"] = spec.m;
      break;
    case FieldSpecKind::kCoherent:
      j["kind"] = "coherent";
      j["alpha"] = complex_json(spec.alpha);
      break;
  }
  j["n_max"] = f.n_max();
  j["mean_photon_number"] = f.mean_photon_number();
  nlohmann::ordered_json amps = nlohmann::ordered_json::array();
  for (const Complex& a : f.amplitudes()) amps.push_back(complex_json(a));
  j["amplitudes"] = amps;
  return j;
}

}  // namespace

std::string library_version() { return TQED_VERSION; }

Simulation::Simulation(const Scenario& s)
    : scenario_(s), field_(s.field.build()), time_unit_(std::abs(s.params.gamma1)) {
  scenario_.validate();
  if (scenario_.engine == Engine::kExact)
    propagator_.emplace(scenario_.params, max_label_for(field_.n_max(), scenario_.params.k));
}

TwoQubitDensity Simulation::branch_qubits(QubitConfig config, double gamma1_t) const {
  const double t = to_time(gamma1_t);
  if (propagator_) {
    const JointDensity init = initial_branch(config, field_, scenario_.params.k);
    return reduce_to_qubits(propagator_->evolve(init, t, PairSelection::kQubitMarginals));
  }
  const auto d = dispersive_density(unit_weights(config), field_, scenario_.params, t, PairSelection::kQubitMarginals);
  return reduce_to_qubits(d.rho);
}

TwoQubitDensity Simulation::qubits(const AtomPrep& prep, double gamma1_t) const {
  const double t = to_time(gamma1_t);
  if (propagator_) {
    const auto w = prep.weights();
    std::array<bool, 4> mask{};
    for (std::size_t c = 0; c < 4; ++c) mask[c] = w[c] > 0.0;
    return combine_branches(evolve_branches(*this, mask, gamma1_t), w);
  }
  const auto d = dispersive_density(prep, field_, scenario_.params, t, PairSelection::kQubitMarginals);
  return reduce_to_qubits(d.rho);
}

FieldDensity Simulation::field_density(const AtomPrep& prep, double gamma1_t) const {
  const double t = to_time(gamma1_t);
  if (propagator_) return reduce_to_field(propagator_->evolve(initial_joint(prep, field_, scenario_.params.k), t));
  const auto d = dispersive_density(prep, field_, scenario_.params, t);
  max_trace_deviation_ = std::max(max_trace_deviation_, d.trace_deviation);
  return reduce_to_field(d.rho);
}

TwoQubitDensity combine_branches(const std::array<std::optional<TwoQubitDensity>, 4>& branches,
                                 const std::array<double, 4>& weights) {
  TwoQubitDensity out{ComplexMatrix(4, 4)};
  for (std::size_t c = 0; c < 4; ++c) {
    if (weights[c] == 0.0) continue;
    if (!branches[c]) throw EngineError("combine_branches: branch with nonzero weight was not evolved");
    ComplexMatrix term = branches[c]->matrix;
    term *= Complex{weights[c], 0.0};
    out.matrix += term;
  }
  return out;
}

RunData compute(const Scenario& s) {
  const Simulation sim(s);
  RunData data;
  const auto times = s.time.points();
  const std::size_t nt = times.size();

  if (s.outputs.inversion || s.outputs.inversion_per_qubit) {
    std::vector<double> total(nt), q1(nt), q2(nt);
    parallel_for(nt, [&](std::size_t i) {
      const TwoQubitDensity rho = sim.qubits(s.prep, times[i]);
      q1[i] = inversion(rho, 1);
      q2[i] = inversion(rho, 2);
      total[i] = total_inversion(rho);
    });
    if (s.outputs.inversion) data.inversion = TimeSeries{times, total};
    if (s.outputs.inversion_per_qubit) {
      data.inversion_qubit1 = TimeSeries{times, q1};
      data.inversion_qubit2 = TimeSeries{times, q2};
    }
  }

  if (s.outputs.q_grid) {
    const auto& req = *s.outputs.q_grid;
    data.q_grid = husimi_q(sim.field_density(s.prep, req.time), GridAxes::square(req.extent, req.points));
    if (data.q_grid->coverage_warning)
      data.warnings.emplace_back("q_grid extent does not cover the photon-number distribution");
  }

  if (s.outputs.concurrence) {
    const auto& req = *s.outputs.concurrence;
    const auto thetas = req.thetas();
    const std::size_t nth = thetas.size();
    for (ConcurrenceMethod method : req.methods) {
      ConcurrenceSurface surf{method, times, thetas, std::vector<double>(nt * nth)};
      if (method == ConcurrenceMethod::kMixed) {
        const auto mask = branches_for_theta1(s.prep.theta1);
        parallel_for(nt, [&](std::size_t it) {
          const auto branches = evolve_branches(sim, mask, times[it]);
          for (std::size_t ith = 0; ith < nth; ++ith) {
            const auto w = AtomPrep{s.prep.theta1, thetas[ith]}.weights();
            surf.values[it * nth + ith] = concurrence_mixed(combine_branches(branches, w)).value;
          }
        });
      } else {
        parallel_for(nt, [&](std::size_t it) {
          const double t = sim.to_time(times[it]);
          for (std::size_t ith = 0; ith < nth; ++ith)
            surf.values[it * nth + ith] = concurrence_analytic(s.params, sim.field(), thetas[ith], t);
        });
      }
      data.concurrence.push_back(std::move(surf));
    }
  }

  if (s.engine == Engine::kDispersive) {
    const auto c = dispersive_coefficients(s.params, 0, 0.0);
    if (c.regime_warning) data.warnings.emplace_back("parameters lie outside the dispersive regime");
  }
  if (sim.max_trace_deviation() > 1e-8)
    data.warnings.emplace_back("dispersive density trace deviates from one by " +
                               format_double(sim.max_trace_deviation()));
  return data;
}

RunResult run_scenario(const Scenario& s, const std::filesystem::path& out_dir) {
  s.validate();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir))
    throw ValidationError("cannot create output directory " + out_dir.string());

  const auto start = std::chrono::steady_clock::now();
  const RunData data = compute(s);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  RunResult result;
  result.warnings = data.warnings;
  auto emit = [&](const std::string& name, const std::string& content) {
    const auto path = out_dir / name;
    write_file(path, content);
    result.files.push_back(path);
  };
  if (data.inversion) emit("inversion.csv", series_csv(*data.inversion));
  if (data.inversion_qubit1) emit("inversion_qubit1.csv", series_csv(*data.inversion_qubit1));
  if (data.inversion_qubit2) emit("inversion_qubit2.csv", series_csv(*data.inversion_qubit2));
  if (data.q_grid) emit("q_grid.json", qgrid_json(*data.q_grid));
  for (const auto& surf : data.concurrence)
    emit("concurrence_" + std::string(to_string(surf.method)) + ".csv", surface_csv(surf));

  nlohmann::ordered_json manifest;
  manifest["library"] = "tqed";
  manifest["version"] = library_version();
  manifest["engine"] = to_string(s.engine);
  manifest["scenario"] = scenario_json(s);
  manifest["scenario_text"] = emit_scenario(s);
  manifest["field"] = field_json(s.field, s.field.build());
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (const auto& f : result.files) files.push_back(f.filename().string());
  manifest["files"] = files;
  manifest["warnings"] = data.warnings;
  manifest["wall_time_seconds"] = wall;
  emit("manifest.json", manifest.dump(2) + "\n");
  return result;
}

}  // namespace tqed
