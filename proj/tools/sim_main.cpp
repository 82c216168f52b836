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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tqed/error.hpp"
#include "tqed/presets.hpp"
#include "tqed/runner.hpp"
#include "tqed/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitEngine = 3;

tqed::Scenario load(const std::string& path, bool json) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw tqed::ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return json ? tqed::parse_scenario_json(buf.str()) : tqed::parse_scenario(buf.str());
}

int report(const tqed::RunResult& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& f : r.files) std::cout << f.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit multiphoton cavity simulator"};
  app.set_version_flag("--version", tqed::library_version());
  app.require_subcommand(1);

  std::string scenario_path, out_dir, engine, preset;
  bool json = false;

  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--engine", engine, "Override the engine")->check(CLI::IsMember({"exact", "dispersive"}));
  run->add_flag("--json", json, "Scenario file is JSON");

  auto* figure = app.add_subcommand("figure", "Run a builtin figure preset");
  figure->add_option("preset", preset, "Preset name (see list-figures)")->required();
  figure->add_option("--out", out_dir, "Output directory")->required();
  figure->add_option("--engine", engine, "Override the engine")->check(CLI::IsMember({"exact", "dispersive"}));

  auto* list = app.add_subcommand("list-figures", "List builtin presets");

  auto* validate = app.add_subcommand("validate", "Check a scenario file and print its normalized form");
  validate->add_option("scenario", scenario_path, "Scenario file")->required();
  validate->add_flag("--json", json, "Scenario file is JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*list) {
      for (const auto& p : tqed::list_builtin_figures()) std::cout << p.name << "  " << p.description << '\n';
      return kExitOk;
    }
    if (*validate) {
      std::cout << tqed::emit_scenario(load(scenario_path, json));
      return kExitOk;
    }
    tqed::Scenario s = *run ? load(scenario_path, json) : tqed::builtin_figure(preset);
    if (!engine.empty()) s.engine = tqed::parse_engine(engine);
    return report(tqed::run_scenario(s, out_dir));
  } catch (const tqed::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const tqed::EngineError& e) {
    std::cerr << "engine error: " << e.what() << '\n';
    return kExitEngine;
  } catch (const std::exception& e) {
    std::cerr << "engine error: " << e.what() << '\n';
    return kExitEngine;
  }
}
