// Copyright 2026 The lambda-phonon authors
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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "io.hpp"
#include "runner.hpp"

using namespace lambdaphonon::cli;

int main(int argc, char** argv) {
  CLI::App app{"lambda-phonon: driven Lambda-emitter / mechanical-mode simulator"};
  app.footer(
      "commands: cool-map | cool-curve | eit-sweep | eit-analytic | rfs-steady\n"
      "          | rfs-timed | design | validate | describe\n"
      "exit codes: 0 ok, 2 schema violation, 3 solver failure, 4 gate failure");

  std::string command;
  std::string argument;
  std::string config_path;
  RunOverrides overrides;
  app.add_option("command", command,
                 "scenario name, or 'validate' / 'describe'")
      ->required();
  app.add_option("argument", argument, "scenario name for 'describe'");
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--out", overrides.out_dir,
                 "output directory (otherwise config, then $LAMBDA_PHONON_OUT)");
  app.add_option("--threads", overrides.threads, "worker threads for sweeps");
  app.add_option("--cutoff", overrides.cutoff, "override the Fock cutoff");
  app.add_option("--seed", overrides.seed,
                 "recorded in the manifest (reserved; runs are deterministic)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (command == "describe") {
      std::cout << describe(argument) << "\n";
      return kExitOk;
    }
    if (command == "validate") {
      if (config_path.empty()) {
        std::cerr << "validate needs --config\n";
        return kExitSchema;
      }
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "cannot open config file '" << config_path << "'\n";
        return kExitSchema;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      std::cout << validate_report(buffer.str());
      return kExitOk;
    }

    const auto& names = scenario_names();
    if (std::find(names.begin(), names.end(), command) == names.end()) {
      std::cerr << "unknown command '" << command << "'\n";
      return kExitSchema;
    }
    if (config_path.empty()) {
      std::cerr << "scenario runs need --config\n";
      return kExitSchema;
    }
    ScenarioConfig cfg = load_config(config_path);
    if (cfg.scenario != command) {
      std::cerr << "config declares scenario '" << cfg.scenario
                << "' but the command line asked for '" << command << "'\n";
      return kExitSchema;
    }

    const RunOutcome outcome = run_scenario(std::move(cfg), overrides);
    if (!outcome.message.empty()) {
      std::cerr << outcome.message << "\n";
    }
    for (const auto& f : outcome.outputs) {
      std::cout << f << "\n";
    }
    return outcome.exit_code;
  } catch (const SchemaError& e) {
    std::cerr << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitSolver;
  }
}
