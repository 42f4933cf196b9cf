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

#ifndef LAMBDAPHONON_CLI_RUNNER_HPP
#define LAMBDAPHONON_CLI_RUNNER_HPP

#include <string>
#include <vector>

#include "config.hpp"

namespace lambdaphonon::cli {

// Exit codes of the scenario runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitGate = 4;

struct RunOverrides {
  std::string out_dir;  // beats config and LAMBDA_PHONON_OUT
  int threads = 0;      // 0: leave OpenMP defaults
  int cutoff = 0;       // 0: keep the config cutoff
  long seed = 0;        // recorded in the manifest; nothing is stochastic
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::vector<std::string> outputs;
  std::string message;
};

/// Executes one scenario end to end: output-directory lock, computation,
/// CSV/plot emission, run manifest. Never throws; failures map to exit codes.
RunOutcome run_scenario(ScenarioConfig cfg, const RunOverrides& overrides);

}  // namespace lambdaphonon::cli

#endif  // LAMBDAPHONON_CLI_RUNNER_HPP
