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

#ifndef LAMBDAPHONON_CLI_CONFIG_HPP
#define LAMBDAPHONON_CLI_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "lambdaphonon/device.hpp"
#include "lambdaphonon/model.hpp"
#include "lambdaphonon/spectra.hpp"

namespace lambdaphonon::cli {

/// Violation of the strict config schema (unknown key, bad unit, bad value).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  RealVector values() const { return RealVector::LinSpaced(points, min, max); }
};

struct InitialStateSpec {
  std::string type = "thermal";  // thermal | basis
  double nbar = 0.0;
  EmitterLevel emitter = EmitterLevel::kDown;
  int fock = 0;  // for type = basis
};

struct StageSpec {
  SystemParams params;                  // stage Liouvillian parameters
  std::vector<double> durations_tau_m;  // one entry, or several checkpoints
};

struct SolverSpec {
  double rtol = 1e-8;
  double atol = 1e-10;
  PropagatorMethod method = PropagatorMethod::kAdaptiveRk;
  bool run_gate = true;
  double gate_tolerance = 0.01;
  double taper_width = 0.05;     // RFS Lorentzian window [Omega]
  double rfs_tail_tol = 1e-6;
  double rfs_tau_step = 0.01;
  int analytic_n_max = -1;
  double sample_every_tau_m = 1.0;  // trajectory output resolution
};

struct OutputSpec {
  std::string directory;  // empty: use --out or LAMBDA_PHONON_OUT or "."
  bool plots = false;
};

struct ScenarioConfig {
  std::string scenario;
  SystemParams model;
  DeviceParams device;
  double temperature = 0.1;  // [K], design scenario
  double device_quality_factor = 7000.0;
  std::optional<InitialStateSpec> initial_state;
  std::vector<StageSpec> stages;
  std::optional<GridSpec> probe_grid;
  std::optional<GridSpec> control_grid;
  std::optional<GridSpec> emission_grid;
  SolverSpec solver;
  OutputSpec output;
  std::string canonical_text;  // normalized config used for the manifest hash
};

inline const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {
      "cool-map", "cool-curve", "eit-sweep", "eit-analytic",
      "rfs-steady", "rfs-timed", "design"};
  return names;
}

/// Parses and strictly validates a config file. Throws SchemaError with an
/// itemized message on any violation.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(const std::string& json_text);

/// Rebuilds the canonical text after programmatic changes (CLI overrides);
/// the manifest hash is computed from it.
void refresh_fingerprint(ScenarioConfig& cfg);

/// Dry-run report: schema problems, required fields, Liouvillian size and
/// memory estimate, thermal-tail feasibility.
std::string validate_report(const std::string& json_text);

/// Human-readable documentation for one scenario (or all, for empty name).
std::string describe(const std::string& scenario);

}  // namespace lambdaphonon::cli

#endif  // LAMBDAPHONON_CLI_CONFIG_HPP
