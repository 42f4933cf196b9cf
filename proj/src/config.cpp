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

#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace lambdaphonon::cli {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& context) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      std::string known;
      for (const auto& k : allowed) known += (known.empty() ? "" : ", ") + k;
      throw SchemaError("unknown key '" + it.key() + "' in " + context +
                        " (known keys: " + known + ")");
    }
  }
}

double number_with_unit(const json& v, const std::map<std::string, double>& units,
                        const std::string& field, bool unit_required = true) {
  if (v.is_number()) {
    if (unit_required) {
      std::string expected;
      for (const auto& [u, f] : units) expected += (expected.empty() ? "" : ", ") + u;
      throw SchemaError("field '" + field + "' needs a unit (one of: " +
                        expected + "), e.g. \"1.4 " + units.begin()->first + "\"");
    }
    return v.get<double>();
  }
  if (!v.is_string()) {
    throw SchemaError("field '" + field + "' must be \"<number> <unit>\"");
  }
  std::istringstream in(v.get<std::string>());
  double value;
  std::string unit;
  if (!(in >> value >> unit)) {
    throw SchemaError("field '" + field + "' must be \"<number> <unit>\", got '" +
                      v.get<std::string>() + "'");
  }
  std::string rest;
  if (in >> rest) {
    throw SchemaError("field '" + field + "': trailing content after unit");
  }
  const auto it = units.find(unit);
  if (it == units.end()) {
    std::string expected;
    for (const auto& [u, f] : units) expected += (expected.empty() ? "" : ", ") + u;
    throw SchemaError("field '" + field + "': unsupported unit '" + unit +
                      "' (accepted: " + expected + ")");
  }
  return value * it->second;
}

const std::map<std::string, double>& omega_units() {
  static const std::map<std::string, double> u = {{"Omega", 1.0}};
  return u;
}

const std::map<std::string, double>& tau_units() {
  static const std::map<std::string, double> u = {{"tau_m", 1.0}};
  return u;
}

const std::map<std::string, double>& length_units() {
  static const std::map<std::string, double> u = {
      {"m", 1.0}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}, {"pm", 1e-12}};
  return u;
}

const std::map<std::string, double>& time_units() {
  static const std::map<std::string, double> u = {
      {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12}};
  return u;
}

const std::map<std::string, double>& angular_frequency_units() {
  static const std::map<std::string, double> u = {
      {"rad/s", 1.0}, {"Mrad/s", 1e6}, {"Grad/s", 1e9},
      {"Hz", two_pi}, {"kHz", two_pi * 1e3}, {"MHz", two_pi * 1e6},
      {"GHz", two_pi * 1e9}};
  return u;
}

double plain_number(const json& v, const std::string& field) {
  if (!v.is_number()) {
    throw SchemaError("field '" + field + "' must be a dimensionless number");
  }
  return v.get<double>();
}

void parse_model(const json& obj, SystemParams& p, const std::string& context) {
  check_keys(obj,
             {"coupling", "emitter_decay", "quality_factor", "mech_damping",
              "probe_detuning", "control_detuning", "probe_rabi", "control_rabi",
              "bath_occupation", "fock_cutoff", "ground_splitting",
              "mech_frequency"},
             context);
  if (obj.contains("coupling"))
    p.coupling = number_with_unit(obj["coupling"], omega_units(), context + ".coupling");
  if (obj.contains("emitter_decay"))
    p.emitter_decay =
        number_with_unit(obj["emitter_decay"], omega_units(), context + ".emitter_decay");
  if (obj.contains("quality_factor") && obj.contains("mech_damping")) {
    throw SchemaError(context + ": give either quality_factor or mech_damping, not both");
  }
  if (obj.contains("quality_factor"))
    p.set_quality_factor(plain_number(obj["quality_factor"], context + ".quality_factor"));
  if (obj.contains("mech_damping"))
    p.mech_damping =
        number_with_unit(obj["mech_damping"], omega_units(), context + ".mech_damping");
  if (obj.contains("probe_detuning"))
    p.probe_detuning =
        number_with_unit(obj["probe_detuning"], omega_units(), context + ".probe_detuning");
  if (obj.contains("control_detuning"))
    p.control_detuning = number_with_unit(obj["control_detuning"], omega_units(),
                                          context + ".control_detuning");
  if (obj.contains("probe_rabi"))
    p.probe_rabi = number_with_unit(obj["probe_rabi"], omega_units(), context + ".probe_rabi");
  if (obj.contains("control_rabi"))
    p.control_rabi =
        number_with_unit(obj["control_rabi"], omega_units(), context + ".control_rabi");
  if (obj.contains("bath_occupation"))
    p.bath_occupation = plain_number(obj["bath_occupation"], context + ".bath_occupation");
  if (obj.contains("fock_cutoff")) {
    const double n = plain_number(obj["fock_cutoff"], context + ".fock_cutoff");
    if (n != std::floor(n) || n < 2) {
      throw SchemaError(context + ".fock_cutoff must be an integer >= 2");
    }
    p.fock_cutoff = int(n);
  }
  if (obj.contains("ground_splitting"))
    p.ground_splitting = number_with_unit(obj["ground_splitting"], omega_units(),
                                          context + ".ground_splitting");
  if (obj.contains("mech_frequency"))
    p.mech_frequency_si = number_with_unit(obj["mech_frequency"],
                                           angular_frequency_units(),
                                           context + ".mech_frequency");
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(context + ": " + e.what());
  }
}

void parse_device(const json& obj, ScenarioConfig& cfg) {
  check_keys(obj,
             {"emitter_distance", "transition_energy", "excited_lifetime",
              "permittivity", "ribbon_length", "ribbon_width", "areal_density",
              "youngs_modulus_2d", "strain", "temperature", "quality_factor"},
             "device");
  DeviceParams& d = cfg.device;
  if (obj.contains("emitter_distance"))
    d.emitter_distance =
        number_with_unit(obj["emitter_distance"], length_units(), "device.emitter_distance");
  if (obj.contains("transition_energy"))
    d.transition_energy_ev = number_with_unit(
        obj["transition_energy"], {{"eV", 1.0}, {"meV", 1e-3}}, "device.transition_energy");
  if (obj.contains("excited_lifetime"))
    d.excited_lifetime =
        number_with_unit(obj["excited_lifetime"], time_units(), "device.excited_lifetime");
  if (obj.contains("permittivity")) {
    const json& e = obj["permittivity"];
    if (e.is_number()) {
      d.permittivity = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      d.permittivity = Complex(e[0].get<double>(), e[1].get<double>());
    } else {
      throw SchemaError("device.permittivity must be a number or [re, im]");
    }
  }
  if (obj.contains("ribbon_length"))
    d.ribbon_length =
        number_with_unit(obj["ribbon_length"], length_units(), "device.ribbon_length");
  if (obj.contains("ribbon_width"))
    d.ribbon_width =
        number_with_unit(obj["ribbon_width"], length_units(), "device.ribbon_width");
  if (obj.contains("areal_density"))
    d.areal_density = number_with_unit(obj["areal_density"], {{"kg/m^2", 1.0}},
                                       "device.areal_density");
  if (obj.contains("youngs_modulus_2d"))
    d.youngs_modulus_2d = number_with_unit(obj["youngs_modulus_2d"], {{"N/m", 1.0}},
                                           "device.youngs_modulus_2d");
  if (obj.contains("strain"))
    d.strain = plain_number(obj["strain"], "device.strain");
  if (obj.contains("temperature"))
    cfg.temperature =
        number_with_unit(obj["temperature"], {{"K", 1.0}, {"mK", 1e-3}}, "device.temperature");
  if (obj.contains("quality_factor"))
    cfg.device_quality_factor =
        plain_number(obj["quality_factor"], "device.quality_factor");
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("device: ") + e.what());
  }
}

GridSpec parse_grid(const json& obj, const std::map<std::string, double>& units,
                    const std::string& context) {
  check_keys(obj, {"min", "max", "points"}, context);
  for (const char* k : {"min", "max", "points"}) {
    if (!obj.contains(k)) {
      throw SchemaError(context + " needs '" + k + "'");
    }
  }
  GridSpec g;
  g.min = number_with_unit(obj["min"], units, context + ".min");
  g.max = number_with_unit(obj["max"], units, context + ".max");
  const double pts = plain_number(obj["points"], context + ".points");
  if (pts != std::floor(pts) || pts < 1) {
    throw SchemaError(context + ".points must be a positive integer");
  }
  g.points = int(pts);
  if (g.points > 1 && g.max <= g.min) {
    throw SchemaError(context + ": max must exceed min");
  }
  return g;
}

InitialStateSpec parse_initial_state(const json& obj) {
  check_keys(obj, {"type", "nbar", "emitter", "fock"}, "initial_state");
  InitialStateSpec s;
  if (obj.contains("type")) {
    s.type = obj["type"].get<std::string>();
    if (s.type != "thermal" && s.type != "basis") {
      throw SchemaError("initial_state.type must be 'thermal' or 'basis'");
    }
  }
  if (obj.contains("nbar")) s.nbar = plain_number(obj["nbar"], "initial_state.nbar");
  if (s.nbar < 0.0) throw SchemaError("initial_state.nbar must be >= 0");
  if (obj.contains("emitter")) {
    try {
      s.emitter = emitter_level_from_string(obj["emitter"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("initial_state.emitter: ") + e.what());
    }
  }
  if (obj.contains("fock")) {
    const double f = plain_number(obj["fock"], "initial_state.fock");
    if (f != std::floor(f) || f < 0) {
      throw SchemaError("initial_state.fock must be a non-negative integer");
    }
    s.fock = int(f);
  }
  return s;
}

void parse_solver(const json& obj, SolverSpec& s) {
  check_keys(obj,
             {"rtol", "atol", "method", "run_gate", "gate_tolerance",
              "taper_width", "rfs_tail_tol", "rfs_tau_step", "analytic_n_max",
              "sample_every"},
             "solver");
  if (obj.contains("rtol")) s.rtol = plain_number(obj["rtol"], "solver.rtol");
  if (obj.contains("atol")) s.atol = plain_number(obj["atol"], "solver.atol");
  if (obj.contains("method")) {
    const std::string m = obj["method"].get<std::string>();
    if (m == "adaptive_rk") {
      s.method = PropagatorMethod::kAdaptiveRk;
    } else if (m == "krylov") {
      s.method = PropagatorMethod::kKrylov;
    } else {
      throw SchemaError("solver.method must be 'adaptive_rk' or 'krylov'");
    }
  }
  if (obj.contains("run_gate")) {
    if (!obj["run_gate"].is_boolean()) throw SchemaError("solver.run_gate must be a bool");
    s.run_gate = obj["run_gate"].get<bool>();
  }
  if (obj.contains("gate_tolerance"))
    s.gate_tolerance = plain_number(obj["gate_tolerance"], "solver.gate_tolerance");
  if (obj.contains("taper_width"))
    s.taper_width = number_with_unit(obj["taper_width"], omega_units(), "solver.taper_width");
  if (obj.contains("rfs_tail_tol"))
    s.rfs_tail_tol = plain_number(obj["rfs_tail_tol"], "solver.rfs_tail_tol");
  if (obj.contains("rfs_tau_step"))
    s.rfs_tau_step = plain_number(obj["rfs_tau_step"], "solver.rfs_tau_step");
  if (obj.contains("analytic_n_max")) {
    const double n = plain_number(obj["analytic_n_max"], "solver.analytic_n_max");
    s.analytic_n_max = int(n);
  }
  if (obj.contains("sample_every"))
    s.sample_every_tau_m =
        number_with_unit(obj["sample_every"], tau_units(), "solver.sample_every");
}

std::vector<double> parse_durations(const json& v, const std::string& context) {
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& e : v) out.push_back(number_with_unit(e, tau_units(), context));
  } else {
    out.push_back(number_with_unit(v, tau_units(), context));
  }
  if (out.empty()) throw SchemaError(context + ": empty duration list");
  double last = 0.0;
  for (double d : out) {
    if (d <= last) {
      throw SchemaError(context + ": durations must be positive and increasing");
    }
    last = d;
  }
  return out;
}

std::string fingerprint_text(const ScenarioConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "scenario=" << c.scenario;
  const SystemParams& m = c.model;
  out << ";model=" << m.coupling << "," << m.mech_damping << "," << m.emitter_decay
      << "," << m.probe_detuning << "," << m.control_detuning << "," << m.probe_rabi
      << "," << m.control_rabi << "," << m.bath_occupation << "," << m.fock_cutoff
      << "," << m.ground_splitting << "," << m.mech_frequency_si;
  const DeviceParams& d = c.device;
  out << ";device=" << d.emitter_distance << "," << d.transition_energy_ev << ","
      << d.excited_lifetime << "," << d.permittivity.real() << ","
      << d.permittivity.imag() << "," << d.ribbon_length << "," << d.ribbon_width
      << "," << d.areal_density << "," << d.youngs_modulus_2d << "," << d.strain
      << "," << c.temperature << "," << c.device_quality_factor;
  if (c.initial_state) {
    out << ";init=" << c.initial_state->type << "," << c.initial_state->nbar << ","
        << to_string(c.initial_state->emitter) << "," << c.initial_state->fock;
  }
  for (const auto& st : c.stages) {
    out << ";stage=" << st.params.coupling << "," << st.params.probe_detuning << ","
        << st.params.control_detuning << "," << st.params.probe_rabi << ","
        << st.params.control_rabi << "," << st.params.bath_occupation << ","
        << st.params.emitter_decay << "," << st.params.mech_damping << ","
        << st.params.fock_cutoff << ":";
    for (double t : st.durations_tau_m) out << t << "|";
  }
  auto grid = [&out](const char* name, const std::optional<GridSpec>& g) {
    if (g) out << ";" << name << "=" << g->min << "," << g->max << "," << g->points;
  };
  grid("probe_grid", c.probe_grid);
  grid("control_grid", c.control_grid);
  grid("emission_grid", c.emission_grid);
  const SolverSpec& s = c.solver;
  out << ";solver=" << s.rtol << "," << s.atol << ","
      << (s.method == PropagatorMethod::kKrylov ? "krylov" : "adaptive_rk") << ","
      << s.run_gate << "," << s.gate_tolerance << "," << s.taper_width << ","
      << s.rfs_tail_tol << "," << s.rfs_tau_step << "," << s.analytic_n_max << ","
      << s.sample_every_tau_m;
  return out.str();
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("config root must be a JSON object");
  check_keys(j,
             {"scenario", "model", "device", "initial_state", "stages", "grids",
              "solver", "output"},
             "config root");
  if (!j.contains("scenario")) {
    throw SchemaError("missing required field 'scenario' (one of: cool-map, "
                      "cool-curve, eit-sweep, eit-analytic, rfs-steady, "
                      "rfs-timed, design)");
  }

  ScenarioConfig cfg;
  cfg.scenario = j["scenario"].get<std::string>();
  const auto& names = scenario_names();
  if (std::find(names.begin(), names.end(), cfg.scenario) == names.end()) {
    throw SchemaError("unknown scenario '" + cfg.scenario + "'");
  }

  if (j.contains("model")) parse_model(j["model"], cfg.model, "model");
  if (j.contains("device")) parse_device(j["device"], cfg);
  if (j.contains("initial_state")) {
    cfg.initial_state = parse_initial_state(j["initial_state"]);
  }
  if (j.contains("stages")) {
    if (!j["stages"].is_array()) throw SchemaError("stages must be an array");
    int idx = 0;
    for (const auto& st : j["stages"]) {
      check_keys(st, {"model", "duration"}, "stages[" + std::to_string(idx) + "]");
      StageSpec spec;
      spec.params = cfg.model;
      if (st.contains("model")) {
        parse_model(st["model"], spec.params,
                    "stages[" + std::to_string(idx) + "].model");
      }
      if (!st.contains("duration")) {
        throw SchemaError("stages[" + std::to_string(idx) + "] needs 'duration'");
      }
      spec.durations_tau_m = parse_durations(
          st["duration"], "stages[" + std::to_string(idx) + "].duration");
      cfg.stages.push_back(std::move(spec));
      ++idx;
    }
  }
  if (j.contains("grids")) {
    check_keys(j["grids"], {"probe_detuning", "control_rabi", "emission"}, "grids");
    if (j["grids"].contains("probe_detuning")) {
      cfg.probe_grid =
          parse_grid(j["grids"]["probe_detuning"], omega_units(), "grids.probe_detuning");
    }
    if (j["grids"].contains("control_rabi")) {
      cfg.control_grid =
          parse_grid(j["grids"]["control_rabi"], omega_units(), "grids.control_rabi");
    }
    if (j["grids"].contains("emission")) {
      cfg.emission_grid =
          parse_grid(j["grids"]["emission"], omega_units(), "grids.emission");
    }
  }
  if (j.contains("solver")) parse_solver(j["solver"], cfg.solver);
  if (j.contains("output")) {
    check_keys(j["output"], {"directory", "plots"}, "output");
    if (j["output"].contains("directory")) {
      cfg.output.directory = j["output"]["directory"].get<std::string>();
    }
    if (j["output"].contains("plots")) {
      if (!j["output"]["plots"].is_boolean()) {
        throw SchemaError("output.plots must be a bool");
      }
      cfg.output.plots = j["output"]["plots"].get<bool>();
    }
  }

  // scenario-specific requirements
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw SchemaError("scenario '" + cfg.scenario + "' requires " + what);
  };
  if (cfg.scenario == "cool-curve" || cfg.scenario == "eit-sweep" ||
      cfg.scenario == "eit-analytic") {
    require(cfg.probe_grid.has_value(), "grids.probe_detuning");
  }
  if (cfg.scenario == "cool-map") {
    require(cfg.probe_grid.has_value(), "grids.probe_detuning");
    require(cfg.control_grid.has_value(), "grids.control_rabi");
  }
  if (cfg.scenario == "rfs-timed") {
    require(cfg.initial_state.has_value(), "initial_state");
    require(!cfg.stages.empty(), "a non-empty stages list");
  }
  if (cfg.scenario != "design" && cfg.scenario != "eit-analytic") {
    // every master-equation scenario needs a usable probe drive for the
    // absorption normalization except the pure-emission ones
    if ((cfg.scenario == "cool-curve" || cfg.scenario == "eit-sweep") &&
        cfg.model.probe_rabi <= 0.0) {
      throw SchemaError("scenario '" + cfg.scenario + "' requires model.probe_rabi > 0");
    }
  }

  cfg.canonical_text = fingerprint_text(cfg);
  return cfg;
}

void refresh_fingerprint(ScenarioConfig& cfg) {
  cfg.canonical_text = fingerprint_text(cfg);
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string validate_report(const std::string& json_text) {
  std::ostringstream out;
  ScenarioConfig cfg;
  try {
    cfg = parse_config(json_text);
  } catch (const SchemaError& e) {
    out << "INVALID: " << e.what() << "\n";
    out << "required: scenario (one of cool-map, cool-curve, eit-sweep, "
           "eit-analytic, rfs-steady, rfs-timed, design)\n";
    out << "required per scenario: grids.probe_detuning (cool-*, eit-*); "
           "grids.control_rabi (cool-map); initial_state and stages (rfs-timed)\n";
    out << "optional: model, device, solver, output\n";
    return out.str();
  }
  out << "OK: scenario '" << cfg.scenario << "'\n";

  const int dim = 3 * cfg.model.fock_cutoff;
  const long double n = (long double)(dim) * dim;
  const long double nnz_estimate = n * 40.0L;
  out << "Liouvillian dimension: " << dim * dim << " x " << dim * dim
      << " (Hilbert dim " << dim << ", cutoff " << cfg.model.fock_cutoff << ")\n";
  out << "sparse storage estimate: "
      << double(nnz_estimate * 24.0L / (1024.0L * 1024.0L)) << " MB\n";
  if (double(n) > 4.0e5) {
    out << "WARNING: superoperator above ~4e5 rows; direct factorization may "
           "be slow, consider a smaller cutoff\n";
  }

  if (cfg.initial_state && cfg.initial_state->type == "thermal") {
    const double tail =
        thermal_tail_weight(cfg.initial_state->nbar, cfg.model.fock_cutoff);
    if (tail >= 1e-6) {
      out << "WARNING: thermal initial state nbar = " << cfg.initial_state->nbar
          << " has tail weight " << tail << " beyond cutoff "
          << cfg.model.fock_cutoff << "; need cutoff >= "
          << minimal_thermal_cutoff(cfg.initial_state->nbar) << "\n";
    }
  }
  for (std::size_t i = 0; i < cfg.stages.size(); ++i) {
    const double beta = std::abs(cfg.stages[i].params.coupling);
    const int suggested = int(std::ceil(beta * beta + 8.0 * beta + 10.0));
    if (cfg.stages[i].params.fock_cutoff < suggested) {
      out << "NOTE: stage " << i << " coupling " << beta
          << " displaces the mode up to ~" << beta * beta
          << " quanta; cutoff below " << suggested << " may truncate\n";
    }
  }
  return out.str();
}

std::string describe(const std::string& scenario) {
  static const std::map<std::string, std::string> docs = {
      {"cool-map",
       "cool-map: steady-state mechanical occupation and cooling efficiency\n"
       "over a (probe detuning) x (control Rabi) grid with the probe locked\n"
       "to E_p = 0.1 E_c. Needs grids.probe_detuning and grids.control_rabi.\n"
       "Emits cool_map.csv in long format with NaN holes on per-point solver\n"
       "failures (exit 3 if any)."},
      {"cool-curve",
       "cool-curve: steady-state occupation n_ss and normalized probe\n"
       "absorption along a probe-detuning scan at fixed drives. Needs\n"
       "grids.probe_detuning. The cutoff gate (solver.run_gate) re-solves at\n"
       "cutoff + 10 and fails with exit 4 beyond solver.gate_tolerance.\n"
       "Emits cool_curve.csv."},
      {"eit-sweep",
       "eit-sweep: numerical probe absorption spectrum, steady-state, or at a\n"
       "fixed time when initial_state and a single stage duration are given.\n"
       "Needs grids.probe_detuning. Emits eit_numeric.csv."},
      {"eit-analytic",
       "eit-analytic: the closed-form phonon-sideband EIT series evaluated on\n"
       "grids.probe_detuning; solver.analytic_n_max = -1 auto-truncates.\n"
       "Emits eit_analytic.csv."},
      {"rfs-steady",
       "rfs-steady: steady-state resonance fluorescence spectrum of both\n"
       "Lambda branches on the (omega - omega_eg)/Omega axis, Lorentzian\n"
       "taper solver.taper_width. Optional grids.emission overrides the\n"
       "automatic window. Emits rfs_steady.csv."},
      {"rfs-timed",
       "rfs-timed: staged (piecewise-constant Liouvillian) evolution from\n"
       "initial_state; each stage holds its own model overrides and one or\n"
       "more checkpoint durations. Emits nbar_t.csv with the occupation and\n"
       "populations, plus rfs_t<checkpoint>.csv at every checkpoint of the\n"
       "final stage."},
      {"design",
       "design: dispersion-force device calculator. Evaluates the frequency\n"
       "shift, frequency pull, string-mode frequency, zero-point amplitude,\n"
       "coupling rate G and the strong-coupling flag from the device section,\n"
       "plus the Omega-unit model parameters at device.temperature. Emits\n"
       "design.csv."}};
  if (scenario.empty()) {
    std::string all;
    for (const auto& [k, v] : docs) all += v + "\n\n";
    return all;
  }
  const auto it = docs.find(scenario);
  if (it == docs.end()) {
    throw SchemaError("unknown scenario '" + scenario + "'");
  }
  return it->second;
}

}  // namespace lambdaphonon::cli
