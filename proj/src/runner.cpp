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

#include "runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "io.hpp"
#include "lambdaphonon/device.hpp"
#include "lambdaphonon/spectra.hpp"

namespace lambdaphonon::cli {

namespace {

namespace fs = std::filesystem;

std::string resolve_out_dir(const ScenarioConfig& cfg, const RunOverrides& o) {
  if (!o.out_dir.empty()) return o.out_dir;
  if (!cfg.output.directory.empty()) return cfg.output.directory;
  if (const char* env = std::getenv("LAMBDA_PHONON_OUT"); env && *env) return env;
  return ".";
}

std::string params_line(const SystemParams& p) {
  std::ostringstream out;
  out.precision(17);
  out << "G=" << p.coupling << " Omega; Gamma=" << p.mech_damping
      << " Omega; gamma=" << p.emitter_decay << " Omega; delta_p="
      << p.probe_detuning << " Omega; delta_c=" << p.control_detuning
      << " Omega; E_p=" << p.probe_rabi << " Omega; E_c=" << p.control_rabi
      << " Omega; Nbar=" << p.bath_occupation << "; cutoff=" << p.fock_cutoff
      << "; Delta0=" << p.ground_splitting << " Omega";
  return out.str();
}

CsvTable base_table(const RunManifest& manifest, const SystemParams& params) {
  CsvTable t;
  t.metadata["tool"] = "lambda-phonon";
  t.metadata["version"] = manifest.version;
  t.metadata["manifest"] = manifest.config_hash;
  t.metadata["scenario"] = manifest.scenario;
  t.metadata["params"] = params_line(params);
  std::ostringstream tol;
  tol.precision(17);
  tol << "rtol=" << manifest.rtol << "; atol=" << manifest.atol;
  t.metadata["solver"] = tol.str();
  return t;
}

DensityMatrix build_initial_state(const InitialStateSpec& s, const HilbertSpace& space) {
  if (s.type == "thermal") {
    return thermal_state(space, s.nbar, s.emitter);
  }
  if (s.fock >= space.fock_cutoff()) {
    throw std::invalid_argument("initial_state.fock beyond the cutoff");
  }
  return basis_state(space, s.emitter, s.fock);
}

std::string format_time_tag(double t_tau_m) {
  std::ostringstream out;
  out << t_tau_m;
  std::string s = out.str();
  for (char& c : s) {
    if (c == '.') c = 'p';
  }
  return s;
}

struct Emitted {
  std::vector<std::string> files;
  void add(const std::string& f) { files.push_back(f); }
};

// ---- scenario bodies ------------------------------------------------------

void run_design(const ScenarioConfig& cfg, const std::string& dir,
                RunManifest& manifest, Emitted& emitted) {
  const CouplingResult r = coupling_rate(cfg.device);
  const SystemParams s =
      to_system_params(cfg.device, cfg.temperature, cfg.device_quality_factor);

  CsvTable t = base_table(manifest, cfg.model);
  std::ostringstream dev;
  dev.precision(12);
  dev << "z=" << cfg.device.emitter_distance << " m; L=" << cfg.device.ribbon_length
      << " m; w=" << cfg.device.ribbon_width << " m; strain=" << cfg.device.strain
      << "; T=" << cfg.temperature << " K";
  t.metadata["device"] = dev.str();
  t.columns = {"frequency_shift_rad_s", "frequency_pull_rad_s_per_m",
               "mode_frequency_rad_s",  "mode_frequency_hz",
               "zero_point_amplitude_m", "coupling_rate_rad_s",
               "coupling_rate_hz",      "strong_coupling",
               "near_field_ok",         "coupling_omega_units",
               "decay_omega_units",     "bath_occupation"};
  t.rows.push_back({r.frequency_shift, r.frequency_pull, r.mode_frequency,
                    r.mode_frequency / two_pi, r.zero_point_amplitude,
                    r.coupling_rate, r.coupling_rate / two_pi,
                    r.strong_coupling ? 1.0 : 0.0, r.near_field_ok ? 1.0 : 0.0,
                    s.coupling, s.emitter_decay, s.bath_occupation});
  const std::string path = dir + "/design.csv";
  write_csv(path, t);
  emitted.add(path);
}

void run_cool_curve(const ScenarioConfig& cfg, const std::string& dir,
                    RunManifest& manifest, Emitted& emitted) {
  if (!cfg.probe_grid) throw SchemaError("cool-curve requires grids.probe_detuning");
  const RealVector grid = cfg.probe_grid->values();
  SteadyStateOptions ss;
  ss.check_uniqueness = false;
  // one audited solve before the unchecked sweep
  {
    SteadyStateOptions checked;
    SystemParams mid = cfg.model.with_probe_detuning(grid[grid.size() / 2]);
    driven_steady_state(mid, checked);
  }
  const auto curve = cooling_curve(cfg.model, grid, ss);

  if (cfg.solver.run_gate) {
    const auto reference =
        cooling_curve(cfg.model.with_fock_cutoff(cfg.model.fock_cutoff + 10), grid, ss);
    double worst = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const double scale = std::max(
          {std::abs(curve[i].occupation), std::abs(reference[i].occupation), 1e-30});
      worst = std::max(worst,
                       std::abs(curve[i].occupation - reference[i].occupation) / scale);
    }
    GateRecord g{"nbar_ss(delta_p)", cfg.model.fock_cutoff, curve.front().occupation,
                 reference.front().occupation, worst,
                 worst < cfg.solver.gate_tolerance};
    manifest.gates.push_back(g);
  }

  CsvTable t = base_table(manifest, cfg.model);
  t.columns = {"delta_p", "nbar_ss", "absorption", "efficiency"};
  for (const auto& pt : curve) {
    const double eff = pt.occupation > 0.0
                           ? cfg.model.bath_occupation / pt.occupation
                           : std::numeric_limits<double>::infinity();
    t.rows.push_back({pt.probe_detuning, pt.occupation, pt.absorption, eff});
  }
  const std::string path = dir + "/cool_curve.csv";
  write_csv(path, t);
  emitted.add(path);

  if (cfg.output.plots) {
    RealVector nbar(grid.size()), absorption(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
      nbar[i] = curve[i].occupation;
      absorption[i] = curve[i].absorption;
    }
    const std::string plot = dir + "/cool_curve.svg";
    write_svg_curve(plot, grid, {{"nbar_ss", nbar}, {"absorption", absorption}},
                    "steady-state occupation and probe absorption",
                    "delta_p [Omega]", "");
    emitted.add(plot);
  }

  for (const auto& g : manifest.gates) {
    if (!g.passed) {
      throw ConvergenceGateError("cool-curve gate failed on " + g.observable,
                                 g.relative_change);
    }
  }
}

void run_cool_map(const ScenarioConfig& cfg, const std::string& dir,
                  RunManifest& manifest, Emitted& emitted, bool& had_failures) {
  if (!cfg.probe_grid || !cfg.control_grid) {
    throw SchemaError("cool-map requires grids.probe_detuning and grids.control_rabi");
  }
  const RealVector dps = cfg.probe_grid->values();
  const RealVector ecs = cfg.control_grid->values();
  SteadyStateOptions ss;
  ss.check_uniqueness = false;
  const CoolingMapResult map = cooling_map(cfg.model, dps, ecs, ss);
  had_failures = !map.failures.empty();

  CsvTable t = base_table(manifest, cfg.model);
  t.metadata["probe_lock"] = "E_p = 0.1 E_c";
  t.columns = {"delta_p", "control_rabi", "probe_rabi",
               "nbar_ss", "efficiency",  "absorption", "ok"};
  for (int i = 0; i < dps.size(); ++i) {
    for (int j = 0; j < ecs.size(); ++j) {
      const bool ok = !std::isnan(map.occupation(i, j));
      t.rows.push_back({dps[i], ecs[j], 0.1 * ecs[j], map.occupation(i, j),
                        map.efficiency(i, j), map.absorption(i, j), ok ? 1.0 : 0.0});
    }
  }
  const std::string path = dir + "/cool_map.csv";
  write_csv(path, t);
  emitted.add(path);

  if (cfg.solver.run_gate) {
    // gate the reported minimum: the most truncation-sensitive point
    int bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dps.size(); ++i) {
      for (int j = 0; j < ecs.size(); ++j) {
        if (!std::isnan(map.occupation(i, j)) && map.occupation(i, j) < best) {
          best = map.occupation(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    if (std::isfinite(best)) {
      const auto gated = converged_cutoff(
          [&](int cutoff) {
            SystemParams p = cfg.model.with_fock_cutoff(cutoff);
            p.probe_detuning = dps[bi];
            p.control_rabi = ecs[bj];
            p.probe_rabi = 0.1 * ecs[bj];
            SteadyStateOptions o;
            o.check_uniqueness = false;
            const DensityMatrix rho = driven_steady_state(p, o);
            return expectation_real(rho, boson_ops(p.space()).number);
          },
          cfg.model.fock_cutoff, cfg.solver.gate_tolerance, false);
      manifest.gates.push_back({"min nbar_ss", gated.cutoff, gated.value,
                                gated.reference, gated.relative_change,
                                gated.passed});
      if (!gated.passed) {
        throw ConvergenceGateError("cool-map gate failed on the minimum",
                                   gated.relative_change);
      }
    }
  }

  if (cfg.output.plots) {
    const std::string plot = dir + "/cool_map.svg";
    write_svg_map(plot, dps, ecs, map.efficiency, "cooling efficiency Nbar/nbar_ss",
                  "delta_p [Omega]", "E_c [Omega]", true);
    emitted.add(plot);
  }
}

void run_eit_sweep(const ScenarioConfig& cfg, const std::string& dir,
                   RunManifest& manifest, Emitted& emitted) {
  if (!cfg.probe_grid) throw SchemaError("eit-sweep requires grids.probe_detuning");
  const RealVector grid = cfg.probe_grid->values();
  EitNumericOptions opts;
  opts.steady.check_uniqueness = false;
  opts.evolve.rtol = cfg.solver.rtol;
  opts.evolve.atol = cfg.solver.atol;
  opts.evolve.method = cfg.solver.method;

  SystemParams params = cfg.model;
  if (cfg.initial_state.has_value()) {
    if (cfg.stages.size() != 1 || cfg.stages[0].durations_tau_m.size() != 1) {
      throw SchemaError(
          "eit-sweep at a fixed time needs exactly one stage with one duration");
    }
    params = cfg.stages[0].params;
    opts.mode = EvalMode::kAtTime;
    opts.at_time_tau_m = cfg.stages[0].durations_tau_m[0];
    opts.initial_state = build_initial_state(*cfg.initial_state, params.space());
  }

  const SpectrumResult s = eit_absorption_numeric(params, grid, opts);

  if (cfg.solver.run_gate) {
    EitNumericOptions ref_opts = opts;
    if (opts.mode == EvalMode::kAtTime) {
      ref_opts.initial_state = build_initial_state(
          *cfg.initial_state, HilbertSpace(params.fock_cutoff + 10));
    }
    const SpectrumResult ref = eit_absorption_numeric(
        params.with_fock_cutoff(params.fock_cutoff + 10), grid, ref_opts);
    const double scale =
        std::max(s.values.cwiseAbs().maxCoeff(), ref.values.cwiseAbs().maxCoeff());
    const double worst =
        (s.values - ref.values).cwiseAbs().maxCoeff() / std::max(scale, 1e-30);
    manifest.gates.push_back({"absorption(delta_p)", params.fock_cutoff,
                              s.values.maxCoeff(), ref.values.maxCoeff(), worst,
                              worst < cfg.solver.gate_tolerance});
    if (worst >= cfg.solver.gate_tolerance) {
      throw ConvergenceGateError("eit-sweep gate failed", worst);
    }
  }

  CsvTable t = base_table(manifest, params);
  if (opts.mode == EvalMode::kAtTime) {
    t.metadata["evaluated_at"] = std::to_string(opts.at_time_tau_m) + " tau_m";
  } else {
    t.metadata["evaluated_at"] = "steady state";
  }
  t.columns = {"delta_p", "absorption", "coherence_re", "coherence_im"};
  for (int i = 0; i < grid.size(); ++i) {
    t.rows.push_back({grid[i], s.values[i], s.extra.at("coherence_re")[i],
                      s.extra.at("coherence_im")[i]});
  }
  const std::string path = dir + "/eit_numeric.csv";
  write_csv(path, t);
  emitted.add(path);

  if (cfg.output.plots) {
    const std::string plot = dir + "/eit_numeric.svg";
    write_svg_curve(plot, grid, {{"absorption", s.values}},
                    "probe absorption", "delta_p [Omega]", "A");
    emitted.add(plot);
  }
}

void run_eit_analytic(const ScenarioConfig& cfg, const std::string& dir,
                      RunManifest& manifest, Emitted& emitted) {
  if (!cfg.probe_grid) throw SchemaError("eit-analytic requires grids.probe_detuning");
  const RealVector grid = cfg.probe_grid->values();
  AnalyticEitOptions opts;
  opts.n_max = cfg.solver.analytic_n_max;
  AnalyticEitTerms terms;
  const SpectrumResult s = eit_absorption_analytic(cfg.model, grid, opts, &terms);

  CsvTable t = base_table(manifest, cfg.model);
  t.metadata["alpha"] = std::to_string(terms.alpha);
  t.metadata["n_max"] = std::to_string(terms.n_max);
  if (!s.meta.note.empty()) t.metadata["note"] = s.meta.note;
  t.columns = {"delta_p", "absorption", "coherence_re", "coherence_im"};
  for (int i = 0; i < grid.size(); ++i) {
    t.rows.push_back({grid[i], s.values[i], s.extra.at("coherence_re")[i],
                      s.extra.at("coherence_im")[i]});
  }
  const std::string path = dir + "/eit_analytic.csv";
  write_csv(path, t);
  emitted.add(path);

  if (cfg.output.plots) {
    const std::string plot = dir + "/eit_analytic.svg";
    write_svg_curve(plot, grid, {{"absorption", s.values}},
                    "analytic probe absorption", "delta_p [Omega]", "A");
    emitted.add(plot);
  }
}

RfsOptions rfs_options_from(const ScenarioConfig& cfg) {
  RfsOptions opts;
  opts.taper_width = cfg.solver.taper_width;
  opts.tail_tol = cfg.solver.rfs_tail_tol;
  opts.tau_step = cfg.solver.rfs_tau_step;
  opts.evolve.rtol = cfg.solver.rtol;
  opts.evolve.atol = cfg.solver.atol;
  opts.evolve.method = cfg.solver.method;
  opts.steady.check_uniqueness = false;
  if (cfg.emission_grid.has_value()) opts.omega_grid = cfg.emission_grid->values();
  return opts;
}

void write_spectrum_csv(const std::string& path, const SpectrumResult& s,
                        CsvTable t, Emitted& emitted) {
  t.columns = {"omega_minus_omega_eg", "intensity", "branch_down", "branch_up"};
  for (int i = 0; i < s.axis.size(); ++i) {
    t.rows.push_back({s.axis[i], s.values[i], s.extra.at("branch_down")[i],
                      s.extra.at("branch_up")[i]});
  }
  write_csv(path, t);
  emitted.add(path);
}

void run_rfs_steady(const ScenarioConfig& cfg, const std::string& dir,
                    RunManifest& manifest, Emitted& emitted) {
  RfsOptions opts = rfs_options_from(cfg);
  const SpectrumResult s = rfs(cfg.model, opts);

  if (cfg.solver.run_gate) {
    const auto gated = converged_cutoff(
        [&](int cutoff) {
          SteadyStateOptions o;
          o.check_uniqueness = false;
          const SystemParams p = cfg.model.with_fock_cutoff(cutoff);
          const DensityMatrix rho = driven_steady_state(p, o);
          return expectation_real(rho, boson_ops(p.space()).number);
        },
        cfg.model.fock_cutoff, cfg.solver.gate_tolerance, false);
    manifest.gates.push_back({"nbar_ss", gated.cutoff, gated.value,
                              gated.reference, gated.relative_change, gated.passed});
    if (!gated.passed) {
      throw ConvergenceGateError("rfs-steady gate failed on nbar_ss",
                                 gated.relative_change);
    }
  }

  CsvTable t = base_table(manifest, cfg.model);
  std::ostringstream taper;
  taper.precision(17);
  taper << "lorentzian eta=" << opts.taper_width << " Omega; tail_tol="
        << opts.tail_tol;
  t.metadata["window"] = taper.str();
  t.metadata["evaluated_at"] = "steady state";
  write_spectrum_csv(dir + "/rfs_steady.csv", s, t, emitted);

  if (cfg.output.plots) {
    const std::string plot = dir + "/rfs_steady.svg";
    write_svg_curve(plot, s.axis, {{"intensity", s.values}},
                    "steady-state resonance fluorescence",
                    "(omega - omega_eg) [Omega]", "S");
    emitted.add(plot);
  }
}

struct StagedTrajectory {
  std::vector<double> times;
  std::vector<double> nbar, pop_down, pop_up, pop_e;
  std::vector<std::pair<double, DensityMatrix>> checkpoints;  // final stage
  DensityMatrix final_state;
};

StagedTrajectory run_stages(const ScenarioConfig& cfg, int cutoff,
                            bool keep_checkpoints) {
  const HilbertSpace space{cutoff};
  const auto ops = boson_ops(space);
  const SparseMatrix s_dd = emitter_op(space, EmitterLevel::kDown, EmitterLevel::kDown);
  const SparseMatrix s_uu = emitter_op(space, EmitterLevel::kUp, EmitterLevel::kUp);
  const SparseMatrix s_ee =
      emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kExcited);
  const ObservableSet observables = {
      {"nbar", ops.number}, {"pop_down", s_dd}, {"pop_up", s_uu}, {"pop_e", s_ee}};

  StagedTrajectory out;
  DensityMatrix rho = build_initial_state(*cfg.initial_state, space);
  double t0 = 0.0;

  for (std::size_t si = 0; si < cfg.stages.size(); ++si) {
    const StageSpec& stage = cfg.stages[si];
    const bool final_stage = si + 1 == cfg.stages.size();
    if (!final_stage && stage.durations_tau_m.size() != 1) {
      throw SchemaError("only the final stage may carry several checkpoints");
    }
    SystemParams params = stage.params;
    params.fock_cutoff = cutoff;
    const SparseMatrix lv = liouvillian(params);

    // sample grid: multiples of sample_every plus every checkpoint
    std::vector<double> grid = {0.0};
    const double t_end = stage.durations_tau_m.back();
    for (double t = cfg.solver.sample_every_tau_m; t < t_end - 1e-12;
         t += cfg.solver.sample_every_tau_m) {
      grid.push_back(t);
    }
    for (double t : stage.durations_tau_m) grid.push_back(t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-9; }),
               grid.end());

    EvolveOptions eopts;
    eopts.rtol = cfg.solver.rtol;
    eopts.atol = cfg.solver.atol;
    eopts.method = cfg.solver.method;
    eopts.store_states = final_stage && keep_checkpoints;
    const Trajectory traj = evolve(lv, rho, grid, eopts, observables);

    for (std::size_t k = 0; k < traj.times_tau_m.size(); ++k) {
      if (k == 0 && si > 0) continue;  // stage boundary already recorded
      out.times.push_back(t0 + traj.times_tau_m[k]);
      out.nbar.push_back(traj.observables.at("nbar")[k].real());
      out.pop_down.push_back(traj.observables.at("pop_down")[k].real());
      out.pop_up.push_back(traj.observables.at("pop_up")[k].real());
      out.pop_e.push_back(traj.observables.at("pop_e")[k].real());
    }

    if (eopts.store_states) {
      for (double cp : stage.durations_tau_m) {
        for (std::size_t k = 0; k < traj.times_tau_m.size(); ++k) {
          if (std::abs(traj.times_tau_m[k] - cp) < 1e-9) {
            out.checkpoints.emplace_back(t0 + cp, traj.states[k]);
          }
        }
      }
      rho = traj.states.back();
    } else {
      // recover the end state by one more evolve if states were not stored
      EvolveOptions once = eopts;
      once.store_states = true;
      const Trajectory tail =
          evolve(lv, rho, {0.0, t_end}, once, ObservableSet{});
      rho = tail.states.back();
    }
    t0 += t_end;
  }
  out.final_state = rho;
  return out;
}

void run_rfs_timed(const ScenarioConfig& cfg, const std::string& dir,
                   RunManifest& manifest, Emitted& emitted) {
  if (!cfg.initial_state || cfg.stages.empty()) {
    throw SchemaError("rfs-timed requires initial_state and stages");
  }
  const StagedTrajectory traj = run_stages(cfg, cfg.model.fock_cutoff, true);

  if (cfg.solver.run_gate) {
    const StagedTrajectory ref = run_stages(cfg, cfg.model.fock_cutoff + 10, false);
    const double a = traj.nbar.back(), b = ref.nbar.back();
    const double rel = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30});
    manifest.gates.push_back({"nbar(t_end)", cfg.model.fock_cutoff, a, b, rel,
                              rel < cfg.solver.gate_tolerance});
  }

  CsvTable t = base_table(manifest, cfg.stages.back().params);
  t.columns = {"t_tau_m", "nbar", "pop_down", "pop_up", "pop_e"};
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    t.rows.push_back({traj.times[k], traj.nbar[k], traj.pop_down[k],
                      traj.pop_up[k], traj.pop_e[k]});
  }
  write_csv(dir + "/nbar_t.csv", t);
  emitted.add(dir + "/nbar_t.csv");

  RfsOptions opts = rfs_options_from(cfg);
  for (const auto& [t_cp, state] : traj.checkpoints) {
    SystemParams params = cfg.stages.back().params;
    params.fock_cutoff = cfg.model.fock_cutoff;
    opts.mode = EvalMode::kAtTime;
    opts.at_time_tau_m = t_cp;
    const SpectrumResult s = rfs_from_state(params, state, opts);
    CsvTable st = base_table(manifest, params);
    st.metadata["evaluated_at"] = std::to_string(t_cp) + " tau_m";
    const std::string path = dir + "/rfs_t" + format_time_tag(t_cp) + ".csv";
    write_spectrum_csv(path, s, st, emitted);
    if (cfg.output.plots) {
      const std::string plot = dir + "/rfs_t" + format_time_tag(t_cp) + ".svg";
      write_svg_curve(plot, s.axis, {{"intensity", s.values}},
                      "time-resolved resonance fluorescence",
                      "(omega - omega_eg) [Omega]", "S");
      emitted.add(plot);
    }
  }

  if (cfg.output.plots) {
    const std::string plot = dir + "/nbar_t.svg";
    write_svg_curve(plot,
                    Eigen::Map<const RealVector>(traj.times.data(), traj.times.size()),
                    {{"nbar", Eigen::Map<const RealVector>(traj.nbar.data(),
                                                           traj.nbar.size())}},
                    "mechanical occupation", "t [tau_m]", "nbar");
    emitted.add(plot);
  }

  for (const auto& g : manifest.gates) {
    if (!g.passed) {
      throw ConvergenceGateError("rfs-timed gate failed on " + g.observable,
                                 g.relative_change);
    }
  }
}

}  // namespace

RunOutcome run_scenario(ScenarioConfig cfg, const RunOverrides& overrides) {
  RunOutcome outcome;
#ifdef _OPENMP
  if (overrides.threads > 0) omp_set_num_threads(overrides.threads);
#endif
  if (overrides.cutoff > 0) {
    cfg.model.fock_cutoff = overrides.cutoff;
    for (auto& stage : cfg.stages) stage.params.fock_cutoff = overrides.cutoff;
  }
  refresh_fingerprint(cfg);

  const std::string dir = resolve_out_dir(cfg, overrides);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    outcome.exit_code = kExitSchema;
    outcome.message = "cannot create output directory '" + dir + "': " + ec.message();
    return outcome;
  }

  RunManifest manifest;
  manifest.config_hash = fnv1a_hex(cfg.canonical_text);
  manifest.scenario = cfg.scenario;
  manifest.rtol = cfg.solver.rtol;
  manifest.atol = cfg.solver.atol;
  manifest.cutoff_used = cfg.model.fock_cutoff;
  manifest.seed = overrides.seed;

  Emitted emitted;
  const auto t_start = std::chrono::steady_clock::now();
  int exit_code = kExitOk;
  std::string message;

  try {
    const DirectoryLock lock(dir);
    bool map_failures = false;
    if (cfg.scenario == "design") {
      run_design(cfg, dir, manifest, emitted);
    } else if (cfg.scenario == "cool-curve") {
      run_cool_curve(cfg, dir, manifest, emitted);
    } else if (cfg.scenario == "cool-map") {
      run_cool_map(cfg, dir, manifest, emitted, map_failures);
      if (map_failures) {
        exit_code = kExitSolver;
        message = "cool-map finished with per-point failures (NaN holes flagged)";
      }
    } else if (cfg.scenario == "eit-sweep") {
      run_eit_sweep(cfg, dir, manifest, emitted);
    } else if (cfg.scenario == "eit-analytic") {
      run_eit_analytic(cfg, dir, manifest, emitted);
    } else if (cfg.scenario == "rfs-steady") {
      run_rfs_steady(cfg, dir, manifest, emitted);
    } else if (cfg.scenario == "rfs-timed") {
      run_rfs_timed(cfg, dir, manifest, emitted);
    } else {
      throw SchemaError("unknown scenario '" + cfg.scenario + "'");
    }
  } catch (const SchemaError& e) {
    exit_code = kExitSchema;
    message = e.what();
  } catch (const ConvergenceGateError& e) {
    exit_code = kExitGate;
    message = e.what();
  } catch (const std::invalid_argument& e) {
    exit_code = kExitSchema;
    message = e.what();
  } catch (const std::exception& e) {
    exit_code = kExitSolver;
    message = e.what();
  }

  manifest.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  manifest.outputs = emitted.files;
  const std::string manifest_path = dir + "/run_manifest.json";
  try {
    manifest.write(manifest_path);
    outcome.outputs = emitted.files;
    outcome.outputs.push_back(manifest_path);
  } catch (const std::exception& e) {
    if (exit_code == kExitOk) {
      exit_code = kExitSolver;
      message = e.what();
    }
  }

  outcome.exit_code = exit_code;
  outcome.message = message;
  return outcome;
}

}  // namespace lambdaphonon::cli
