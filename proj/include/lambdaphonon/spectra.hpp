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

#ifndef LAMBDAPHONON_SPECTRA_HPP
#define LAMBDAPHONON_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lambdaphonon/model.hpp"
#include "lambdaphonon/solvers.hpp"

namespace lambdaphonon {

enum class EvalMode { kSteadyState, kAtTime };

struct SpectrumMetadata {
  SystemParams params;
  EvalMode mode = EvalMode::kSteadyState;
  double eval_time_tau_m = 0.0;
  std::string note;
};

/// A real-valued spectrum on a strictly increasing axis. For absorption the
/// axis is the probe detuning delta_p; for emission it is (omega - omega_eg),
/// both in units of Omega.
struct SpectrumResult {
  RealVector axis;
  RealVector values;
  std::map<std::string, RealVector> extra;
  SpectrumMetadata meta;
};

inline RealVector linspaced(int points, double lo, double hi) {
  return RealVector::LinSpaced(points, lo, hi);
}

/// Probe-coherence readout <sigma_e,down> = sum_m <down,m|rho|e,m>, the matrix
/// element behind the absorption signal.
inline Complex probe_coherence(const DensityMatrix& rho, const HilbertSpace& space) {
  return expectation(
      rho, emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kDown));
}

/// Steady state of the driven system. With the control drive exactly off the
/// up level is disconnected and the full Liouvillian null space is
/// degenerate; the physically reached state has no up population, so the
/// solve is done exactly on the closed down/excited subspace and embedded
/// back with zero up-sector entries.
inline DensityMatrix driven_steady_state(const SystemParams& p,
                                         const SteadyStateOptions& opts) {
  if (p.probe_rabi == 0.0 && p.control_rabi == 0.0) {
    // both ground populations are conserved separately: never unique
    throw MultiplicityError(
        "undriven emitter: the ground-level populations are conserved and "
        "the steady state is a non-unique mixture");
  }
  if (p.control_rabi != 0.0 || p.probe_rabi == 0.0) {
    return steady_state(liouvillian(p), opts);
  }
  const HilbertSpace space = p.space();
  const int n = space.fock_cutoff();
  const int dim = space.total_dim();
  std::vector<int> keep;
  keep.reserve(2 * n);
  for (int m = 0; m < n; ++m) keep.push_back(space.index(EmitterLevel::kDown, m));
  for (int m = 0; m < n; ++m) keep.push_back(space.index(EmitterLevel::kExcited, m));
  std::vector<int> pos(dim, -1);
  for (std::size_t a = 0; a < keep.size(); ++a) pos[keep[a]] = int(a);

  const SparseMatrix lv = liouvillian(p);
  const int rdim = int(keep.size());
  std::vector<Triplet> entries;
  entries.reserve(lv.nonZeros());
  for (int k = 0; k < lv.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(lv, k); it; ++it) {
      const int rr = int(it.row()) % dim, rc = int(it.row()) / dim;
      const int cr = int(it.col()) % dim, cc = int(it.col()) / dim;
      if (pos[rr] < 0 || pos[rc] < 0 || pos[cr] < 0 || pos[cc] < 0) continue;
      entries.emplace_back(pos[rc] * rdim + pos[rr], pos[cc] * rdim + pos[cr],
                           it.value());
    }
  }
  SparseMatrix reduced(Eigen::Index(rdim) * rdim, Eigen::Index(rdim) * rdim);
  reduced.setFromTriplets(entries.begin(), entries.end());
  const DensityMatrix rho_red = steady_state(reduced, opts);
  DensityMatrix rho = DensityMatrix::Zero(dim, dim);
  for (int a = 0; a < rdim; ++a) {
    for (int b = 0; b < rdim; ++b) rho(keep[a], keep[b]) = rho_red(a, b);
  }
  return rho;
}

/// Normalization A = Re[rho_de / (i E_p)] * (gamma / 2): the bare two-level
/// resonance reads exactly 1.
inline double normalized_absorption(Complex coherence, const SystemParams& p) {
  if (p.probe_rabi <= 0.0) {
    throw std::invalid_argument("absorption normalization requires E_p > 0");
  }
  return (coherence / (imag_unit * p.probe_rabi)).real() * (0.5 * p.emitter_decay);
}

struct EitNumericOptions {
  EvalMode mode = EvalMode::kSteadyState;
  double at_time_tau_m = 0.0;
  std::optional<DensityMatrix> initial_state;  // required for kAtTime
  SteadyStateOptions steady;
  EvolveOptions evolve;
};

/// Numerical EIT absorption: one master-equation solve per probe detuning.
inline SpectrumResult eit_absorption_numeric(
    const SystemParams& p, const RealVector& probe_grid,
    const EitNumericOptions& opts = EitNumericOptions{}) {
  p.validate();
  if (probe_grid.size() < 1) throw std::invalid_argument("empty probe grid");
  for (int i = 1; i < probe_grid.size(); ++i) {
    if (probe_grid[i] <= probe_grid[i - 1]) {
      throw std::invalid_argument("probe grid must be strictly increasing");
    }
  }
  if (opts.mode == EvalMode::kAtTime && !opts.initial_state.has_value()) {
    throw std::invalid_argument("at_time absorption requires an initial state");
  }

  const HilbertSpace space = p.space();
  const int npts = int(probe_grid.size());
  RealVector absorption(npts), coh_re(npts), coh_im(npts);
  std::vector<std::string> failures(npts);

  SteadyStateOptions per_point = opts.steady;

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < npts; ++i) {
    SystemParams pi = p.with_probe_detuning(probe_grid[i]);
    try {
      DensityMatrix rho;
      if (opts.mode == EvalMode::kSteadyState) {
        rho = driven_steady_state(pi, per_point);
      } else {
        EvolveOptions eopts = opts.evolve;
        eopts.store_states = true;
        const Trajectory traj = evolve(liouvillian(pi), *opts.initial_state,
                                       {0.0, opts.at_time_tau_m}, eopts);
        rho = traj.states.back();
      }
      const Complex c = probe_coherence(rho, space);
      absorption[i] = normalized_absorption(c, pi);
      coh_re[i] = c.real();
      coh_im[i] = c.imag();
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (int i = 0; i < npts; ++i) {
    if (!failures[i].empty()) {
      throw SolverError("absorption point delta_p = " +
                            std::to_string(probe_grid[i]) +
                            " failed: " + failures[i], 0.0);
    }
  }

  SpectrumResult out;
  out.axis = probe_grid;
  out.values = absorption;
  out.extra["coherence_re"] = coh_re;
  out.extra["coherence_im"] = coh_im;
  out.meta.params = p;
  out.meta.mode = opts.mode;
  out.meta.eval_time_tau_m = opts.at_time_tau_m;
  return out;
}

struct AnalyticEitOptions {
  int n_max = -1;           // -1: extend until the shell bound drops below tol
  double tail_tol = 1e-8;   // relative shell-contribution cutoff
  bool polaron_shift = true;  // delta_p_tilde = delta_p + G^2/Omega (default)
};

/// Bookkeeping of the sideband series: attenuation, truncation order and the
/// per-shell Lorentzian contributions (largest magnitude over the grid).
struct AnalyticEitTerms {
  double alpha = 1.0;
  int n_max = 0;
  std::vector<double> shell_magnitudes;
};

namespace detail {

// log of E_c^2 alpha^2 binom(n,k) beta^{2n} Nbar^{n-k} (Nbar+1)^k / n!
inline double log_series_coefficient(double log_prefactor, double beta2,
                                     double nbar, int n, int k) {
  double lt = log_prefactor + n * std::log(beta2);
  lt += std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  lt -= std::lgamma(n + 1.0);
  if (n - k > 0) lt += (n - k) * std::log(nbar);
  if (k > 0) lt += k * std::log1p(nbar);
  return lt;
}

}  // namespace detail

/// Closed-form multiple-EIT coherence: the phonon-sideband series
///   rho_de = i E_p alpha / (gamma/2 - i dp~ + E_c^2 alpha^2 sum_nk T(n,k) L(n,k))
/// with T(n,k) = binom(n,k) beta^{2n} Nbar^{n-k} (Nbar+1)^k / n! and
/// L(n,k) = 1 / (n Gamma/2 - i [dp - dc + (n - 2k) Omega]). The series is the
/// independent-boson expansion of the dressed control pathway; its G -> 0
/// limit is the exact three-level EIT coherence. Valid for G below about
/// Omega (a note is set on the result otherwise).
inline SpectrumResult eit_absorption_analytic(
    const SystemParams& p, const RealVector& probe_grid,
    const AnalyticEitOptions& opts = AnalyticEitOptions{},
    AnalyticEitTerms* terms_out = nullptr) {
  p.validate();
  if (p.probe_rabi <= 0.0) {
    throw std::invalid_argument("analytic absorption requires E_p > 0");
  }
  const double beta = p.coupling;
  const double beta2 = beta * beta;
  const double nbar = p.bath_occupation;
  const double alpha = attenuation_coefficient(p);
  const double gamma_half = 0.5 * p.emitter_decay;
  const double shift = opts.polaron_shift ? beta2 : 0.0;
  const double log_prefactor =
      2.0 * std::log(std::max(p.control_rabi, 1e-300)) + 2.0 * std::log(std::max(alpha, 1e-300));

  // Shell magnitude bound: |shell n| <= E_c^2 a^2 (beta^2 (2Nbar+1))^n / (n! n Gamma/2).
  auto shell_bound = [&](int n) {
    if (n == 0) return std::numeric_limits<double>::infinity();
    double lb = log_prefactor + n * std::log(std::max(beta2 * (2.0 * nbar + 1.0), 1e-300)) -
                std::lgamma(n + 1.0);
    const double res_width = std::max(0.5 * n * p.mech_damping, 1e-300);
    return std::exp(lb) / res_width;
  };

  int n_max = opts.n_max;
  if (beta2 == 0.0) {
    n_max = 0;
  } else if (n_max < 0) {
    const int hard_cap = 100000;
    n_max = 1;
    while (n_max < hard_cap) {
      if (double(n_max) > beta2 * (2.0 * nbar + 1.0) &&
          shell_bound(n_max) < opts.tail_tol * gamma_half) {
        break;
      }
      ++n_max;
    }
  } else if (n_max > 0 || beta2 > 0.0) {
    if (shell_bound(n_max + 1) >= opts.tail_tol * gamma_half &&
        double(n_max + 1) > beta2 * (2.0 * nbar + 1.0)) {
      throw TruncationError(
          "analytic EIT series not converged at n_max = " + std::to_string(n_max),
          n_max + 10);
    }
  }

  AnalyticEitTerms terms;
  terms.alpha = alpha;
  terms.n_max = n_max;
  terms.shell_magnitudes.assign(n_max + 1, 0.0);

  const int npts = int(probe_grid.size());
  RealVector absorption(npts), coh_re(npts), coh_im(npts);
  for (int i = 0; i < npts; ++i) {
    const double dp = probe_grid[i];
    Complex series = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      Complex shell = 0.0;
      for (int k = 0; k <= n; ++k) {
        double lt;
        if (n == 0) {
          lt = log_prefactor;
        } else if (nbar == 0.0 && k < n) {
          continue;  // Nbar^{n-k} kills every k < n term
        } else {
          lt = detail::log_series_coefficient(log_prefactor, beta2, nbar, n, k);
        }
        const Complex lorentzian =
            1.0 / Complex(0.5 * n * p.mech_damping,
                          -(dp - p.control_detuning + (n - 2 * k) * 1.0));
        shell += std::exp(lt) * lorentzian;
      }
      series += shell;
      terms.shell_magnitudes[n] =
          std::max(terms.shell_magnitudes[n], std::abs(shell));
    }
    const Complex denominator = Complex(gamma_half, -(dp + shift)) + series;
    const Complex coherence = imag_unit * p.probe_rabi * alpha / denominator;
    absorption[i] = (coherence / (imag_unit * p.probe_rabi)).real() * gamma_half;
    coh_re[i] = coherence.real();
    coh_im[i] = coherence.imag();
  }

  SpectrumResult out;
  out.axis = probe_grid;
  out.values = absorption;
  out.extra["coherence_re"] = coh_re;
  out.extra["coherence_im"] = coh_im;
  out.meta.params = p;
  out.meta.mode = EvalMode::kSteadyState;
  if (beta > 1.0) {
    out.meta.note = "analytic series used beyond its validity range G <= Omega";
  }
  if (terms_out) *terms_out = terms;
  return out;
}

/// Quantum-regression two-time correlation
///   C(tau) = tr{ A exp(L tau) [B rho] }
/// on an increasing tau grid (mechanical periods), propagated with the same
/// integrator as evolve().
inline std::vector<Complex> two_time_correlation(
    const SparseMatrix& liouvillian, const DensityMatrix& rho,
    const SparseMatrix& op_a, const SparseMatrix& op_b,
    const std::vector<double>& tau_grid_tau_m,
    const EvolveOptions& opts = EvolveOptions{}) {
  if (tau_grid_tau_m.empty() || tau_grid_tau_m.front() < 0.0) {
    throw std::invalid_argument("tau grid must start at >= 0 and increase");
  }
  for (std::size_t i = 1; i < tau_grid_tau_m.size(); ++i) {
    if (tau_grid_tau_m[i] <= tau_grid_tau_m[i - 1]) {
      throw std::invalid_argument("tau grid must be strictly increasing");
    }
  }
  const int dim = int(rho.rows());
  const DenseMatrix b_rho = op_b * rho;
  DenseVector w = vec(b_rho);

  auto record_value = [&](const DenseVector& v) {
    Complex c = 0.0;
    for (int k = 0; k < op_a.outerSize(); ++k) {
      for (SparseMatrix::InnerIterator it(op_a, k); it; ++it) {
        // tr(A X) = sum_ij A_ij X_ji with X_ji = v[i*dim + j]
        c += it.value() * v[Eigen::Index(it.row()) * dim + it.col()];
      }
    }
    return c;
  };

  std::vector<Complex> out;
  out.reserve(tau_grid_tau_m.size());
  const LinearMap map(liouvillian);
  std::vector<double> checkpoints(tau_grid_tau_m.size());
  for (std::size_t i = 0; i < tau_grid_tau_m.size(); ++i) {
    checkpoints[i] = tau_grid_tau_m[i] * two_pi;
  }
  if (opts.method == PropagatorMethod::kAdaptiveRk) {
    integrate_linear_adaptive(
        map, w, checkpoints.front(), checkpoints,
        [&](double, const DenseVector& v) { out.push_back(record_value(v)); },
        opts.rtol, opts.atol);
  } else {
    out.push_back(record_value(w));
    for (std::size_t i = 1; i < checkpoints.size(); ++i) {
      w = krylov_expmv(map, std::move(w), checkpoints[i] - checkpoints[i - 1],
                       opts.krylov_tol, opts.krylov_dim);
      out.push_back(record_value(w));
    }
  }
  return out;
}

struct RfsOptions {
  EvalMode mode = EvalMode::kSteadyState;
  double at_time_tau_m = 0.0;
  std::optional<DensityMatrix> initial_state;  // required for kAtTime
  double taper_width = 0.05;   // eta [Omega]: Lorentzian broadening of the taper
  double tail_tol = 1e-6;      // required taper decay at the window end
  double t_max_tau_m = 0.0;    // correlation window; 0 = auto from the taper
  double tau_step = 0.01;      // quadrature step [1/Omega]
  RealVector omega_grid;       // (omega - omega_eg)/Omega axis; empty = auto
  EvolveOptions evolve;
  SteadyStateOptions steady;
};

namespace detail {

// One-sided tapered Fourier transform 2 Re int_0^T e^{-i W tau} c(tau)
// e^{-eta tau} d tau by composite Simpson on the uniform grid.
inline double tapered_fourier(const std::vector<Complex>& c, double dtau,
                              double eta, double w) {
  const std::size_t n = c.size();
  const Complex rot = std::exp(Complex(-eta * dtau, -w * dtau));
  Complex phase = 1.0;
  Complex acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double simpson;
    if (j == 0 || j + 1 == n) {
      simpson = 1.0;
    } else {
      simpson = (j % 2 == 1) ? 4.0 : 2.0;
    }
    acc += simpson * phase * c[j];
    phase *= rot;
  }
  return 2.0 * (acc * (dtau / 3.0)).real();
}

}  // namespace detail

/// Resonance fluorescence spectrum of a given emitter-mechanics state under
/// the Liouvillian of p: the tapered one-sided transform of the
/// quantum-regression dipole correlations of both Lambda branches. The output
/// axis is (omega - omega_eg)/Omega; the up-branch appears offset by the
/// ground-state splitting Delta_0. The Lorentzian taper exp(-eta tau) is the
/// documented window: every feature is broadened by eta.
inline SpectrumResult rfs_from_state(const SystemParams& p,
                                     const DensityMatrix& rho,
                                     const RfsOptions& opts = RfsOptions{}) {
  p.validate();
  const HilbertSpace space = p.space();
  const SparseMatrix lv = liouvillian(p);

  const double eta = opts.taper_width;
  if (eta <= 0.0) throw std::invalid_argument("taper width must be > 0");
  const double t_max_auto = std::log(1.0 / opts.tail_tol) / eta;
  const double t_max =
      opts.t_max_tau_m > 0.0 ? opts.t_max_tau_m * two_pi : t_max_auto;
  if (std::exp(-eta * t_max) > opts.tail_tol * (1.0 + 1e-9)) {
    throw WindowError(
        "correlation window too short: taper reaches only " +
            std::to_string(std::exp(-eta * t_max)) + " at T_max; need T_max >= " +
            std::to_string(t_max_auto) + " / Omega (" +
            std::to_string(t_max_auto / two_pi) + " tau_m)",
        t_max_auto);
  }

  int n_steps = int(std::ceil(t_max / opts.tau_step));
  if (n_steps % 2 == 1) ++n_steps;  // Simpson needs an even interval count
  const double dtau = t_max / n_steps;
  std::vector<double> tau_grid(n_steps + 1);
  for (int j = 0; j <= n_steps; ++j) tau_grid[j] = j * dtau / two_pi;
  tau_grid.front() = 0.0;

  const SparseMatrix sig_ed =
      emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kDown);
  const SparseMatrix sig_de =
      emitter_op(space, EmitterLevel::kDown, EmitterLevel::kExcited);
  const SparseMatrix sig_eu =
      emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kUp);
  const SparseMatrix sig_ue =
      emitter_op(space, EmitterLevel::kUp, EmitterLevel::kExcited);

  const std::vector<Complex> c_down =
      two_time_correlation(lv, rho, sig_ed, sig_de, tau_grid, opts.evolve);
  const std::vector<Complex> c_up =
      two_time_correlation(lv, rho, sig_eu, sig_ue, tau_grid, opts.evolve);

  // Elastic reference lines: the probe laser sits at delta_p on this axis and
  // the control at delta_c - Delta_0.
  const double ref_down = p.probe_detuning;
  const double ref_up = p.control_detuning - p.ground_splitting;

  RealVector axis;
  if (opts.omega_grid.size() > 0) {
    axis = opts.omega_grid;
  } else {
    const double beta = std::abs(p.coupling);
    const double red = beta * beta + 8.0 * beta + 10.0;
    const double blue = 0.5 * beta * beta + 6.0 * beta + 10.0;
    const double step = std::max(eta / 3.0, 1e-4);
    const RealVector down_axis = linspaced(
        int((red + blue) / step) + 1, ref_down - red, ref_down + blue);
    if (p.ground_splitting == 0.0) {
      axis = down_axis;
    } else {
      const RealVector up_axis = linspaced(
          int((red + blue) / step) + 1, ref_up - red, ref_up + blue);
      std::vector<double> merged(down_axis.data(), down_axis.data() + down_axis.size());
      merged.insert(merged.end(), up_axis.data(), up_axis.data() + up_axis.size());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end(),
                               [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                   merged.end());
      axis = Eigen::Map<RealVector>(merged.data(), merged.size());
    }
  }
  for (int i = 1; i < axis.size(); ++i) {
    if (axis[i] <= axis[i - 1]) {
      throw std::invalid_argument("omega grid must be strictly increasing");
    }
  }

  RealVector s_down(axis.size()), s_up(axis.size()), total(axis.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < axis.size(); ++i) {
    s_down[i] = detail::tapered_fourier(c_down, dtau, eta, axis[i] - ref_down);
    s_up[i] = detail::tapered_fourier(c_up, dtau, eta, axis[i] - ref_up);
    total[i] = s_down[i] + s_up[i];
  }

  SpectrumResult out;
  out.axis = axis;
  out.values = total;
  out.extra["branch_down"] = s_down;
  out.extra["branch_up"] = s_up;
  out.meta.params = p;
  out.meta.mode = opts.mode;
  out.meta.eval_time_tau_m = opts.at_time_tau_m;
  return out;
}

/// Steady-state or fixed-time RFS; prepares the state and defers to
/// rfs_from_state.
inline SpectrumResult rfs(const SystemParams& p,
                          const RfsOptions& opts = RfsOptions{}) {
  p.validate();
  DensityMatrix rho;
  if (opts.mode == EvalMode::kSteadyState) {
    rho = driven_steady_state(p, opts.steady);
  } else {
    if (!opts.initial_state.has_value()) {
      throw std::invalid_argument("time-resolved RFS requires an initial state");
    }
    EvolveOptions eopts = opts.evolve;
    eopts.store_states = true;
    const Trajectory traj = evolve(liouvillian(p), *opts.initial_state,
                                   {0.0, opts.at_time_tau_m}, eopts);
    rho = traj.states.back();
  }
  return rfs_from_state(p, rho, opts);
}

/// Trapezoid integral of a spectrum column divided by 2 pi; with the taper
/// this recovers C(0) (the sum rule).
inline double spectrum_integral(const RealVector& axis, const RealVector& values) {
  double acc = 0.0;
  for (int i = 1; i < axis.size(); ++i) {
    acc += 0.5 * (values[i] + values[i - 1]) * (axis[i] - axis[i - 1]);
  }
  return acc / two_pi;
}

struct CoolingMapResult {
  RealVector probe_detunings;
  RealVector control_rabis;
  RealMatrix occupation;      // n_ss, rows = detuning index, cols = E_c index
  RealMatrix efficiency;      // Nbar / n_ss
  RealMatrix absorption;      // normalized probe absorption
  std::vector<std::string> failures;  // "i,j: message" entries; holes are NaN
};

/// Steady-state occupation and cooling efficiency over a probe-detuning x
/// control-Rabi grid, with the probe locked to E_p = 0.1 E_c. Points run in
/// parallel; failures leave NaN holes and are reported, not thrown.
inline CoolingMapResult cooling_map(const SystemParams& p,
                                    const RealVector& probe_grid,
                                    const RealVector& control_grid,
                                    const SteadyStateOptions& steady = SteadyStateOptions{}) {
  p.validate();
  CoolingMapResult out;
  out.probe_detunings = probe_grid;
  out.control_rabis = control_grid;
  const int ni = int(probe_grid.size());
  const int nj = int(control_grid.size());
  out.occupation = RealMatrix::Constant(ni, nj, std::nan(""));
  out.efficiency = RealMatrix::Constant(ni, nj, std::nan(""));
  out.absorption = RealMatrix::Constant(ni, nj, std::nan(""));
  std::vector<std::string> failures(std::size_t(ni) * nj);

  const HilbertSpace space = p.space();
  const auto ops = boson_ops(space);

#pragma omp parallel for schedule(dynamic) collapse(2)
  for (int i = 0; i < ni; ++i) {
    for (int j = 0; j < nj; ++j) {
      SystemParams pij = p;
      pij.probe_detuning = probe_grid[i];
      pij.control_rabi = control_grid[j];
      pij.probe_rabi = 0.1 * control_grid[j];
      try {
        const DensityMatrix rho = driven_steady_state(pij, steady);
        const double n = expectation_real(rho, ops.number);
        out.occupation(i, j) = n;
        out.efficiency(i, j) = n > 0.0 ? pij.bath_occupation / n
                                       : std::numeric_limits<double>::infinity();
        out.absorption(i, j) =
            normalized_absorption(probe_coherence(rho, space), pij);
      } catch (const std::exception& e) {
        failures[std::size_t(i) * nj + j] = std::string(e.what());
      }
    }
  }
  for (int i = 0; i < ni; ++i) {
    for (int j = 0; j < nj; ++j) {
      const std::string& f = failures[std::size_t(i) * nj + j];
      if (!f.empty()) {
        out.failures.push_back(std::to_string(i) + "," + std::to_string(j) + ": " + f);
      }
    }
  }
  return out;
}

struct CoolingCurvePoint {
  double probe_detuning = 0.0;
  double occupation = 0.0;
  double absorption = 0.0;
};

/// Steady-state occupation and absorption along a probe-detuning scan at
/// fixed drive strengths.
inline std::vector<CoolingCurvePoint> cooling_curve(
    const SystemParams& p, const RealVector& probe_grid,
    const SteadyStateOptions& steady = SteadyStateOptions{}) {
  p.validate();
  const HilbertSpace space = p.space();
  const auto ops = boson_ops(space);
  const int npts = int(probe_grid.size());
  std::vector<CoolingCurvePoint> out(npts);
  std::vector<std::string> failures(npts);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < npts; ++i) {
    SystemParams pi = p.with_probe_detuning(probe_grid[i]);
    out[i].probe_detuning = probe_grid[i];
    try {
      const DensityMatrix rho = driven_steady_state(pi, steady);
      out[i].occupation = expectation_real(rho, ops.number);
      out[i].absorption = normalized_absorption(probe_coherence(rho, space), pi);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (int i = 0; i < npts; ++i) {
    if (!failures[i].empty()) {
      throw SolverError("cooling curve point delta_p = " +
                            std::to_string(probe_grid[i]) + " failed: " + failures[i],
                        0.0);
    }
  }
  return out;
}

/// Local extrema (index, position, value, prominence-like depth) of a sampled
/// curve; used for comb-tooth and sideband location checks.
struct Extremum {
  int index;
  double position;
  double value;
  bool is_maximum;
};

inline std::vector<Extremum> local_extrema(const RealVector& axis,
                                           const RealVector& values,
                                           double min_relative_prominence = 1e-6) {
  std::vector<Extremum> out;
  const double scale = values.cwiseAbs().maxCoeff();
  const double floor = min_relative_prominence * scale;
  for (int i = 1; i + 1 < values.size(); ++i) {
    const bool max_pt = values[i] > values[i - 1] && values[i] >= values[i + 1];
    const bool min_pt = values[i] < values[i - 1] && values[i] <= values[i + 1];
    if (!max_pt && !min_pt) continue;
    // prominence against the nearer flanks
    double left = values[i], right = values[i];
    for (int j = i - 1; j >= 0; --j) {
      if (max_pt ? values[j] > values[i] : values[j] < values[i]) break;
      left = max_pt ? std::min(left, values[j]) : std::max(left, values[j]);
    }
    for (int j = i + 1; j < values.size(); ++j) {
      if (max_pt ? values[j] > values[i] : values[j] < values[i]) break;
      right = max_pt ? std::min(right, values[j]) : std::max(right, values[j]);
    }
    const double prom = max_pt ? values[i] - std::max(left, right)
                               : std::min(left, right) - values[i];
    if (prom >= floor) {
      out.push_back({i, axis[i], values[i], max_pt});
    }
  }
  return out;
}

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_SPECTRA_HPP
