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

#ifndef LAMBDAPHONON_SOLVERS_HPP
#define LAMBDAPHONON_SOLVERS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>
#include <unsupported/Eigen/MatrixFunctions>

#include "lambdaphonon/errors.hpp"
#include "lambdaphonon/states.hpp"
#include "lambdaphonon/superop.hpp"
#include "lambdaphonon/types.hpp"

namespace lambdaphonon {

/// tr(O rho). Throws on dimension mismatch.
inline Complex expectation(const DensityMatrix& rho, const SparseMatrix& op) {
  if (rho.rows() != op.rows() || rho.cols() != op.cols()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  Complex tr = 0.0;
  for (int k = 0; k < op.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(op, k); it; ++it) {
      tr += it.value() * rho(it.col(), it.row());
    }
  }
  return tr;
}

/// Real expectation value of a Hermitian observable; rejects imaginary
/// residue above `imag_tol`.
inline double expectation_real(const DensityMatrix& rho, const SparseMatrix& op,
                               double imag_tol = 1e-9) {
  const Complex v = expectation(rho, op);
  if (std::abs(v.imag()) > imag_tol * std::max(1.0, std::abs(v.real()))) {
    throw SolverError("expectation of Hermitian observable has imaginary part " +
                          std::to_string(v.imag()), std::abs(v.imag()));
  }
  return v.real();
}

/// Cached row-major copy of a superoperator for fast repeated mat-vecs.
/// Row-major sparse times dense vector is the one sparse product Eigen
/// multithreads, and per-row accumulation keeps results bitwise independent
/// of the thread count.
class LinearMap {
 public:
  explicit LinearMap(const SparseMatrix& a) : a_(a) { a_.makeCompressed(); }

  Eigen::Index dim() const { return a_.rows(); }

  void apply(const DenseVector& x, DenseVector& y) const {
    y.noalias() = a_ * x;
  }

  DenseVector operator()(const DenseVector& x) const {
    DenseVector y(a_.rows());
    apply(x, y);
    return y;
  }

 private:
  RowSparseMatrix a_;
};

namespace detail {

// Dormand-Prince 5(4) pair with FSAL; the right-hand side is the fixed
// linear map y' = L y.
struct Dopri5Workspace {
  DenseVector k1, k2, k3, k4, k5, k6, k7, ytmp, ynew, yerr;
};

inline double error_norm(const DenseVector& err, const DenseVector& y0,
                         const DenseVector& y1, double rtol, double atol) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double scale =
        atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double e = std::abs(err[i]) / scale;
    acc += e * e;
  }
  return std::sqrt(acc / double(err.size()));
}

// One trial step; returns scaled error norm and fills ws.ynew / ws.k7.
inline double dopri5_step(const LinearMap& map, const DenseVector& y,
                          const DenseVector& k1, double h,
                          Dopri5Workspace& ws, double rtol, double atol) {
  ws.ytmp = y + h * (1.0 / 5.0) * k1;
  map.apply(ws.ytmp, ws.k2);
  ws.ytmp = y + h * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * ws.k2);
  map.apply(ws.ytmp, ws.k3);
  ws.ytmp = y + h * ((44.0 / 45.0) * k1 + (-56.0 / 15.0) * ws.k2 +
                     (32.0 / 9.0) * ws.k3);
  map.apply(ws.ytmp, ws.k4);
  ws.ytmp = y + h * ((19372.0 / 6561.0) * k1 + (-25360.0 / 2187.0) * ws.k2 +
                     (64448.0 / 6561.0) * ws.k3 + (-212.0 / 729.0) * ws.k4);
  map.apply(ws.ytmp, ws.k5);
  ws.ytmp = y + h * ((9017.0 / 3168.0) * k1 + (-355.0 / 33.0) * ws.k2 +
                     (46732.0 / 5247.0) * ws.k3 + (49.0 / 176.0) * ws.k4 +
                     (-5103.0 / 18656.0) * ws.k5);
  map.apply(ws.ytmp, ws.k6);
  ws.ynew = y + h * ((35.0 / 384.0) * k1 + (500.0 / 1113.0) * ws.k3 +
                     (125.0 / 192.0) * ws.k4 + (-2187.0 / 6784.0) * ws.k5 +
                     (11.0 / 84.0) * ws.k6);
  map.apply(ws.ynew, ws.k7);
  ws.yerr = h * ((35.0 / 384.0 - 5179.0 / 57600.0) * k1 +
                 (500.0 / 1113.0 - 7571.0 / 16695.0) * ws.k3 +
                 (125.0 / 192.0 - 393.0 / 640.0) * ws.k4 +
                 (-2187.0 / 6784.0 + 92097.0 / 339200.0) * ws.k5 +
                 (11.0 / 84.0 - 187.0 / 2100.0) * ws.k6 +
                 (-1.0 / 40.0) * ws.k7);
  return error_norm(ws.yerr, y, ws.ynew, rtol, atol);
}

}  // namespace detail

/// Integrates y' = L y from t0 to t1 (both in 1/Omega time units) with the
/// adaptive Dormand-Prince 5(4) scheme, invoking `observer(t, y)` at every
/// accepted step boundary listed in `checkpoints` (strictly increasing,
/// first >= t0, last == t1). Throws StiffnessError on step collapse.
inline void integrate_linear_adaptive(
    const LinearMap& map, DenseVector& y, double t0,
    const std::vector<double>& checkpoints,
    const std::function<void(double, const DenseVector&)>& observer,
    double rtol = 1e-8, double atol = 1e-10,
    double max_step = std::numeric_limits<double>::infinity()) {
  detail::Dopri5Workspace ws;
  map.apply(y, ws.k1);
  double t = t0;
  double h = std::min(0.01, max_step);
  const double t_end = checkpoints.empty() ? t0 : checkpoints.back();
  const double h_min =
      std::max(1e-13, 1e-12 * std::max(1.0, std::abs(t_end - t0)));
  std::size_t next_cp = 0;
  while (next_cp < checkpoints.size() && checkpoints[next_cp] <= t + h_min) {
    observer(checkpoints[next_cp], y);
    ++next_cp;
  }
  while (next_cp < checkpoints.size()) {
    bool hit_checkpoint = false;
    double h_try = std::min(h, max_step);
    if (t + h_try >= checkpoints[next_cp] - h_min) {
      h_try = checkpoints[next_cp] - t;
      hit_checkpoint = true;
    }
    const double err =
        detail::dopri5_step(map, y, ws.k1, h_try, ws, rtol, atol);
    if (err <= 1.0) {
      t = hit_checkpoint ? checkpoints[next_cp] : t + h_try;
      y.swap(ws.ynew);
      ws.k1.swap(ws.k7);
      if (hit_checkpoint) {
        observer(t, y);
        ++next_cp;
      }
      const double grow =
          err == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(err, -0.2));
      h = std::min(std::max(h_try * grow, h_min), max_step);
    } else {
      h = std::max(h_try * std::max(0.2, 0.9 * std::pow(err, -0.2)), h_min);
      if (h <= h_min * (1.0 + 1e-12)) {
        throw StiffnessError(
            "adaptive step collapsed at t = " + std::to_string(t) +
            "; reduce the Fock cutoff or switch to the Krylov propagator");
      }
    }
  }
}

/// Krylov (Arnoldi) approximation of exp(t L) v with substepping controlled
/// by the standard a-posteriori estimate.
inline DenseVector krylov_expmv(const LinearMap& map, DenseVector v, double t,
                                double tol = 1e-9, int krylov_dim = 48) {
  const Eigen::Index n = v.size();
  const int m = int(std::min<Eigen::Index>(krylov_dim, n));
  double remaining = t;
  double dt = t;
  int guard = 0;
  while (remaining > 0.0) {
    if (++guard > 100000) {
      throw StiffnessError("krylov_expmv: substep count exceeded");
    }
    dt = std::min(dt, remaining);
    const double beta = v.norm();
    if (beta == 0.0) return v;
    DenseMatrix basis(n, m + 1);
    DenseMatrix hess = DenseMatrix::Zero(m + 2, m + 1);
    basis.col(0) = v / beta;
    int built = m;
    bool happy = false;
    for (int j = 0; j < m; ++j) {
      DenseVector w = map(basis.col(j));
      for (int i = 0; i <= j; ++i) {
        const Complex hij = basis.col(i).dot(w);
        hess(i, j) = hij;
        w -= hij * basis.col(i);
      }
      // One re-orthogonalization pass keeps the basis usable at large m.
      for (int i = 0; i <= j; ++i) {
        const Complex c = basis.col(i).dot(w);
        hess(i, j) += c;
        w -= c * basis.col(i);
      }
      const double hnorm = w.norm();
      hess(j + 1, j) = hnorm;
      if (hnorm < 1e-14 * std::max(1.0, beta)) {
        built = j + 1;
        happy = true;
        break;
      }
      basis.col(j + 1) = w / hnorm;
    }
    const DenseMatrix hm = hess.topLeftCorner(built, built);
    const DenseMatrix exph = (dt * hm).exp();
    double err_est = 0.0;
    if (!happy) {
      err_est = std::abs(hess(built, built - 1)) *
                std::abs(exph(built - 1, 0)) * beta * dt;
    }
    const double budget = tol * std::max(1.0, beta) * dt / std::max(t, dt);
    if (!happy && err_est > budget && dt > 1e-12 * std::max(1.0, t)) {
      dt *= 0.5;
      continue;
    }
    v = basis.leftCols(built) * (beta * exph.col(0));
    remaining -= dt;
    if (!happy && err_est < 0.1 * budget) dt *= 1.4142;
  }
  return v;
}

enum class PropagatorMethod { kAdaptiveRk, kKrylov };

struct EvolveOptions {
  double rtol = 1e-8;
  double atol = 1e-10;
  PropagatorMethod method = PropagatorMethod::kAdaptiveRk;
  bool store_states = false;
  double trace_tol = 1e-7;
  double krylov_tol = 1e-9;
  int krylov_dim = 48;
};

/// Time-evolution record. Times are in mechanical periods tau_m = 2 pi / Omega.
struct Trajectory {
  std::vector<double> times_tau_m;
  std::vector<DensityMatrix> states;  // filled when store_states is set
  std::map<std::string, std::vector<Complex>> observables;
};

using ObservableSet = std::vector<std::pair<std::string, SparseMatrix>>;

/// Integrates d vec(rho)/dt = L vec(rho) through the given time grid
/// (mechanical periods). rho0 is the state at times.front(). Named observables
/// are recorded at every grid point.
inline Trajectory evolve(const SparseMatrix& liouvillian,
                         const DensityMatrix& rho0,
                         const std::vector<double>& times_tau_m,
                         const EvolveOptions& opts = EvolveOptions{},
                         const ObservableSet& observables = ObservableSet{}) {
  if (times_tau_m.empty()) throw std::invalid_argument("evolve: empty time grid");
  for (std::size_t i = 1; i < times_tau_m.size(); ++i) {
    if (times_tau_m[i] <= times_tau_m[i - 1]) {
      throw std::invalid_argument("evolve: time grid must be strictly increasing");
    }
  }
  const int dim = int(rho0.rows());
  if (liouvillian.rows() != Eigen::Index(dim) * dim) {
    throw std::invalid_argument("evolve: Liouvillian does not match state dimension");
  }

  Trajectory out;
  out.times_tau_m = times_tau_m;
  for (const auto& [name, op] : observables) out.observables[name] = {};

  const LinearMap map(liouvillian);
  DenseVector y = vec(rho0);
  const double initial_trace = std::abs(trace_of_vec(y, dim));

  auto record = [&](const DenseVector& state_vec) {
    const DensityMatrix rho = devec(state_vec, dim);
    if (opts.store_states) out.states.push_back(rho);
    for (const auto& [name, op] : observables) {
      out.observables[name].push_back(expectation(rho, op));
    }
  };

  if (opts.method == PropagatorMethod::kAdaptiveRk) {
    std::vector<double> checkpoints(times_tau_m.size());
    for (std::size_t i = 0; i < times_tau_m.size(); ++i) {
      checkpoints[i] = times_tau_m[i] * two_pi;
    }
    integrate_linear_adaptive(
        map, y, checkpoints.front(), checkpoints,
        [&](double, const DenseVector& v) { record(v); }, opts.rtol, opts.atol);
  } else {
    record(y);
    for (std::size_t i = 1; i < times_tau_m.size(); ++i) {
      const double dt = (times_tau_m[i] - times_tau_m[i - 1]) * two_pi;
      y = krylov_expmv(map, std::move(y), dt, opts.krylov_tol, opts.krylov_dim);
      record(y);
    }
  }

  const double drift = std::abs(std::abs(trace_of_vec(y, dim)) - initial_trace);
  if (drift >= opts.trace_tol) {
    throw SolverError("evolve: trace drifted by " + std::to_string(drift), drift);
  }
  return out;
}

struct SteadyStateOptions {
  double residual_tol = 1e-9;   // on ||L vec(rho)|| relative to ||L||_F
  double clip_negative = 1e-8;  // eigenvalues above -clip are clipped to 0
  double hard_negative = 1e-6;  // beyond this, fail
  bool check_uniqueness = true; // re-solve with a second pinned row
  bool force_gmres = false;
  Eigen::Index gmres_threshold = 300000;  // bordered-system size above which
                                          // the iterative path is used
  int gmres_max_iter = 4000;
  double gmres_tol = 1e-10;
};

namespace detail {

// Bordered steady-state system: the Liouvillian with the row of diagonal
// element (k, k) replaced by the trace functional. Because the trace row is a
// left null vector of L, dropping one diagonal-element row keeps the row
// space intact and the pinned system nonsingular for a unique steady state.
inline SparseMatrix bordered_liouvillian(const SparseMatrix& lv, int dim,
                                         int pin_index) {
  const Eigen::Index pinned_row = Eigen::Index(pin_index) * dim + pin_index;
  std::vector<Triplet> entries;
  entries.reserve(lv.nonZeros() + dim);
  for (int k = 0; k < lv.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(lv, k); it; ++it) {
      if (it.row() != pinned_row) {
        entries.emplace_back(int(it.row()), int(it.col()), it.value());
      }
    }
  }
  for (int j = 0; j < dim; ++j) {
    entries.emplace_back(int(pinned_row), j * dim + j, Complex(1.0, 0.0));
  }
  SparseMatrix bordered(lv.rows(), lv.cols());
  bordered.setFromTriplets(entries.begin(), entries.end());
  return bordered;
}

inline DenseVector solve_bordered(const SparseMatrix& lv, int dim,
                                  int pin_index, const SteadyStateOptions& opts) {
  const SparseMatrix bordered = bordered_liouvillian(lv, dim, pin_index);
  DenseVector rhs = DenseVector::Zero(bordered.rows());
  rhs[Eigen::Index(pin_index) * dim + pin_index] = 1.0;

  if (!opts.force_gmres && bordered.rows() <= opts.gmres_threshold) {
    Eigen::SparseLU<SparseMatrix> lu;
    lu.compute(bordered);
    if (lu.info() == Eigen::Success) {
      return lu.solve(rhs);
    }
    // fall through to the iterative path
  }
  Eigen::GMRES<SparseMatrix, Eigen::DiagonalPreconditioner<Complex>> gmres;
  gmres.setMaxIterations(opts.gmres_max_iter);
  gmres.setTolerance(opts.gmres_tol);
  gmres.compute(bordered);
  DenseVector x = gmres.solve(rhs);
  if (gmres.info() != Eigen::Success) {
    throw SolverError("steady_state: GMRES did not converge, residual " +
                          std::to_string(gmres.error()), gmres.error());
  }
  return x;
}

}  // namespace detail

/// Steady state of a trace-preserving Liouvillian, solved as a bordered
/// linear system (one row pinned to the trace constraint). The result is
/// Hermitized and cleaned of negative eigenvalues within tolerance.
inline DensityMatrix steady_state(const SparseMatrix& liouvillian,
                                  const SteadyStateOptions& opts = SteadyStateOptions{}) {
  const Eigen::Index n = liouvillian.rows();
  const int dim = int(std::llround(std::sqrt(double(n))));
  if (Eigen::Index(dim) * dim != n || liouvillian.cols() != n) {
    throw std::invalid_argument("steady_state: operator is not a superoperator");
  }

  DenseVector x = detail::solve_bordered(liouvillian, dim, 0, opts);
  const Complex tr = trace_of_vec(x, dim);
  if (std::abs(tr) < 1e-12) {
    throw MultiplicityError(
        "steady_state: pinned solve returned a traceless vector; "
        "null space is likely degenerate");
  }
  x /= tr;

  const double lnorm = liouvillian.norm();
  const double residual = (liouvillian * x).norm();
  if (residual >= opts.residual_tol * std::max(lnorm, 1.0)) {
    throw SolverError("steady_state: residual ||L x|| = " +
                          std::to_string(residual) + " exceeds tolerance " +
                          std::to_string(opts.residual_tol * lnorm),
                      residual);
  }

  if (opts.check_uniqueness) {
    DenseVector x2 = detail::solve_bordered(liouvillian, dim, dim / 2, opts);
    const Complex tr2 = trace_of_vec(x2, dim);
    if (std::abs(tr2) < 1e-12 ||
        (x2 / tr2 - x).norm() > 1e-6 * std::max(1.0, x.norm())) {
      throw MultiplicityError(
          "steady_state: two pinned solves disagree; Liouvillian null space "
          "is not one-dimensional");
    }
  }

  DensityMatrix rho = devec(x, dim);
  rho = ((rho + rho.adjoint().eval()) * 0.5).eval();

  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(rho);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig <= -opts.hard_negative) {
    throw SolverError("steady_state: negative eigenvalue " +
                          std::to_string(min_eig) +
                          " beyond the clipping threshold",
                      -min_eig);
  }
  if (min_eig < 0.0) {
    RealVector clipped = es.eigenvalues().cwiseMax(0.0);
    clipped /= clipped.sum();
    rho = es.eigenvectors() * clipped.asDiagonal() *
          es.eigenvectors().adjoint();
  } else {
    rho /= rho.trace().real();
  }
  return rho;
}

struct GapOptions {
  double gap_floor = 1e-8;      // |Re lambda| below this counts as zero
  double shift = 5e-3;          // shift-invert point (positive, off-spectrum)
  int krylov_dim = 90;
  double residual_tol = 1e-8;   // relative Ritz residual ||L v - lambda v||
  Eigen::Index dense_threshold = 4096;  // full dense eigensolve below this
};

struct GapResult {
  double gap = 0.0;             // slowest nonzero decay rate, units of Omega
  double settling_time_tau_m = 0.0;  // 1 / gap in mechanical periods
  std::vector<Complex> eigenvalues;  // the converged small eigenvalues found
};

/// Slowest nonzero decay rate min{ |Re lambda| > gap_floor } of a Liouvillian.
/// Uses shift-inverted Arnoldi iteration about a small positive shift, with a
/// dense eigendecomposition fallback for small superoperators.
inline GapResult spectral_gap(const SparseMatrix& liouvillian,
                              const GapOptions& opts = GapOptions{}) {
  const Eigen::Index n = liouvillian.rows();
  GapResult result;

  if (n <= opts.dense_threshold) {
    Eigen::ComplexEigenSolver<DenseMatrix> es(DenseMatrix(liouvillian), false);
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex lam = es.eigenvalues()[i];
      result.eigenvalues.push_back(lam);
      const double re = std::abs(lam.real());
      if (re > opts.gap_floor && re < best) best = re;
    }
    if (!std::isfinite(best)) {
      throw SolverError("spectral_gap: no eigenvalue above the gap floor", 0.0);
    }
    result.gap = best;
    result.settling_time_tau_m = 1.0 / (two_pi * best);
    return result;
  }

  // Shift-invert: eigenvalues of (L - shift)^-1 are 1/(lambda - shift), so
  // the Liouvillian eigenvalues nearest the shift dominate the Arnoldi basis.
  SparseMatrix shifted = liouvillian;
  for (Eigen::Index i = 0; i < n; ++i) shifted.coeffRef(i, i) -= opts.shift;
  shifted.makeCompressed();
  Eigen::SparseLU<SparseMatrix> lu;
  lu.compute(shifted);
  if (lu.info() != Eigen::Success) {
    throw SolverError("spectral_gap: LU factorization of shifted Liouvillian failed", 0.0);
  }

  const int m = int(std::min<Eigen::Index>(opts.krylov_dim, n - 1));
  DenseMatrix basis(n, m + 1);
  DenseMatrix hess = DenseMatrix::Zero(m + 1, m);
  DenseVector v = DenseVector::Ones(n);
  // Seed with a valid density-matrix direction so the stationary mode and its
  // slow neighbors are present in the starting vector.
  const int dim = int(std::llround(std::sqrt(double(n))));
  for (int j = 0; j < dim; ++j) v[Eigen::Index(j) * dim + j] += 1.0;
  v.normalize();
  basis.col(0) = v;
  int built = 0;
  for (int j = 0; j < m; ++j) {
    DenseVector w = lu.solve(DenseVector(basis.col(j)));
    for (int i = 0; i <= j; ++i) {
      const Complex hij = basis.col(i).dot(w);
      hess(i, j) = hij;
      w -= hij * basis.col(i);
    }
    for (int i = 0; i <= j; ++i) {
      const Complex c = basis.col(i).dot(w);
      hess(i, j) += c;
      w -= c * basis.col(i);
    }
    const double hnorm = w.norm();
    hess(j + 1, j) = hnorm;
    built = j + 1;
    if (hnorm < 1e-13) break;
    basis.col(j + 1) = w / hnorm;
  }

  Eigen::ComplexEigenSolver<DenseMatrix> hes(
      DenseMatrix(hess.topLeftCorner(built, built)), true);

  const LinearMap map(liouvillian);
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> rejected_residuals;
  for (int i = 0; i < built; ++i) {
    const Complex mu = hes.eigenvalues()[i];
    if (std::abs(mu) < 1e-12) continue;
    const Complex lam = opts.shift + 1.0 / mu;
    DenseVector ritz = basis.leftCols(built) * hes.eigenvectors().col(i);
    ritz.normalize();
    const double res = (map(ritz) - lam * ritz).norm();
    const double scale = std::max(std::abs(lam), opts.shift);
    if (res > opts.residual_tol * std::max(scale, 1.0)) {
      rejected_residuals.push_back(res);
      continue;
    }
    result.eigenvalues.push_back(lam);
    const double re = std::abs(lam.real());
    if (re > opts.gap_floor && re < best) best = re;
  }
  if (!std::isfinite(best)) {
    std::string msg = "spectral_gap: Arnoldi produced no converged eigenvalue "
                      "above the gap floor; Ritz residuals:";
    for (double r : rejected_residuals) msg += " " + std::to_string(r);
    throw SolverError(msg, rejected_residuals.empty() ? 0.0 : rejected_residuals.front());
  }
  result.gap = best;
  result.settling_time_tau_m = 1.0 / (two_pi * best);
  return result;
}

struct GateResult {
  double value = 0.0;
  double reference = 0.0;  // value at cutoff + 10
  int cutoff = 0;
  double relative_change = 0.0;
  bool passed = false;
};

/// Double-and-compare truncation gate: evaluates `observable(cutoff)` and
/// `observable(cutoff + 10)` and requires relative agreement within
/// `tolerance` (default 1 %).
inline GateResult converged_cutoff(const std::function<double(int)>& observable,
                                   int cutoff, double tolerance = 0.01,
                                   bool throw_on_failure = true) {
  GateResult g;
  g.cutoff = cutoff;
  g.value = observable(cutoff);
  g.reference = observable(cutoff + 10);
  const double scale = std::max({std::abs(g.value), std::abs(g.reference), 1e-30});
  g.relative_change = std::abs(g.value - g.reference) / scale;
  g.passed = g.relative_change < tolerance;
  if (!g.passed && throw_on_failure) {
    throw ConvergenceGateError(
        "cutoff gate failed: observable changed by " +
            std::to_string(100.0 * g.relative_change) + " % between cutoffs " +
            std::to_string(cutoff) + " and " + std::to_string(cutoff + 10),
        g.relative_change);
  }
  return g;
}

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_SOLVERS_HPP
