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

#ifndef LAMBDAPHONON_STATES_HPP
#define LAMBDAPHONON_STATES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "lambdaphonon/errors.hpp"
#include "lambdaphonon/hilbert.hpp"
#include "lambdaphonon/types.hpp"

namespace lambdaphonon {

// Density matrices are plain dense Eigen matrices with the physical
// invariants (unit trace, Hermiticity, positivity within tolerance) enforced
// by the checks below whenever a solver hands one back.
using DensityMatrix = DenseMatrix;

struct DensityCheckTolerances {
  double trace = 1e-9;
  double hermiticity = 1e-9;
  double negativity = 1e-8;
};

/// Weight of the untruncated geometric distribution beyond the cutoff.
inline double thermal_tail_weight(double nbar, int fock_cutoff) {
  if (nbar <= 0.0) return 0.0;
  const double q = nbar / (nbar + 1.0);
  return std::pow(q, fock_cutoff);
}

/// Smallest cutoff whose tail weight is below `tail_tol`.
inline int minimal_thermal_cutoff(double nbar, double tail_tol = 1e-6) {
  if (nbar <= 0.0) return 2;
  const double q = nbar / (nbar + 1.0);
  const int n = static_cast<int>(std::ceil(std::log(tail_tol) / std::log(q)));
  return std::max(n, 2);
}

/// Occupation probabilities p_m of a thermal mode, renormalized over the
/// truncated space. Throws TruncationError (naming the minimal adequate
/// cutoff) when the discarded tail exceeds `tail_tol`.
inline RealVector thermal_fock_distribution(double nbar, int fock_cutoff,
                                            double tail_tol = 1e-6) {
  if (nbar < 0.0) throw std::invalid_argument("nbar must be >= 0");
  if (fock_cutoff < 1) throw std::invalid_argument("fock cutoff must be >= 1");
  const double tail = thermal_tail_weight(nbar, fock_cutoff);
  if (tail >= tail_tol) {
    throw TruncationError(
        "thermal occupation nbar=" + std::to_string(nbar) + " has tail weight " +
            std::to_string(tail) + " beyond cutoff " +
            std::to_string(fock_cutoff) + "; need cutoff >= " +
            std::to_string(minimal_thermal_cutoff(nbar, tail_tol)),
        minimal_thermal_cutoff(nbar, tail_tol));
  }
  RealVector p(fock_cutoff);
  if (nbar == 0.0) {
    p.setZero();
    p[0] = 1.0;
    return p;
  }
  const double q = nbar / (nbar + 1.0);
  for (int m = 0; m < fock_cutoff; ++m) p[m] = std::pow(q, m);
  p /= p.sum();
  return p;
}

/// Thermal mechanical state tensored with an emitter pure state
/// (default |down><down|).
inline DensityMatrix thermal_state(const HilbertSpace& space, double nbar,
                                   EmitterLevel emitter = EmitterLevel::kDown,
                                   double tail_tol = 1e-6) {
  const RealVector p = thermal_fock_distribution(nbar, space.fock_cutoff(), tail_tol);
  DensityMatrix rho = DensityMatrix::Zero(space.total_dim(), space.total_dim());
  for (int m = 0; m < space.fock_cutoff(); ++m) {
    const int i = space.index(emitter, m);
    rho(i, i) = p[m];
  }
  return rho;
}

/// |level, fock><level, fock| on the composite space.
inline DensityMatrix basis_state(const HilbertSpace& space, EmitterLevel level,
                                 int fock) {
  DensityMatrix rho = DensityMatrix::Zero(space.total_dim(), space.total_dim());
  const int i = space.index(level, fock);
  rho(i, i) = 1.0;
  return rho;
}

inline double trace_error(const DensityMatrix& rho) {
  return std::abs(rho.trace() - Complex(1.0, 0.0));
}

inline double hermiticity_error(const DensityMatrix& rho) {
  return (rho - rho.adjoint().eval()).norm();
}

inline double min_eigenvalue(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(
      ((rho + rho.adjoint().eval()) * 0.5).eval(),
      Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Enforces the density-matrix invariants, throwing on violation.
inline void validate_density_matrix(
    const DensityMatrix& rho,
    const DensityCheckTolerances& tol = DensityCheckTolerances{}) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  const double te = trace_error(rho);
  if (te >= tol.trace) {
    throw SolverError("density matrix trace deviates from one by " +
                          std::to_string(te), te);
  }
  const double he = hermiticity_error(rho);
  if (he >= tol.hermiticity) {
    throw SolverError("density matrix non-Hermitian, ||rho-rho^dag|| = " +
                          std::to_string(he), he);
  }
  const double lam = min_eigenvalue(rho);
  if (lam <= -tol.negativity) {
    throw SolverError("density matrix indefinite, min eigenvalue " +
                          std::to_string(lam), -lam);
  }
}

/// Trace distance 0.5 * ||a - b||_1.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  DenseMatrix diff = a - b;
  diff = ((diff + diff.adjoint().eval()) * 0.5).eval();
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(diff, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_STATES_HPP
