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

#ifndef LAMBDAPHONON_MODEL_HPP
#define LAMBDAPHONON_MODEL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "lambdaphonon/errors.hpp"
#include "lambdaphonon/operators.hpp"
#include "lambdaphonon/states.hpp"
#include "lambdaphonon/superop.hpp"
#include "lambdaphonon/types.hpp"

namespace lambdaphonon {

// All rates and detunings are dimensionless, in units of the mechanical
// frequency Omega (the numeraire: Omega = 1 internally). device.hpp holds the
// single conversion layer from SI inputs.
struct SystemParams {
  double coupling = 0.0;          // G
  double mech_damping = 1.0 / 7000.0;  // Gamma = Omega / Q, default Q = 7000
  double emitter_decay = 5.02;    // gamma; default derived from tau_eg = 3.2 ns
                                  // and Omega inferred from nbar = 210 at 0.1 K
  double probe_detuning = 0.0;    // delta_p
  double control_detuning = 0.0;  // delta_c
  double probe_rabi = 0.0;        // E_p
  double control_rabi = 0.0;      // E_c
  double bath_occupation = 0.0;   // Nbar of the mechanical bath
  int fock_cutoff = 16;
  double ground_splitting = 100.0;  // Delta_0, spectrum labeling only
  double mech_frequency_si = 0.0;   // physical Omega in rad/s, 0 = unspecified

  void set_quality_factor(double q) {
    if (q <= 0.0) throw std::invalid_argument("quality factor must be > 0");
    mech_damping = 1.0 / q;
  }
  double quality_factor() const { return 1.0 / mech_damping; }

  HilbertSpace space() const { return HilbertSpace(fock_cutoff); }

  void validate() const {
    if (mech_damping < 0.0) throw std::invalid_argument("mech_damping must be >= 0");
    if (emitter_decay < 0.0) throw std::invalid_argument("emitter_decay must be >= 0");
    if (probe_rabi < 0.0) throw std::invalid_argument("probe_rabi must be >= 0");
    if (control_rabi < 0.0) throw std::invalid_argument("control_rabi must be >= 0");
    if (bath_occupation < 0.0) throw std::invalid_argument("bath_occupation must be >= 0");
    if (fock_cutoff < 2) {
      throw std::invalid_argument("fock_cutoff must be >= 2, got " +
                                  std::to_string(fock_cutoff));
    }
  }

  SystemParams with_probe_detuning(double dp) const {
    SystemParams p = *this;
    p.probe_detuning = dp;
    return p;
  }
  SystemParams with_fock_cutoff(int n) const {
    SystemParams p = *this;
    p.fock_cutoff = n;
    return p;
  }
};

struct DerivedRates {
  double settling_time_tau_m = 0.0;  // t_ss in mechanical periods
  double attenuation = 1.0;          // alpha of the analytic EIT series
};

/// Attenuation coefficient alpha = exp(-(G/Omega)^2 (2 Nbar + 1) / 2).
inline double attenuation_coefficient(const SystemParams& p) {
  const double beta2 = p.coupling * p.coupling;
  return std::exp(-0.5 * beta2 * (2.0 * p.bath_occupation + 1.0));
}

/// Rotating-frame Lambda-system Hamiltonian
///   H = -delta_p sigma_ee - (delta_p - delta_c) sigma_uu + b^dag b
///       + G sigma_ee (b + b^dag) + [E_p sigma_e,down + E_c sigma_e,up + h.c.]
/// in units of Omega.
inline SparseMatrix hamiltonian(const SystemParams& p) {
  p.validate();
  const HilbertSpace space = p.space();
  const BosonOps b = boson_ops(space);
  const SparseMatrix s_ee =
      emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kExcited);
  const SparseMatrix s_uu = emitter_op(space, EmitterLevel::kUp, EmitterLevel::kUp);
  const SparseMatrix s_ed =
      emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kDown);
  const SparseMatrix s_eu =
      emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kUp);

  SparseMatrix h = -p.probe_detuning * s_ee
      - (p.probe_detuning - p.control_detuning) * s_uu
      + b.number
      + p.coupling * (s_ee * (b.annihilation + b.creation));
  SparseMatrix drives = p.probe_rabi * s_ed + p.control_rabi * s_eu;
  h += drives + SparseMatrix(drives.adjoint());
  h.makeCompressed();
  return h;
}

/// Full Liouvillian acting on column-stacked density matrices:
///   L rho = -i [H, rho] + (gamma/2) D_{sigma_down,e} rho
///           + (Gamma/2) [ (Nbar+1) D_b rho + Nbar D_b^dag rho ].
inline SparseMatrix liouvillian(const SystemParams& p) {
  p.validate();
  const HilbertSpace space = p.space();
  const BosonOps b = boson_ops(space);
  const SparseMatrix s_de =
      emitter_op(space, EmitterLevel::kDown, EmitterLevel::kExcited);

  SparseMatrix lv = commutator_generator(hamiltonian(p));
  if (p.emitter_decay > 0.0) {
    lv += (0.5 * p.emitter_decay) * dissipator(s_de);
  }
  if (p.mech_damping > 0.0) {
    lv += (0.5 * p.mech_damping * (p.bath_occupation + 1.0)) *
          dissipator(b.annihilation);
    if (p.bath_occupation > 0.0) {
      lv += (0.5 * p.mech_damping * p.bath_occupation) * dissipator(b.creation);
    }
  }
  lv.makeCompressed();
  return lv;
}

namespace detail {

// exp(beta (b^dag - b)) on an N-state space via the eigendecomposition of the
// Hermitian i*(generator). Exactly unitary by construction.
inline DenseMatrix displacement_exp(int n, double beta) {
  const SparseMatrix b = fock_annihilation(n);
  DenseMatrix gen = DenseMatrix(SparseMatrix(b.adjoint()) - b) * beta;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es((imag_unit * gen).eval());
  DenseVector phases(n);
  for (int k = 0; k < n; ++k) {
    phases[k] = std::exp(-imag_unit * es.eigenvalues()[k]);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline int displacement_padding(int fock_cutoff, double beta) {
  const double b = std::abs(beta);
  return static_cast<int>(
      std::ceil(b * b + 6.0 * b * std::sqrt(double(fock_cutoff)) + 12.0));
}

}  // namespace detail

/// Matrix elements <m|D(beta)|k>, m, k < fock_cutoff, of the true (untruncated)
/// displacement operator D(beta) = exp(beta (b^dag - b)), obtained by
/// exponentiating on a padded space and cutting back. The block is sub-unitary:
/// columns whose displaced image leaks past the cutoff lose norm, which is the
/// signal the polaron truncation check looks for.
inline DenseMatrix displacement_operator(int fock_cutoff, double beta) {
  if (beta == 0.0) return DenseMatrix::Identity(fock_cutoff, fock_cutoff);
  const int padded = fock_cutoff + detail::displacement_padding(fock_cutoff, beta);
  const DenseMatrix full = detail::displacement_exp(padded, beta);
  return full.topLeftCorner(fock_cutoff, fock_cutoff);
}

/// Norm deficit 1 - ||D(beta)|k>||^2 of the displaced Fock state |k> within
/// the truncated space: the weight that leaks past the cutoff.
inline double displaced_state_leakage(int fock_cutoff, double beta, int k) {
  if (k < 0 || k >= fock_cutoff) throw std::invalid_argument("bad Fock index");
  const DenseMatrix d = displacement_operator(fock_cutoff, beta);
  return std::max(0.0, 1.0 - d.col(k).squaredNorm());
}

struct PolaronTransform {
  DenseMatrix unitary;       // U = exp((G/Omega) sigma_ee (b^dag - b))
  DenseMatrix transformed;   // H_tilde = U H U^dag
};

/// Fock columns whose displaced images the polaron transform must keep inside
/// the truncated space: everything up to the displaced-vacuum mean plus a few
/// standard deviations.
inline int polaron_checked_columns(int fock_cutoff, double beta) {
  const double b = std::abs(beta);
  const int k = static_cast<int>(std::ceil(b * b + 3.0 * b + 4.0));
  return std::min(fock_cutoff - 1, k);
}

/// Polaron transformation that absorbs the sigma_ee (b + b^dag) coupling.
/// The excited level acquires the shift -G^2/Omega and the drive terms are
/// dressed by displacement operators. The truncation check requires
/// ||U^dag U - 1|| < tol on the physically occupied columns (low-lying Fock
/// states and their displaced images); failure names an adequate cutoff.
inline PolaronTransform polaron_transform(const SystemParams& p,
                                          double unitarity_tol = 1e-6) {
  p.validate();
  const HilbertSpace space = p.space();
  const int n = space.fock_cutoff();
  const double beta = p.coupling;  // G / Omega with Omega = 1

  const DenseMatrix d = displacement_operator(n, beta);
  const int k_check = polaron_checked_columns(n, beta);
  const DenseMatrix gram = d.leftCols(k_check + 1).adjoint() * d.leftCols(k_check + 1);
  const double defect =
      (gram - DenseMatrix::Identity(k_check + 1, k_check + 1)).norm();
  if (defect >= unitarity_tol) {
    int required = n + 10;
    for (int trial = n + 10; trial <= 16 * n + 4096; trial += 10) {
      if (displaced_state_leakage(trial, beta,
                                  std::min(k_check, trial - 1)) <
          0.25 * unitarity_tol * unitarity_tol) {
        required = trial;
        break;
      }
    }
    throw TruncationError(
        "polaron unitary fails truncation check, ||U^dag U - 1|| = " +
            std::to_string(defect) + " on the first " +
            std::to_string(k_check + 1) + " columns; need fock_cutoff >= " +
            std::to_string(required),
        required);
  }

  PolaronTransform out;
  out.unitary = DenseMatrix::Zero(space.total_dim(), space.total_dim());
  out.unitary.block(0, 0, n, n).setIdentity();
  out.unitary.block(n, n, n, n).setIdentity();
  out.unitary.block(2 * n, 2 * n, n, n) = d;
  const DenseMatrix h = dense(hamiltonian(p));
  out.transformed = out.unitary * h * out.unitary.adjoint();
  return out;
}

/// Polaron-frame Hamiltonian assembled term by term (displacement-dressed
/// drives, shifted excited level); equals U H U^dag up to truncation.
inline DenseMatrix dressed_hamiltonian(const SystemParams& p) {
  p.validate();
  const HilbertSpace space = p.space();
  const int n = space.fock_cutoff();
  const double beta = p.coupling;
  const DenseMatrix d = displacement_operator(n, beta);
  const DenseMatrix bn = dense(fock_annihilation(n));
  const DenseMatrix num = (bn.adjoint() * bn).eval();

  DenseMatrix h = DenseMatrix::Zero(space.total_dim(), space.total_dim());
  const double shifted = -p.probe_detuning - p.coupling * p.coupling;
  h.block(0, 0, n, n) = num;
  h.block(n, n, n, n) =
      num + DenseMatrix::Identity(n, n) *
                (-(p.probe_detuning - p.control_detuning));
  h.block(2 * n, 2 * n, n, n) = num + DenseMatrix::Identity(n, n) * shifted;
  // E_p sigma_e,down D(beta) + E_c sigma_e,up D(beta) + h.c.
  h.block(2 * n, 0, n, n) = p.probe_rabi * d;
  h.block(0, 2 * n, n, n) = p.probe_rabi * d.adjoint();
  h.block(2 * n, n, n, n) = p.control_rabi * d;
  h.block(n, 2 * n, n, n) = p.control_rabi * d.adjoint();
  return h;
}

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_MODEL_HPP
