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

// Test-only helpers: random-state generators and independent brute-force
// oracles kept deliberately separate from the library construction paths.

#ifndef LAMBDAPHONON_TESTS_TESTUTIL_HPP
#define LAMBDAPHONON_TESTS_TESTUTIL_HPP

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "lambdaphonon/model.hpp"
#include "lambdaphonon/types.hpp"

namespace lambdaphonon::testutil {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline DenseMatrix random_matrix(int dim) {
  std::normal_distribution<double> dist(0.0, 1.0);
  DenseMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(dist(rng()), dist(rng()));
  }
  return m;
}

inline DenseMatrix random_hermitian(int dim) {
  DenseMatrix m = random_matrix(dim);
  return ((m + m.adjoint()) * 0.5).eval();
}

inline DenseMatrix random_density(int dim) {
  DenseMatrix m = random_matrix(dim);
  DenseMatrix rho = m * m.adjoint();
  rho /= rho.trace().real();
  return rho;
}

// Composite index with the emitter-major convention, written out locally so
// the oracles do not lean on HilbertSpace.
inline int comp_index(int level, int fock, int n_fock) { return level * n_fock + fock; }

// Element-by-element rotating-frame Hamiltonian straight from the basis-state
// matrix elements.
inline DenseMatrix oracle_hamiltonian(const SystemParams& p) {
  const int n = p.fock_cutoff;
  const int dim = 3 * n;
  DenseMatrix h = DenseMatrix::Zero(dim, dim);
  for (int m = 0; m < n; ++m) {
    h(comp_index(2, m, n), comp_index(2, m, n)) += -p.probe_detuning;
    h(comp_index(1, m, n), comp_index(1, m, n)) +=
        -(p.probe_detuning - p.control_detuning);
    for (int level = 0; level < 3; ++level) {
      h(comp_index(level, m, n), comp_index(level, m, n)) += double(m);
    }
    if (m + 1 < n) {
      const double amp = p.coupling * std::sqrt(double(m + 1));
      h(comp_index(2, m, n), comp_index(2, m + 1, n)) += amp;
      h(comp_index(2, m + 1, n), comp_index(2, m, n)) += amp;
    }
    h(comp_index(2, m, n), comp_index(0, m, n)) += p.probe_rabi;
    h(comp_index(0, m, n), comp_index(2, m, n)) += p.probe_rabi;
    h(comp_index(2, m, n), comp_index(1, m, n)) += p.control_rabi;
    h(comp_index(1, m, n), comp_index(2, m, n)) += p.control_rabi;
  }
  return h;
}

inline DenseMatrix oracle_dissipator_apply(const DenseMatrix& o,
                                           const DenseMatrix& rho) {
  const DenseMatrix odag = o.adjoint();
  return 2.0 * o * rho * odag - odag * o * rho - rho * odag * o;
}

// Loop-assembled jump operators for the oracle right-hand side.
inline DenseMatrix oracle_sigma_down_e(int n) {
  DenseMatrix s = DenseMatrix::Zero(3 * n, 3 * n);
  for (int m = 0; m < n; ++m) s(comp_index(0, m, n), comp_index(2, m, n)) = 1.0;
  return s;
}

inline DenseMatrix oracle_annihilation(int n) {
  DenseMatrix b = DenseMatrix::Zero(3 * n, 3 * n);
  for (int level = 0; level < 3; ++level) {
    for (int m = 1; m < n; ++m) {
      b(comp_index(level, m - 1, n), comp_index(level, m, n)) = std::sqrt(double(m));
    }
  }
  return b;
}

// Right-hand side of the master equation evaluated with dense operator
// algebra, independent of the vectorized superoperator assembly.
inline DenseMatrix oracle_lindblad_rhs(const SystemParams& p,
                                       const DenseMatrix& rho) {
  const int n = p.fock_cutoff;
  const DenseMatrix h = oracle_hamiltonian(p);
  const DenseMatrix sigma_de = oracle_sigma_down_e(n);
  const DenseMatrix b = oracle_annihilation(n);
  DenseMatrix rhs = -imag_unit * (h * rho - rho * h);
  rhs += (0.5 * p.emitter_decay) * oracle_dissipator_apply(sigma_de, rho);
  rhs += (0.5 * p.mech_damping * (p.bath_occupation + 1.0)) *
         oracle_dissipator_apply(b, rho);
  rhs += (0.5 * p.mech_damping * p.bath_occupation) *
         oracle_dissipator_apply(DenseMatrix(b.adjoint()), rho);
  return rhs;
}

// Dense matrix-exponential propagation of a vectorized state.
inline DenseVector expm_propagate(const SparseMatrix& lv, const DenseVector& v0,
                                  double t) {
  const DenseMatrix expl = (DenseMatrix(lv) * t).exp();
  return expl * v0;
}

}  // namespace lambdaphonon::testutil

#endif  // LAMBDAPHONON_TESTS_TESTUTIL_HPP
