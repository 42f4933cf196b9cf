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

#ifndef LAMBDAPHONON_OPERATORS_HPP
#define LAMBDAPHONON_OPERATORS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "lambdaphonon/hilbert.hpp"
#include "lambdaphonon/types.hpp"

namespace lambdaphonon {

inline SparseMatrix sparse_identity(int dim) {
  SparseMatrix id(dim, dim);
  id.setIdentity();
  return id;
}

/// Kronecker product of two sparse operators, A (x) B.
inline SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out = Eigen::kroneckerProduct(a, b);
  out.makeCompressed();
  return out;
}

/// Emitter flip operator |i><j| lifted to the composite space,
/// sigma_ij (x) 1_Fock.
inline SparseMatrix emitter_op(const HilbertSpace& space, EmitterLevel i,
                               EmitterLevel j) {
  const int n = space.fock_cutoff();
  std::vector<Triplet> entries;
  entries.reserve(n);
  const int row0 = static_cast<int>(i) * n;
  const int col0 = static_cast<int>(j) * n;
  for (int m = 0; m < n; ++m) {
    entries.emplace_back(row0 + m, col0 + m, Complex(1.0, 0.0));
  }
  SparseMatrix op(space.total_dim(), space.total_dim());
  op.setFromTriplets(entries.begin(), entries.end());
  return op;
}

/// Truncated annihilation operator on the bare Fock space (no emitter factor),
/// <m-1|b|m> = sqrt(m).
inline SparseMatrix fock_annihilation(int fock_cutoff) {
  if (fock_cutoff < 2) {
    throw std::invalid_argument("fock cutoff must be >= 2 for ladder operators");
  }
  std::vector<Triplet> entries;
  entries.reserve(fock_cutoff - 1);
  for (int m = 1; m < fock_cutoff; ++m) {
    entries.emplace_back(m - 1, m, Complex(std::sqrt(double(m)), 0.0));
  }
  SparseMatrix b(fock_cutoff, fock_cutoff);
  b.setFromTriplets(entries.begin(), entries.end());
  return b;
}

struct BosonOps {
  SparseMatrix annihilation;  // 1_3 (x) b
  SparseMatrix creation;      // 1_3 (x) b^dag
  SparseMatrix number;        // 1_3 (x) b^dag b
};

/// Ladder and number operators of the mechanical mode lifted to the composite
/// space. Requires fock_cutoff >= 2.
inline BosonOps boson_ops(const HilbertSpace& space) {
  const SparseMatrix b = fock_annihilation(space.fock_cutoff());
  const SparseMatrix id3 = sparse_identity(HilbertSpace::kEmitterDim);
  BosonOps ops;
  ops.annihilation = kron(id3, b);
  ops.creation = SparseMatrix(ops.annihilation.adjoint());
  ops.number = ops.creation * ops.annihilation;
  ops.number.prune([](int, int, const Complex& v) { return v != Complex(0); });
  return ops;
}

inline DenseMatrix dense(const SparseMatrix& a) { return DenseMatrix(a); }

/// Relative non-Hermiticity ||A - A^dag|| / ||A|| (Frobenius).
inline double hermiticity_defect(const SparseMatrix& a) {
  const double norm = a.norm();
  if (norm == 0.0) return 0.0;
  SparseMatrix diff = a - SparseMatrix(a.adjoint());
  return diff.norm() / norm;
}

inline bool is_hermitian(const SparseMatrix& a, double tol = 1e-12) {
  return hermiticity_defect(a) < tol;
}

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_OPERATORS_HPP
