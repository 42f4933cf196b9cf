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

#ifndef LAMBDAPHONON_SUPEROP_HPP
#define LAMBDAPHONON_SUPEROP_HPP

#include <stdexcept>

#include "lambdaphonon/operators.hpp"
#include "lambdaphonon/types.hpp"

namespace lambdaphonon {

// Vectorization convention: column stacking. vec(rho) concatenates the
// columns of rho, so vec(rho)[c*d + r] = rho(r, c) and
//   vec(A rho B) = (B^T (x) A) vec(rho).
// Everything in this header and in the Liouvillian assembly relies on this
// one identity.

inline DenseVector vec(const DenseMatrix& m) {
  return Eigen::Map<const DenseVector>(m.data(), m.size());
}

inline DenseMatrix devec(const DenseVector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw std::invalid_argument("devec: vector length is not dim^2");
  }
  return Eigen::Map<const DenseMatrix>(v.data(), dim, dim);
}

/// Superoperator of left multiplication: lift_left(A) vec(rho) = vec(A rho).
inline SparseMatrix lift_left(const SparseMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("lift_left: square operator required");
  return kron(sparse_identity(int(a.rows())), a);
}

/// Superoperator of right multiplication: lift_right(B) vec(rho) = vec(rho B).
inline SparseMatrix lift_right(const SparseMatrix& b) {
  if (b.rows() != b.cols()) throw std::invalid_argument("lift_right: square operator required");
  return kron(SparseMatrix(b.transpose()), sparse_identity(int(b.rows())));
}

/// Lifted commutator generator -i [H, .].
inline SparseMatrix commutator_generator(const SparseMatrix& h) {
  SparseMatrix out = lift_left(h) - lift_right(h);
  out *= -imag_unit;
  out.makeCompressed();
  return out;
}

/// Lifted dissipator D_o rho = 2 o rho o^dag - o^dag o rho - rho o^dag o.
/// Note the factor 2 on the sandwich term; rate prefactors (gamma/2, ...) are
/// applied by the caller.
inline SparseMatrix dissipator(const SparseMatrix& o) {
  if (o.rows() != o.cols()) throw std::invalid_argument("dissipator: square operator required");
  const SparseMatrix odag_o = SparseMatrix(o.adjoint()) * o;
  SparseMatrix out = 2.0 * kron(SparseMatrix(o.conjugate()), o)
      - lift_left(odag_o) - lift_right(odag_o);
  out.makeCompressed();
  return out;
}

/// Trace functional as a sparse row vector acting on vectorized matrices:
/// trace_row(d) * vec(rho) = tr(rho).
inline Eigen::SparseVector<Complex> trace_vector(int dim) {
  Eigen::SparseVector<Complex> t(static_cast<Eigen::Index>(dim) * dim);
  for (int j = 0; j < dim; ++j) t.insert(static_cast<Eigen::Index>(j) * dim + j) = 1.0;
  return t;
}

inline Complex trace_of_vec(const DenseVector& v, int dim) {
  Complex tr = 0.0;
  for (int j = 0; j < dim; ++j) tr += v[static_cast<Eigen::Index>(j) * dim + j];
  return tr;
}

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_SUPEROP_HPP
