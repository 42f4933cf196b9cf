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

#ifndef LAMBDAPHONON_TYPES_HPP
#define LAMBDAPHONON_TYPES_HPP

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace lambdaphonon {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Sparse storage is the default for operators and superoperators; the
// column-major layout matches the column-stacking vectorization used in
// superop.hpp. Row-major copies are made where parallel mat-vecs pay off.
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using RowSparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<Complex>;

inline constexpr Complex imag_unit{0.0, 1.0};
inline constexpr double two_pi = 6.283185307179586476925286766559;

// SI constants (2018 CODATA exact values where defined).
namespace si {
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double boltzmann = 1.380649e-23;     // J / K
inline constexpr double speed_of_light = 2.99792458e8; // m / s
inline constexpr double electron_volt = 1.602176634e-19; // J
}  // namespace si

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_TYPES_HPP
