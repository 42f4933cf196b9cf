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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambdaphonon/hilbert.hpp"
#include "lambdaphonon/operators.hpp"
#include "lambdaphonon/states.hpp"
#include "lambdaphonon/superop.hpp"
#include "testutil.hpp"

using namespace lambdaphonon;
namespace tu = lambdaphonon::testutil;

TEST_CASE("composite index mapping is bijective and emitter-major") {
  const HilbertSpace space(5);
  CHECK(space.total_dim() == 15);
  std::vector<bool> seen(space.total_dim(), false);
  for (EmitterLevel s : {EmitterLevel::kDown, EmitterLevel::kUp, EmitterLevel::kExcited}) {
    for (int m = 0; m < space.fock_cutoff(); ++m) {
      const int idx = space.index(s, m);
      REQUIRE(idx >= 0);
      REQUIRE(idx < space.total_dim());
      CHECK_FALSE(seen[idx]);
      seen[idx] = true;
      CHECK(space.level_of(idx) == s);
      CHECK(space.fock_of(idx) == m);
    }
  }
  // emitter index major, Fock index minor
  CHECK(space.index(EmitterLevel::kDown, 0) == 0);
  CHECK(space.index(EmitterLevel::kDown, 4) == 4);
  CHECK(space.index(EmitterLevel::kUp, 0) == 5);
  CHECK(space.index(EmitterLevel::kExcited, 2) == 12);
  CHECK_THROWS_AS(HilbertSpace(0), std::invalid_argument);
  CHECK_THROWS_AS(space.index(EmitterLevel::kDown, 5), std::invalid_argument);
}

TEST_CASE("emitter operators act as projectors and flips") {
  const HilbertSpace space(8);
  const auto s_ee = emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kExcited);
  const auto s_de = emitter_op(space, EmitterLevel::kDown, EmitterLevel::kExcited);
  const auto s_ed = emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kDown);
  const auto s_dd = emitter_op(space, EmitterLevel::kDown, EmitterLevel::kDown);

  // sigma_ee |e,0> = |e,0>
  DenseVector e0 = DenseVector::Zero(space.total_dim());
  e0[space.index(EmitterLevel::kExcited, 0)] = 1.0;
  CHECK((DenseVector(s_ee * e0) - e0).norm() == doctest::Approx(0.0));

  // sigma_de sigma_ed = sigma_dd
  CHECK((SparseMatrix(s_de * s_ed) - s_dd).norm() == doctest::Approx(0.0));

  // tr(sigma_ee (x) 1) = N_max at N_max = 8
  CHECK(dense(s_ee).trace().real() == doctest::Approx(8.0));
}

TEST_CASE("flip operator adjoints: sigma_ij^dag = sigma_ji") {
  const HilbertSpace space(4);
  const EmitterLevel levels[] = {EmitterLevel::kDown, EmitterLevel::kUp,
                                 EmitterLevel::kExcited};
  for (EmitterLevel i : levels) {
    for (EmitterLevel j : levels) {
      const auto sij = emitter_op(space, i, j);
      const auto sji = emitter_op(space, j, i);
      CHECK((SparseMatrix(sij.adjoint()) - sji).norm() == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("operator product identity sigma_ij sigma_kl = delta_jk sigma_il") {
  const HilbertSpace space(3);
  const EmitterLevel levels[] = {EmitterLevel::kDown, EmitterLevel::kUp,
                                 EmitterLevel::kExcited};
  for (EmitterLevel i : levels)
    for (EmitterLevel j : levels)
      for (EmitterLevel k : levels)
        for (EmitterLevel l : levels) {
          const SparseMatrix lhs =
              emitter_op(space, i, j) * emitter_op(space, k, l);
          SparseMatrix rhs(space.total_dim(), space.total_dim());
          if (j == k) rhs = emitter_op(space, i, l);
          CHECK((lhs - rhs).norm() == doctest::Approx(0.0).epsilon(1e-14));
        }
}

TEST_CASE("boson ladder operators on the truncated space") {
  const HilbertSpace space(8);
  const auto ops = boson_ops(space);

  SUBCASE("b|1> = |0>") {
    DenseVector one = DenseVector::Zero(space.total_dim());
    one[space.index(EmitterLevel::kDown, 1)] = 1.0;
    DenseVector zero = DenseVector::Zero(space.total_dim());
    zero[space.index(EmitterLevel::kDown, 0)] = 1.0;
    CHECK((DenseVector(ops.annihilation * one) - zero).norm() ==
          doctest::Approx(0.0));
  }

  SUBCASE("n|3> = 3|3>") {
    DenseVector three = DenseVector::Zero(space.total_dim());
    three[space.index(EmitterLevel::kUp, 3)] = 1.0;
    CHECK((DenseVector(ops.number * three) - 3.0 * three).norm() ==
          doctest::Approx(0.0));
  }

  SUBCASE("[b, b^dag] = 1 below the truncation edge") {
    const DenseMatrix comm = dense(SparseMatrix(
        ops.annihilation * ops.creation - ops.creation * ops.annihilation));
    for (int m = 0; m + 1 < space.fock_cutoff(); ++m) {
      CHECK(comm(space.index(EmitterLevel::kDown, m),
                 space.index(EmitterLevel::kDown, m))
                .real() == doctest::Approx(1.0));
    }
    // the last diagonal entry is the truncation artifact
    CHECK(comm(space.index(EmitterLevel::kDown, 7),
               space.index(EmitterLevel::kDown, 7))
              .real() == doctest::Approx(1.0 - 8.0));
  }

  SUBCASE("number operator is Hermitian to constructor tolerance") {
    CHECK(hermiticity_defect(ops.number) < 1e-12);
  }

  CHECK_THROWS_AS(fock_annihilation(1), std::invalid_argument);
}

TEST_CASE("thermal states") {
  SUBCASE("nbar = 0 is the tensor ground state") {
    const HilbertSpace space(6);
    const DensityMatrix rho = thermal_state(space, 0.0);
    CHECK(trace_distance(rho, basis_state(space, EmitterLevel::kDown, 0)) ==
          doctest::Approx(0.0));
  }

  SUBCASE("nbar = 1 gives the geometric weights 1/2, 1/4") {
    const RealVector p = thermal_fock_distribution(1.0, 60);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(p[1] == doctest::Approx(0.25).epsilon(1e-9));
  }

  SUBCASE("mean occupation matches the geometric series at nbar = 0.12") {
    // independent oracle: direct sum of the geometric series
    const double nbar = 0.12;
    const int n = 30;
    const double q = nbar / (nbar + 1.0);
    double norm = 0.0, mean = 0.0;
    for (int m = 0; m < n; ++m) {
      norm += std::pow(q, m);
      mean += m * std::pow(q, m);
    }
    const double expected = mean / norm;  // 0.12 up to truncation
    CHECK(std::abs(expected - 0.12) < 1e-4);

    const RealVector p = thermal_fock_distribution(nbar, n);
    double got = 0.0;
    for (int m = 0; m < n; ++m) got += m * p[m];
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(got - 0.12) < 1e-4);
  }

  SUBCASE("excessive tail names the minimal adequate cutoff") {
    try {
      thermal_fock_distribution(210.0, 20);
      FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
      CHECK(e.required_cutoff() >= 2000);
      CHECK(thermal_tail_weight(210.0, e.required_cutoff()) < 1e-6);
      CHECK(thermal_tail_weight(210.0, e.required_cutoff() - 2) >= 1e-6);
    }
  }

  SUBCASE("argument checks") {
    CHECK_THROWS_AS(thermal_fock_distribution(-0.5, 10), std::invalid_argument);
  }
}

TEST_CASE("vec/devec round-trip on random matrices") {
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + int(tu::rng()() % 13);
    const DenseMatrix m = tu::random_matrix(dim);
    CHECK((devec(vec(m), dim) - m).norm() < 1e-14 * m.norm());
  }
  // column stacking: vec(rho)[c*d + r] = rho(r, c)
  DenseMatrix m(2, 2);
  m << Complex(1, 0), Complex(3, 0), Complex(2, 0), Complex(4, 0);
  const DenseVector v = vec(m);
  CHECK(v[0].real() == doctest::Approx(1));
  CHECK(v[1].real() == doctest::Approx(2));
  CHECK(v[2].real() == doctest::Approx(3));
  CHECK(v[3].real() == doctest::Approx(4));
}

TEST_CASE("lift_left / lift_right implement two-sided multiplication") {
  SUBCASE("lift_left(1) is the identity superoperator") {
    const SparseMatrix id = sparse_identity(6);
    const SparseMatrix lifted = lift_left(id);
    CHECK((lifted - sparse_identity(36)).norm() == doctest::Approx(0.0));
  }

  SUBCASE("lift_left(A) lift_right(B) vec(rho) = vec(A rho B)") {
    for (int trial = 0; trial < 10; ++trial) {
      const int dim = 2 + int(tu::rng()() % 6);
      const DenseMatrix a = tu::random_matrix(dim);
      const DenseMatrix b = tu::random_matrix(dim);
      const DenseMatrix rho = tu::random_matrix(dim);
      const DenseVector lhs =
          lift_left(a.sparseView()) * (lift_right(b.sparseView()) * vec(rho));
      const DenseVector rhs = vec((a * rho * b).eval());
      CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST_CASE("dissipator algebra") {
  SUBCASE("single-phonon decay: D_b |1><1| = 2|0><0| - 2|1><1|") {
    const SparseMatrix b = fock_annihilation(4);
    const SparseMatrix d = dissipator(b);
    DenseMatrix rho = DenseMatrix::Zero(4, 4);
    rho(1, 1) = 1.0;
    const DenseMatrix out = devec(DenseVector(d * vec(rho)), 4);
    DenseMatrix expected = DenseMatrix::Zero(4, 4);
    expected(0, 0) = 2.0;
    expected(1, 1) = -2.0;
    CHECK((out - expected).norm() == doctest::Approx(0.0).epsilon(1e-14));
  }

  SUBCASE("matches the loop-based oracle on random states") {
    const HilbertSpace space(4);
    const auto ops = boson_ops(space);
    const SparseMatrix d = dissipator(ops.annihilation);
    const DenseMatrix b_dense = dense(ops.annihilation);
    for (int trial = 0; trial < 50; ++trial) {
      const DenseMatrix rho = tu::random_density(space.total_dim());
      const DenseMatrix via_superop = devec(DenseVector(d * vec(rho)), space.total_dim());
      const DenseMatrix via_loops = tu::oracle_dissipator_apply(b_dense, rho);
      CHECK((via_superop - via_loops).norm() < 1e-12);
    }
  }

  SUBCASE("dissipators preserve the trace") {
    const HilbertSpace space(5);
    const auto ops = boson_ops(space);
    const SparseMatrix d = dissipator(ops.creation);
    for (int trial = 0; trial < 20; ++trial) {
      const DenseMatrix rho = tu::random_hermitian(space.total_dim());
      const DenseVector out = d * vec(rho);
      CHECK(std::abs(trace_of_vec(out, space.total_dim())) < 1e-9);
    }
  }
}

TEST_CASE("density matrix validation") {
  const HilbertSpace space(30);
  DensityMatrix rho = thermal_state(space, 0.5);
  CHECK_NOTHROW(validate_density_matrix(rho));
  rho(0, 0) += 1e-6;
  CHECK_THROWS_AS(validate_density_matrix(rho), SolverError);
  rho = thermal_state(space, 0.5);
  rho(0, 3) = 1e-3;  // not Hermitian
  CHECK_THROWS_AS(validate_density_matrix(rho), SolverError);
}
