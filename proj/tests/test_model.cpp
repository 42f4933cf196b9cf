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

#include <algorithm>

#include "lambdaphonon/model.hpp"
#include "lambdaphonon/solvers.hpp"
#include "testutil.hpp"

using namespace lambdaphonon;
namespace tu = lambdaphonon::testutil;

namespace {

SystemParams base_params(int cutoff) {
  SystemParams p;
  p.fock_cutoff = cutoff;
  return p;
}

}  // namespace

TEST_CASE("free Hamiltonian is the mechanical ladder, three-fold degenerate") {
  SystemParams p = base_params(6);
  p.coupling = 0.0;
  p.probe_rabi = 0.0;
  p.control_rabi = 0.0;
  const DenseMatrix h = dense(hamiltonian(p));
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h, Eigen::EigenvaluesOnly);
  RealVector evs = es.eigenvalues();
  std::sort(evs.data(), evs.data() + evs.size());
  for (int m = 0; m < 6; ++m) {
    for (int d = 0; d < 3; ++d) {
      CHECK(evs[3 * m + d] == doctest::Approx(double(m)).epsilon(1e-12));
    }
  }
}

TEST_CASE("probe drive matrix element <e,0|H|down,0> = E_p") {
  SystemParams p = base_params(4);
  p.probe_rabi = 0.37;
  p.control_rabi = 1.1;
  const HilbertSpace space = p.space();
  const DenseMatrix h = dense(hamiltonian(p));
  CHECK(h(space.index(EmitterLevel::kExcited, 0),
          space.index(EmitterLevel::kDown, 0))
            .real() == doctest::Approx(0.37));
}

TEST_CASE("Hamiltonian matches the element-by-element oracle") {
  SystemParams p = base_params(4);
  p.coupling = 0.8;
  p.probe_detuning = -1.3;
  p.control_detuning = 2.1;
  p.probe_rabi = 0.4;
  p.control_rabi = 3.7;
  const DenseMatrix h = dense(hamiltonian(p));
  const DenseMatrix oracle = tu::oracle_hamiltonian(p);
  CHECK((h - oracle).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Hamiltonian is Hermitian for random parameters") {
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int trial = 0; trial < 25; ++trial) {
    SystemParams p = base_params(3 + int(tu::rng()() % 8));
    p.coupling = u(tu::rng());
    p.probe_detuning = u(tu::rng()) - 2.5;
    p.control_detuning = u(tu::rng()) - 2.5;
    p.probe_rabi = u(tu::rng());
    p.control_rabi = u(tu::rng());
    CHECK(hermiticity_defect(hamiltonian(p)) < 1e-12);
  }
}

TEST_CASE("parameter validation") {
  SystemParams p = base_params(1);
  CHECK_THROWS_AS(hamiltonian(p), std::invalid_argument);
  p = base_params(8);
  p.bath_occupation = -1.0;
  CHECK_THROWS_AS(liouvillian(p), std::invalid_argument);
  p = base_params(8);
  p.set_quality_factor(7000.0);
  CHECK(p.mech_damping * p.quality_factor() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Liouvillian annihilates the uncoupled thermal state") {
  SystemParams p = base_params(40);
  p.coupling = 0.0;
  p.probe_rabi = 0.0;
  p.control_rabi = 0.0;
  p.bath_occupation = 2.0;
  const SparseMatrix lv = liouvillian(p);
  const DensityMatrix rho = thermal_state(p.space(), p.bath_occupation);
  CHECK((lv * vec(rho)).norm() < 1e-9);
}

TEST_CASE("excited population decays at rate gamma") {
  SystemParams p = base_params(3);
  p.coupling = 0.0;
  p.probe_rabi = 0.0;
  p.control_rabi = 0.0;
  p.emitter_decay = 0.8;
  p.mech_damping = 0.0;
  const SparseMatrix lv = liouvillian(p);
  const DensityMatrix rho0 = basis_state(p.space(), EmitterLevel::kExcited, 0);
  const SparseMatrix s_ee =
      emitter_op(p.space(), EmitterLevel::kExcited, EmitterLevel::kExcited);
  const std::vector<double> times = {0.0, 0.1, 0.25, 0.5};
  const Trajectory traj = evolve(lv, rho0, times, EvolveOptions{}, {{"p_e", s_ee}});
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double expected = std::exp(-p.emitter_decay * times[i] * two_pi);
    CHECK(std::abs(traj.observables.at("p_e")[i].real() - expected) < 1e-6);
  }
}

TEST_CASE("Liouvillian matches the loop-based oracle on random states") {
  SystemParams p = base_params(4);
  p.coupling = 1.2;
  p.probe_detuning = 0.7;
  p.control_detuning = -0.4;
  p.probe_rabi = 0.3;
  p.control_rabi = 2.0;
  p.emitter_decay = 4.0;
  p.mech_damping = 0.01;
  p.bath_occupation = 1.5;
  const SparseMatrix lv = liouvillian(p);
  for (int trial = 0; trial < 50; ++trial) {
    const DenseMatrix rho = tu::random_density(p.space().total_dim());
    const DenseMatrix via_superop =
        devec(DenseVector(lv * vec(rho)), p.space().total_dim());
    const DenseMatrix via_loops = tu::oracle_lindblad_rhs(p, rho);
    CHECK((via_superop - via_loops).norm() < 1e-12 * std::max(1.0, via_loops.norm()));
  }
}

TEST_CASE("Liouvillian preserves the trace on random Hermitian matrices") {
  SystemParams p = base_params(5);
  p.coupling = 0.9;
  p.probe_rabi = 0.5;
  p.control_rabi = 1.5;
  p.bath_occupation = 3.0;
  const SparseMatrix lv = liouvillian(p);
  for (int trial = 0; trial < 100; ++trial) {
    const DenseMatrix rho = tu::random_hermitian(p.space().total_dim());
    CHECK(std::abs(trace_of_vec(DenseVector(lv * vec(rho)), p.space().total_dim())) <
          1e-9 * std::max(1.0, rho.norm()));
  }
}

TEST_CASE("Liouvillian spectrum lies in the closed left half plane") {
  SystemParams p = base_params(4);
  p.coupling = 0.6;
  p.probe_detuning = 0.5;
  p.probe_rabi = 0.2;
  p.control_rabi = 1.0;
  p.bath_occupation = 0.7;
  const SparseMatrix lv = liouvillian(p);
  Eigen::ComplexEigenSolver<DenseMatrix> es(DenseMatrix(lv), false);
  CHECK(es.eigenvalues().real().maxCoeff() < 1e-10);
}

TEST_CASE("polaron transform") {
  SUBCASE("G = 0 gives the identity") {
    SystemParams p = base_params(8);
    p.coupling = 0.0;
    const PolaronTransform pt = polaron_transform(p);
    CHECK((pt.unitary - DenseMatrix::Identity(24, 24)).norm() < 1e-12);
  }

  SUBCASE("excited level acquires the shift -G^2/Omega") {
    SystemParams p = base_params(40);
    p.coupling = 0.5;
    p.probe_detuning = 0.3;
    const PolaronTransform pt = polaron_transform(p);
    const HilbertSpace space = p.space();
    const int e0 = space.index(EmitterLevel::kExcited, 0);
    CHECK(pt.transformed(e0, e0).real() ==
          doctest::Approx(-p.probe_detuning - p.coupling * p.coupling)
              .epsilon(1e-8));
  }

  SUBCASE("matrix-exponential route equals the analytically dressed Hamiltonian") {
    SystemParams p = base_params(40);
    p.coupling = 0.5;
    p.probe_detuning = 0.2;
    p.control_detuning = -0.1;
    p.probe_rabi = 0.1;
    p.control_rabi = 1.0;
    const PolaronTransform pt = polaron_transform(p);

    // independent route: exponentiate the full-space generator directly
    const HilbertSpace space = p.space();
    const auto b = boson_ops(space);
    const SparseMatrix s_ee =
        emitter_op(space, EmitterLevel::kExcited, EmitterLevel::kExcited);
    const DenseMatrix gen =
        dense(SparseMatrix(p.coupling * (s_ee * (b.creation - b.annihilation))));
    const DenseMatrix u_expm = gen.exp();
    // identical away from the truncation edge
    CHECK((pt.unitary.topLeftCorner(100, 100) - u_expm.topLeftCorner(100, 100))
              .cwiseAbs()
              .maxCoeff() < 1e-10);

    const DenseMatrix h = dense(hamiltonian(p));
    const DenseMatrix via_expm = u_expm * h * u_expm.adjoint();

    // Compare away from the truncation edge: both routes are contaminated in
    // the last ~beta-spread Fock rows, where the displaced ladder leaks out.
    const int n = p.fock_cutoff;
    const int bulk = n - 14;
    const DenseMatrix dressed = dressed_hamiltonian(p);
    auto bulk_error = [&](const DenseMatrix& a, const DenseMatrix& b_) {
      double worst = 0.0;
      for (int ra = 0; ra < 3; ++ra)
        for (int ca = 0; ca < 3; ++ca)
          worst = std::max(worst, (a.block(ra * n, ca * n, bulk, bulk) -
                                   b_.block(ra * n, ca * n, bulk, bulk))
                                      .cwiseAbs()
                                      .maxCoeff());
      return worst;
    };
    CHECK(bulk_error(via_expm, dressed) < 1e-6);
    CHECK(bulk_error(pt.transformed, dressed) < 1e-6);
  }

  SUBCASE("unitarity truncation check names a cutoff") {
    SystemParams p = base_params(6);
    p.coupling = 5.0;
    try {
      polaron_transform(p);
      FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
      CHECK(e.required_cutoff() > 20);
    }
  }
}

TEST_CASE("attenuation coefficient closed form") {
  SystemParams p = base_params(8);
  p.coupling = 0.5;
  p.bath_occupation = 210.0;
  CHECK(attenuation_coefficient(p) ==
        doctest::Approx(std::exp(-0.5 * 0.25 * 421.0)).epsilon(1e-12));
  p.coupling = 0.0;
  CHECK(attenuation_coefficient(p) == doctest::Approx(1.0));
}
