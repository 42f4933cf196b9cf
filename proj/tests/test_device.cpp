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

#include "lambdaphonon/device.hpp"

using namespace lambdaphonon;

TEST_CASE("vacuum substrate gives zero shift") {
  DeviceParams p;
  p.permittivity = 1.0;
  CHECK(frequency_shift(p) == doctest::Approx(0.0));
}

TEST_CASE("shift follows the z^-3 law") {
  DeviceParams p;
  const double s1 = frequency_shift(p);
  DeviceParams p2 = p;
  p2.emitter_distance *= 2.0;
  CHECK(frequency_shift(p2) == doctest::Approx(s1 / 8.0).epsilon(1e-12));
}

TEST_CASE("shift magnitude at the working geometry") {
  // z = 10 nm, hbar omega = 1.95 eV, tau = 3.2 ns, eps = 2.1; the plug-in
  // below recomputes the closed form step by step as an independent check.
  DeviceParams p;
  const double omega_eg = 1.95 * si::electron_volt / si::hbar;
  const double c3 = si::speed_of_light * si::speed_of_light * si::speed_of_light;
  const double image = (2.1 * 2.1 - 1.0) / ((2.1 + 1.0) * (2.1 + 1.0));
  const double expected = 0.09375 * c3 /
                          (3.2e-9 * omega_eg * omega_eg * omega_eg * 1e-24) *
                          image;
  CHECK(frequency_shift(p) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(frequency_shift(p) == doctest::Approx(1.077e10).epsilon(2e-3));
  CHECK(p.near_field_ok());
}

TEST_CASE("pull is the analytic derivative: pull * z / shift = -3") {
  DeviceParams p;
  p.emitter_distance = 17e-9;
  p.transition_energy_ev = 1.7;
  CHECK(frequency_pull(p) * p.emitter_distance / frequency_shift(p) ==
        doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("shift and pull have opposite signs for |eps| > 1") {
  DeviceParams p;
  CHECK(frequency_shift(p) > 0.0);
  CHECK(frequency_pull(p) < 0.0);
}

TEST_CASE("singular permittivity is rejected") {
  DeviceParams p;
  p.permittivity = -1.0;
  CHECK_THROWS_AS(frequency_shift(p), std::invalid_argument);
}

TEST_CASE("string mode frequency") {
  DeviceParams p;

  SUBCASE("quadrupling strain doubles the frequency") {
    const double f1 = mode_frequency(p);
    p.strain *= 4.0;
    CHECK(mode_frequency(p) == doctest::Approx(2.0 * f1).epsilon(1e-12));
  }

  SUBCASE("strain 1.05e-6 puts the default ribbon at 10 MHz") {
    CHECK(mode_frequency(p) / two_pi == doctest::Approx(10e6).epsilon(1e-3));
  }

  SUBCASE("zero strain is out of the tensioned regime") {
    p.strain = 0.0;
    CHECK_THROWS_AS(mode_frequency(p), std::invalid_argument);
  }
}

TEST_CASE("coupling rate at the working point") {
  DeviceParams p;  // defaults = the 10 MHz working geometry
  const CouplingResult r = coupling_rate(p);
  CHECK(r.zero_point_amplitude > 0.0);
  CHECK(r.zero_point_amplitude == doctest::Approx(1.486e-11).epsilon(2e-3));
  CHECK(std::abs(r.coupling_rate) == doctest::Approx(4.80e7).epsilon(5e-3));
  // |G| tau_eg = 0.15 at this point: below the strong-coupling threshold
  CHECK(std::abs(r.coupling_rate) * p.excited_lifetime ==
        doctest::Approx(0.1537).epsilon(5e-3));
  CHECK_FALSE(r.strong_coupling);

  SUBCASE("low strain reaches the strong-coupling flag") {
    DeviceParams soft = p;
    soft.strain = 3e-10;  // softer mode, larger zero-point motion
    const CouplingResult rs = coupling_rate(soft);
    CHECK(std::abs(rs.coupling_rate) * soft.excited_lifetime >= 1.0);
    CHECK(rs.strong_coupling);
  }
}

TEST_CASE("coupling scales as z^-4 at fixed mode parameters") {
  DeviceParams p;
  const double g1 = coupling_rate(p).coupling_rate;
  for (double factor : {1.5, 2.0, 3.0}) {
    DeviceParams q = p;
    q.emitter_distance *= factor;
    const double expected = g1 / std::pow(factor, 4);
    CHECK(coupling_rate(q).coupling_rate ==
          doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("thermal occupation inversion") {
  // Nbar = 210 at 0.1 K pins the mode near 9.9 MHz
  const double omega = frequency_from_occupation(210.0, 0.1);
  CHECK(omega / two_pi == doctest::Approx(9.899e6).epsilon(1e-3));
  CHECK(thermal_occupation(omega, 0.1) == doctest::Approx(210.0).epsilon(1e-9));
  CHECK(thermal_occupation(omega, 0.0) == 0.0);
}

TEST_CASE("unit round trip SI <-> Omega units") {
  const double omega_si = 6.2832e7;
  for (double rate_si : {3.125e8, 1.0e4, 7.7e6}) {
    const double dimensionless = rate_to_omega_units(rate_si, omega_si);
    CHECK(rate_from_omega_units(dimensionless, omega_si) ==
          doctest::Approx(rate_si).epsilon(1e-12));
  }
}

TEST_CASE("device to model parameter conversion") {
  DeviceParams p;
  const SystemParams s = to_system_params(p, 0.1);
  CHECK(s.mech_frequency_si == doctest::Approx(mode_frequency(p)));
  // gamma = 1/tau in Omega units: 1/(3.2 ns) / (2 pi 10 MHz) = 4.97
  CHECK(s.emitter_decay == doctest::Approx(4.97).epsilon(2e-3));
  // G/Omega = 0.764 at the 10 MHz working point
  CHECK(s.coupling == doctest::Approx(0.764).epsilon(5e-3));
  CHECK(s.bath_occupation == doctest::Approx(207.9).epsilon(2e-3));
  CHECK(s.quality_factor() == doctest::Approx(7000.0));
}
