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

#ifndef LAMBDAPHONON_DEVICE_HPP
#define LAMBDAPHONON_DEVICE_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "lambdaphonon/model.hpp"
#include "lambdaphonon/types.hpp"

namespace lambdaphonon {

// Physical-unit calculator for the dispersion-force coupling between the
// emitter transition and the ribbon's fundamental mode. Everything here is
// in SI units; model.hpp works in units of the mechanical frequency and
// to_system_params() is the one conversion layer between the two.
struct DeviceParams {
  double emitter_distance = 10e-9;    // z [m]
  double transition_energy_ev = 1.95; // hbar omega_eg [eV]
  double excited_lifetime = 3.2e-9;   // tau_eg [s]
  Complex permittivity = 2.1;         // epsilon(omega_eg), fused-silica-like default
  double ribbon_length = 1e-6;        // L [m]
  double ribbon_width = 10e-9;        // w [m]
  // Monolayer h-BN literature values; override for other membranes.
  double areal_density = 7.6e-7;      // rho_2d [kg/m^2]
  double youngs_modulus_2d = 289.0;   // E_2d [N/m]
  double strain = 1.05e-6;            // dimensionless tensile strain

  double transition_frequency() const {  // omega_eg [rad/s]
    return transition_energy_ev * si::electron_volt / si::hbar;
  }

  void validate() const {
    if (emitter_distance <= 0.0) throw std::invalid_argument("emitter distance must be > 0");
    if (excited_lifetime <= 0.0) throw std::invalid_argument("excited lifetime must be > 0");
    if (transition_energy_ev <= 0.0) throw std::invalid_argument("transition energy must be > 0");
    if (ribbon_length <= 0.0 || ribbon_width <= 0.0) {
      throw std::invalid_argument("ribbon geometry must be positive");
    }
    if (areal_density <= 0.0 || youngs_modulus_2d <= 0.0) {
      throw std::invalid_argument("material constants must be positive");
    }
  }

  /// Near-field validity: the shift formula assumes z well below the
  /// transition wavelength.
  bool near_field_ok() const {
    const double lambda = two_pi * si::speed_of_light / transition_frequency();
    return emitter_distance <= lambda / 10.0;
  }
};

/// Dispersion-force shift of the transition frequency [rad/s]:
///   delta_omega = (3/32) c^3 / (tau_eg omega_eg^3 z^3)
///                 * (|eps|^2 - 1) / |eps + 1|^2.
inline double frequency_shift(const DeviceParams& p) {
  p.validate();
  if (std::abs(p.permittivity + Complex(1.0, 0.0)) < 1e-12) {
    throw std::invalid_argument("permittivity -1 makes the image factor singular");
  }
  const double omega_eg = p.transition_frequency();
  const double z = p.emitter_distance;
  const double c3 = std::pow(si::speed_of_light, 3);
  const double eps2 = std::norm(p.permittivity);
  const double image = (eps2 - 1.0) / std::norm(p.permittivity + Complex(1.0, 0.0));
  return (3.0 / 32.0) * c3 /
         (p.excited_lifetime * std::pow(omega_eg, 3) * std::pow(z, 3)) * image;
}

/// Frequency pull G_script = d(delta_omega)/dz = -3 delta_omega / z [rad/s/m],
/// the analytic derivative of the z^-3 law.
inline double frequency_pull(const DeviceParams& p) {
  return -3.0 * frequency_shift(p) / p.emitter_distance;
}

/// Fundamental mode of the doubly clamped ribbon under tensile strain,
/// string-under-tension model: Omega_m = (pi / L) sqrt(E_2d strain / rho_2d)
/// [rad/s]. The elastic-wave normal-mode problem is reduced to this form;
/// the bending-dominated zero-strain regime is out of scope.
inline double mode_frequency(const DeviceParams& p) {
  p.validate();
  if (p.strain <= 0.0) {
    throw std::invalid_argument(
        "zero or negative strain: string-under-tension model needs tension");
  }
  return (M_PI / p.ribbon_length) *
         std::sqrt(p.youngs_modulus_2d * p.strain / p.areal_density);
}

/// Zero-point amplitude sqrt(hbar / (2 m_eff Omega)) with the effective mass
/// of the fundamental string mode, m_eff = rho_2d L w / 2.
inline double zero_point_amplitude(const DeviceParams& p) {
  const double m_eff = 0.5 * p.areal_density * p.ribbon_length * p.ribbon_width;
  return std::sqrt(si::hbar / (2.0 * m_eff * mode_frequency(p)));
}

struct CouplingResult {
  double frequency_shift = 0.0;      // delta_omega [rad/s]
  double frequency_pull = 0.0;       // d(delta_omega)/dz [rad/s/m]
  double mode_frequency = 0.0;       // Omega_m [rad/s]
  double zero_point_amplitude = 0.0; // z_zp [m]
  double coupling_rate = 0.0;        // G = pull * z_zp [rad/s]
  bool strong_coupling = false;      // |G| tau_eg >= 1
  bool near_field_ok = true;
};

/// Electromechanical coupling rate G = (d delta_omega / dz) * z_zp and the
/// quantities it is built from.
inline CouplingResult coupling_rate(const DeviceParams& p) {
  CouplingResult r;
  r.frequency_shift = frequency_shift(p);
  r.frequency_pull = frequency_pull(p);
  r.mode_frequency = mode_frequency(p);
  r.zero_point_amplitude = zero_point_amplitude(p);
  r.coupling_rate = r.frequency_pull * r.zero_point_amplitude;
  r.strong_coupling = std::abs(r.coupling_rate) * p.excited_lifetime >= 1.0;
  r.near_field_ok = p.near_field_ok();
  return r;
}

/// Bose occupation of a mode at angular frequency omega [rad/s] and
/// temperature T [K].
inline double thermal_occupation(double omega_si, double temperature) {
  if (omega_si <= 0.0 || temperature < 0.0) {
    throw std::invalid_argument("need omega > 0 and T >= 0");
  }
  if (temperature == 0.0) return 0.0;
  const double x = si::hbar * omega_si / (si::boltzmann * temperature);
  return 1.0 / std::expm1(x);
}

/// Mode frequency [rad/s] whose Bose occupation at temperature T equals nbar.
inline double frequency_from_occupation(double nbar, double temperature) {
  if (nbar <= 0.0 || temperature <= 0.0) {
    throw std::invalid_argument("need nbar > 0 and T > 0");
  }
  return (si::boltzmann * temperature / si::hbar) * std::log1p(1.0 / nbar);
}

inline double rate_to_omega_units(double rate_si, double omega_si) {
  if (omega_si <= 0.0) throw std::invalid_argument("omega must be > 0");
  return rate_si / omega_si;
}

inline double rate_from_omega_units(double rate, double omega_si) {
  if (omega_si <= 0.0) throw std::invalid_argument("omega must be > 0");
  return rate * omega_si;
}

/// The single SI -> Omega-units conversion: builds dimensionless model
/// parameters from the device working point at temperature T.
inline SystemParams to_system_params(const DeviceParams& p, double temperature,
                                     double quality_factor = 7000.0) {
  const CouplingResult r = coupling_rate(p);
  SystemParams s;
  s.mech_frequency_si = r.mode_frequency;
  s.coupling = rate_to_omega_units(std::abs(r.coupling_rate), r.mode_frequency);
  s.emitter_decay =
      rate_to_omega_units(1.0 / p.excited_lifetime, r.mode_frequency);
  s.set_quality_factor(quality_factor);
  s.bath_occupation = thermal_occupation(r.mode_frequency, temperature);
  return s;
}

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_DEVICE_HPP
