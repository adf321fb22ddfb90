// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

namespace spinshift {

// Fixed CODATA-2018 values. h, e and k_B are exact by SI definition; the
// rest are the recommended values. Everything downstream derives from these.
namespace constants {

inline constexpr double pi = std::numbers::pi_v<double>;

inline constexpr double planck_J_s = 6.62607015e-34;        // J s (exact)
inline constexpr double elementary_charge = 1.602176634e-19; // C (exact)
inline constexpr double boltzmann_J_per_K = 1.380649e-23;   // J/K (exact)

inline constexpr double hbar_J_s = planck_J_s / (2.0 * pi);        // J s
inline constexpr double hbar_eV_s = hbar_J_s / elementary_charge;  // eV s
inline constexpr double planck_eV_s = planck_J_s / elementary_charge;
inline constexpr double boltzmann_eV_per_K = boltzmann_J_per_K / elementary_charge;

inline constexpr double mu_0 = 1.25663706212e-6;     // vacuum permeability, T m/A
inline constexpr double eps_0 = 8.8541878128e-12;    // vacuum permittivity, F/m
inline constexpr double mu_B = 9.2740100783e-24;     // Bohr magneton, J/T
inline constexpr double mu_N = 5.0507837461e-27;     // nuclear magneton, J/T
inline constexpr double g_e = 2.00231930436256;      // electron Lande factor magnitude
inline constexpr double amu_kg = 1.66053906660e-27;  // atomic mass unit, kg

} // namespace constants

// The spec-facing bundle of constants. Immutable; `codata()` is the single
// instance the rest of the library uses.
struct PhysicalConstants {
  double hbar;   // eV s
  double k_B;    // eV/K
  double mu_0;   // T m/A
  double mu_B;   // J/T
  double mu_N;   // J/T
  double g_e;    // dimensionless
  double e;      // C
  double eps_0;  // F/m
};

constexpr PhysicalConstants codata() {
  return PhysicalConstants{constants::hbar_eV_s, constants::boltzmann_eV_per_K,
                           constants::mu_0,      constants::mu_B,
                           constants::mu_N,      constants::g_e,
                           constants::elementary_charge, constants::eps_0};
}

// Unit conventions: lengths in Angstrom, masses in amu, phonon frequencies
// enter as linear THz and live as rad/s, transition frequencies in MHz,
// energies in eV. These are the only conversion factors in the code base.
namespace units {

inline constexpr double THz_to_rad_per_s = 2.0 * constants::pi * 1.0e12;
inline constexpr double rad_per_s_to_THz = 1.0 / THz_to_rad_per_s;
inline constexpr double MHz_to_Hz = 1.0e6;
inline constexpr double Hz_to_MHz = 1.0e-6;
inline constexpr double MHz_per_K_to_kHz_per_K = 1.0e3;
inline constexpr double angstrom_to_m = 1.0e-10;
inline constexpr double m_to_angstrom = 1.0e10;
inline constexpr double m2_to_A2 = 1.0e20;
inline constexpr double A3_to_m3 = 1.0e-30;
inline constexpr double per_A3_to_per_m3 = 1.0e30;
inline constexpr double bohr_to_angstrom = 0.529177210903;
inline constexpr double millibarn_to_m2 = 1.0e-31;

// <q^2> = (hbar / M omega)(n + 1/2); this factor divided by (M_amu * omega_rad_s)
// gives Angstrom^2.
inline constexpr double msd_factor_A2 = constants::hbar_J_s / constants::amu_kg * m2_to_A2;

// e/(4 pi eps0) in V * Angstrom: EFG tensors come out in V/A^2.
inline constexpr double coulomb_V_A =
    constants::elementary_charge / (4.0 * constants::pi * constants::eps_0) * m_to_angstrom;

} // namespace units

} // namespace spinshift
