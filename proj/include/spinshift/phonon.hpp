// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace spinshift {

// One vibrational mode. omega is the angular frequency in rad/s (input files
// carry linear THz); effective_mass is the mode mass conjugate to the normal
// coordinate, in amu. The displacement pattern is optional metadata.
struct PhononMode {
  int index = 0;
  double omega = 0.0;          // rad/s
  double effective_mass = 0.0; // amu
  std::optional<std::vector<std::array<double, 3>>> displacement_pattern;
};

struct PhononSpectrum {
  std::vector<PhononMode> modes;
  std::string label;
};

inline constexpr double default_omega_min_THz = 0.1;

// Throws ValidationError on mass <= 0, duplicate indices, or an off-normal
// displacement pattern. Non-positive omega is allowed here (real phonon
// outputs contain translational/imaginary rows); admission filtering deals
// with it.
void validate_mode(const PhononMode& mode);
void validate_spectrum(const PhononSpectrum& spectrum);

// Mean Bose-Einstein occupation 1/(exp(hbar w / kT) - 1). Exactly 0 at T = 0;
// overflow-safe for large hbar w / kT. ValidationError if omega <= 0 or T < 0.
double bose_occupation(double omega_rad_s, double temperature_K);

// <q^2> = (hbar / M w)(n + 1/2) in Angstrom^2.
double mean_square_displacement(const PhononMode& mode, double temperature_K);

// hbar / (2 M w): the T = 0 limit of mean_square_displacement, Angstrom^2.
double zero_point_msd(const PhononMode& mode);

// Modes below the linear-frequency cutoff are excluded from every
// 1/omega-weighted sum; <q^2> diverges as omega -> 0 so soft and imaginary
// modes must not enter. The excluded count is reported alongside.
struct AdmittedModes {
  std::vector<PhononMode> modes;
  int excluded = 0;
};

AdmittedModes filter_admitted(const PhononSpectrum& spectrum,
                              double omega_min_THz = default_omega_min_THz);

} // namespace spinshift
