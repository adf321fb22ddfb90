// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/phonon.hpp"

#include <cmath>
#include <set>
#include <string>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"

namespace spinshift {

void validate_mode(const PhononMode& mode) {
  if (!(mode.effective_mass > 0.0))
    throw ValidationError("mode " + std::to_string(mode.index) +
                          ": effective mass must be positive");
  if (mode.displacement_pattern) {
    double norm2 = 0.0;
    for (const auto& v : *mode.displacement_pattern)
      norm2 += v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-8)
      throw ValidationError("mode " + std::to_string(mode.index) +
                            ": displacement pattern is not normalized");
  }
}

void validate_spectrum(const PhononSpectrum& spectrum) {
  std::set<int> seen;
  for (const auto& mode : spectrum.modes) {
    validate_mode(mode);
    if (!seen.insert(mode.index).second)
      throw ValidationError("duplicate mode index " + std::to_string(mode.index));
  }
}

double bose_occupation(double omega_rad_s, double temperature_K) {
  if (!(omega_rad_s > 0.0))
    throw ValidationError("bose_occupation: omega must be positive");
  if (temperature_K < 0.0)
    throw ValidationError("bose_occupation: temperature must be non-negative");
  if (temperature_K == 0.0) return 0.0;
  const double x = constants::hbar_eV_s * omega_rad_s /
                   (constants::boltzmann_eV_per_K * temperature_K);
  // expm1 saturates to +inf for large x, so 1/expm1 underflows to 0 cleanly.
  return 1.0 / std::expm1(x);
}

double zero_point_msd(const PhononMode& mode) {
  if (!(mode.omega > 0.0))
    throw ValidationError("zero_point_msd: omega must be positive");
  if (!(mode.effective_mass > 0.0))
    throw ValidationError("zero_point_msd: effective mass must be positive");
  return units::msd_factor_A2 / (2.0 * mode.effective_mass * mode.omega);
}

double mean_square_displacement(const PhononMode& mode, double temperature_K) {
  const double n = bose_occupation(mode.omega, temperature_K);
  if (!(mode.effective_mass > 0.0))
    throw ValidationError("mean_square_displacement: effective mass must be positive");
  return units::msd_factor_A2 / (mode.effective_mass * mode.omega) * (n + 0.5);
}

AdmittedModes filter_admitted(const PhononSpectrum& spectrum, double omega_min_THz) {
  validate_spectrum(spectrum);
  const double omega_min = omega_min_THz * units::THz_to_rad_per_s;
  AdmittedModes out;
  out.modes.reserve(spectrum.modes.size());
  for (const auto& mode : spectrum.modes) {
    if (mode.omega < omega_min)
      ++out.excluded;
    else
      out.modes.push_back(mode);
  }
  return out;
}

} // namespace spinshift
