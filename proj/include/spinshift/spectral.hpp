// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinshift/curvature.hpp"
#include "spinshift/phonon.hpp"
#include "spinshift/shift.hpp"

namespace spinshift {

// Curvature spectral density S(w) = sum_j (1/M_j)(d^2 nu/dq_j^2) d(w - w_j).
// The histogram (bin_edges/weights) is the plotting view; the exact delta
// comb is retained so downstream ratios never depend on the binning.
struct SpectralDensity {
  std::string observable;
  std::vector<double> bin_edges; // rad/s, size = bins + 1
  std::vector<double> weights;   // MHz / (A^2 amu), per bin
  std::vector<std::pair<double, double>> deltas; // (omega, weight), mode order
};

// Uniform bins over [0, 1.05 * w_max] of the admitted spectrum.
std::vector<double> default_bins(const PhononSpectrum& spectrum, int bins = 200,
                                 double omega_min_THz = default_omega_min_THz);

SpectralDensity spectral_density(const PhononSpectrum& spectrum,
                                 const CurvatureSet& curvatures,
                                 const std::vector<double>& bin_edges,
                                 double omega_min_THz = default_omega_min_THz);

// Ratio of temperature-induced shifts,
//   int S1(w) (n(w,T) + zeta)/w dw / int S2(w) (n(w,T) + zeta)/w dw,
// evaluated over the delta combs. zeta = 0 references shifts to T = 0;
// zeta = 1/2 keeps the zero-point term. Densities must share the bin grid.
double shift_ratio(const SpectralDensity& s1, const SpectralDensity& s2,
                   double temperature_K, double zeta = 0.0);

// Paired columns (dNu_ref, dNu_i) plus the local slope d dNu_i / d dNu_ref
// (central differences along the shared T grid).
struct OverlayRow {
  double temperature_K = 0.0;
  double reference_MHz = 0.0;
  double value_MHz = 0.0;
  double slope = 0.0;
};

struct OverlayTable {
  std::string reference;
  std::string observable;
  std::vector<OverlayRow> rows;
};

std::vector<OverlayTable> correlation_overlay(const std::vector<ShiftCurve>& curves,
                                              std::size_t reference_index);

} // namespace spinshift
