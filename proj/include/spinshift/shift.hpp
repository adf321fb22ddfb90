// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spinshift/curvature.hpp"
#include "spinshift/lattice.hpp"
#include "spinshift/phonon.hpp"

namespace spinshift {

struct ShiftOptions {
  double omega_min_THz = default_omega_min_THz;
  // When set, the T = 0 value of the dynamic term is removed so curves are
  // referenced to zero temperature (the convention experimental drift data
  // use). Turn off to get the absolute second-order contribution including
  // zero-point motion.
  bool subtract_zero_point = true;
  int threads = 1;
};

// Frequency change of one mode between the two electronic surfaces,
// Delta_omega = (hbar / 2 M w) d^2(2 pi nu)/dq^2, in rad/s. The mode must be
// admitted (omega above the cutoff).
double modal_frequency_shift(const PhononMode& mode, double d2nu_MHz_per_A2,
                             double omega_min_THz = default_omega_min_THz);

// Closed-form dynamical-phonon shift
//   sum_i (1/2)(d^2 nu / dq_i^2)(hbar / M_i w_i)(n_i(T) + 1/2)   [MHz]
// over admitted modes; every admitted mode must have a curvature sample.
double dynamic_shift(const PhononSpectrum& spectrum, const CurvatureSet& curvatures,
                     double temperature_K, const ShiftOptions& options = {});

struct ExpansionOptions {
  int fit_degree = 1;
  double T_ref = 0.0;
  bool allow_extrapolation = false;
};

// Quasiharmonic thermal-expansion term. Two algebraically equivalent routes
// are kept: the direct difference nu(a(T)) - nu(a(T_ref)) and the integral of
// (dnu/da) a(T) alpha(T) dT. Both are exposed and must agree.
class ExpansionModel {
public:
  ExpansionModel(const LatticeTable& table,
                 const std::vector<std::pair<double, double>>& nu_of_a,
                 const ExpansionOptions& options = {});

  double shift_direct(double T) const;
  double shift_integral(double T) const;
  double shift(double T) const { return shift_direct(T); }

  const LatticeInterpolant& lattice() const { return lattice_; }
  const NuOfAFit& fit() const { return fit_; }
  double t_ref() const { return options_.T_ref; }

private:
  LatticeInterpolant lattice_;
  NuOfAFit fit_;
  ExpansionOptions options_;
};

double expansion_shift(const LatticeTable& table,
                       const std::vector<std::pair<double, double>>& nu_of_a,
                       double temperature_K, const ExpansionOptions& options = {});

// nu(T) sampled on a temperature grid with the per-term breakdown retained.
// total[i] is stored as the literal sum expansion_term[i] + dynamic_term[i].
struct ShiftCurve {
  std::string observable;
  std::vector<double> temperatures;    // K
  std::vector<double> total;           // MHz
  std::vector<double> expansion_term;  // MHz
  std::vector<double> dynamic_term;    // MHz
  std::vector<double> derivative;      // kHz/K, central differences on the grid
  int excluded_modes = 0;
};

// start:stop:step grid, inclusive of stop when it lands on the grid.
std::vector<double> temperature_grid(double start, double stop, double step);

ShiftCurve total_shift_curve(const PhononSpectrum& spectrum,
                             const CurvatureSet& curvatures,
                             const ExpansionModel* expansion,
                             const std::vector<double>& temperatures,
                             const ShiftOptions& options = {});

// Central differences (one-sided at the ends), kHz/K. Needs >= 3 points.
std::vector<double> temperature_derivative(const std::vector<double>& temperatures,
                                           const std::vector<double>& values_MHz);
std::vector<double> temperature_derivative(const ShiftCurve& curve);

// ZPL route: Delta_omega_i = w_i^excited - w_i^ground taken directly from the
// two spectra, occupations always from the ground-state frequency.
ShiftCurve zpl_shift(const PhononSpectrum& ground, const PhononSpectrum& excited,
                     const ExpansionModel* expansion,
                     const std::vector<double>& temperatures,
                     const ShiftOptions& options = {});

} // namespace spinshift
