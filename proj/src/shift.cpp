// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/shift.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"
#include "spinshift/reduction.hpp"

namespace spinshift {

double modal_frequency_shift(const PhononMode& mode, double d2nu_MHz_per_A2,
                             double omega_min_THz) {
  if (!(mode.omega >= omega_min_THz * units::THz_to_rad_per_s))
    throw ValidationError("modal_frequency_shift: mode " + std::to_string(mode.index) +
                          " below the admission cutoff");
  // (hbar / 2 M w) * d^2(2 pi nu)/dq^2; zero_point_msd carries the unit chain.
  return zero_point_msd(mode) * 2.0 * constants::pi * d2nu_MHz_per_A2 * units::MHz_to_Hz;
}

namespace {

struct ModeTerm {
  double inv_mass_omega; // msd_factor_A2 / (M w), A^2
  double omega;          // rad/s
  double d2nu;           // MHz/A^2
};

std::vector<ModeTerm> admitted_terms(const PhononSpectrum& spectrum,
                                     const CurvatureSet& curvatures,
                                     double omega_min_THz, int* excluded) {
  curvatures.validate();
  const AdmittedModes admitted = filter_admitted(spectrum, omega_min_THz);
  if (excluded) *excluded = admitted.excluded;
  std::unordered_map<int, double> d2nu_by_mode;
  for (const auto& s : curvatures.samples)
    d2nu_by_mode[s.mode_index] = second_derivative(s);
  std::vector<ModeTerm> terms;
  terms.reserve(admitted.modes.size());
  for (const auto& mode : admitted.modes) {
    auto it = d2nu_by_mode.find(mode.index);
    if (it == d2nu_by_mode.end())
      throw ValidationError("curvature set '" + curvatures.observable +
                            "' has no sample for admitted mode " +
                            std::to_string(mode.index));
    terms.push_back({units::msd_factor_A2 / (mode.effective_mass * mode.omega),
                     mode.omega, it->second});
  }
  return terms;
}

double dynamic_shift_terms(const std::vector<ModeTerm>& terms, double T,
                           bool subtract_zero_point, int threads) {
  return chunked_sum(
      terms.size(),
      [&](std::size_t i) {
        const ModeTerm& m = terms[i];
        const double occ = bose_occupation(m.omega, T) + (subtract_zero_point ? 0.0 : 0.5);
        return 0.5 * m.d2nu * m.inv_mass_omega * occ;
      },
      threads, /*chunk_size=*/64);
}

} // namespace

double dynamic_shift(const PhononSpectrum& spectrum, const CurvatureSet& curvatures,
                     double temperature_K, const ShiftOptions& options) {
  const auto terms =
      admitted_terms(spectrum, curvatures, options.omega_min_THz, nullptr);
  return dynamic_shift_terms(terms, temperature_K, options.subtract_zero_point,
                             options.threads);
}

ExpansionModel::ExpansionModel(const LatticeTable& table,
                               const std::vector<std::pair<double, double>>& nu_of_a,
                               const ExpansionOptions& options)
    : lattice_(table), fit_(nu_of_a, options.fit_degree), options_(options) {
  // Fail fast when the reference temperature itself is outside the table.
  lattice_.a(options_.T_ref, options_.allow_extrapolation);
}

double ExpansionModel::shift_direct(double T) const {
  const double aT = lattice_.a(T, options_.allow_extrapolation);
  const double a0 = lattice_.a(options_.T_ref, options_.allow_extrapolation);
  return fit_.nu(aT) - fit_.nu(a0);
}

double ExpansionModel::shift_integral(double T) const {
  // Integrates (dnu/da)(a(t)) a(t) alpha(t) dt over each interpolant segment
  // with 3-point Gauss-Legendre; the integrand is a polynomial of degree <= 5
  // per segment for a quadratic fit, so the quadrature is exact.
  const double lo = std::min(options_.T_ref, T);
  const double hi = std::max(options_.T_ref, T);
  const double sign = (T >= options_.T_ref) ? 1.0 : -1.0;
  lattice_.a(T, options_.allow_extrapolation); // range check

  static const double nodes[3] = {-std::sqrt(0.6), 0.0, std::sqrt(0.6)};
  static const double wts[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

  const auto& knots = lattice_.knots();
  std::vector<double> cuts;
  cuts.push_back(lo);
  for (double k : knots)
    if (k > lo && k < hi) cuts.push_back(k);
  cuts.push_back(hi);

  KahanSum acc;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double a0 = cuts[s], b0 = cuts[s + 1];
    const double half = 0.5 * (b0 - a0), mid = 0.5 * (a0 + b0);
    for (int g = 0; g < 3; ++g) {
      const double t = mid + half * nodes[g];
      const double at = lattice_.a(t, true);
      const double integrand = fit_.dnu_da(at) * at * lattice_.alpha(t, true);
      acc.add(wts[g] * half * integrand);
    }
  }
  return sign * acc.value();
}

double expansion_shift(const LatticeTable& table,
                       const std::vector<std::pair<double, double>>& nu_of_a,
                       double temperature_K, const ExpansionOptions& options) {
  return ExpansionModel(table, nu_of_a, options).shift(temperature_K);
}

std::vector<double> temperature_grid(double start, double stop, double step) {
  if (!(step > 0.0) || stop < start)
    throw ValidationError("temperature grid: need stop >= start and step > 0");
  std::vector<double> grid;
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  grid.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

std::vector<double> temperature_derivative(const std::vector<double>& temperatures,
                                           const std::vector<double>& values_MHz) {
  const std::size_t n = temperatures.size();
  if (n < 3) throw ValidationError("temperature_derivative: need at least 3 points");
  if (values_MHz.size() != n)
    throw ValidationError("temperature_derivative: grid/value length mismatch");
  std::vector<double> out(n);
  out[0] = (values_MHz[1] - values_MHz[0]) / (temperatures[1] - temperatures[0]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out[i] = (values_MHz[i + 1] - values_MHz[i - 1]) /
             (temperatures[i + 1] - temperatures[i - 1]);
  out[n - 1] = (values_MHz[n - 1] - values_MHz[n - 2]) /
               (temperatures[n - 1] - temperatures[n - 2]);
  for (double& v : out) v *= units::MHz_per_K_to_kHz_per_K;
  return out;
}

std::vector<double> temperature_derivative(const ShiftCurve& curve) {
  return temperature_derivative(curve.temperatures, curve.total);
}

ShiftCurve total_shift_curve(const PhononSpectrum& spectrum,
                             const CurvatureSet& curvatures,
                             const ExpansionModel* expansion,
                             const std::vector<double>& temperatures,
                             const ShiftOptions& options) {
  if (temperatures.empty())
    throw ValidationError("total_shift_curve: empty temperature grid");
  int excluded = 0;
  const auto terms = admitted_terms(spectrum, curvatures, options.omega_min_THz, &excluded);

  ShiftCurve curve;
  curve.observable = curvatures.observable;
  curve.temperatures = temperatures;
  curve.excluded_modes = excluded;
  curve.total.reserve(temperatures.size());
  curve.expansion_term.reserve(temperatures.size());
  curve.dynamic_term.reserve(temperatures.size());
  for (double T : temperatures) {
    const double e = expansion ? expansion->shift(T) : 0.0;
    const double d =
        dynamic_shift_terms(terms, T, options.subtract_zero_point, options.threads);
    curve.expansion_term.push_back(e);
    curve.dynamic_term.push_back(d);
    curve.total.push_back(e + d);
  }
  if (temperatures.size() >= 3) curve.derivative = temperature_derivative(curve);
  return curve;
}

ShiftCurve zpl_shift(const PhononSpectrum& ground, const PhononSpectrum& excited,
                     const ExpansionModel* expansion,
                     const std::vector<double>& temperatures,
                     const ShiftOptions& options) {
  validate_spectrum(ground);
  validate_spectrum(excited);
  if (ground.modes.size() != excited.modes.size())
    throw ValidationError("zpl_shift: ground and excited spectra have different mode counts");
  for (std::size_t i = 0; i < ground.modes.size(); ++i)
    if (ground.modes[i].index != excited.modes[i].index)
      throw ValidationError("zpl_shift: mode ordering mismatch at position " +
                            std::to_string(i));

  const double omega_min = options.omega_min_THz * units::THz_to_rad_per_s;
  struct Pair {
    double omega_g;
    double dnu_MHz; // (w_e - w_g) / 2 pi, MHz
  };
  std::vector<Pair> pairs;
  int excluded = 0;
  for (std::size_t i = 0; i < ground.modes.size(); ++i) {
    const double wg = ground.modes[i].omega;
    const double we = excited.modes[i].omega;
    if (wg < omega_min || we < omega_min) {
      ++excluded;
      continue;
    }
    pairs.push_back({wg, (we - wg) / (2.0 * constants::pi) * units::Hz_to_MHz});
  }

  ShiftCurve curve;
  curve.observable = "ZPL";
  curve.temperatures = temperatures;
  curve.excluded_modes = excluded;
  for (double T : temperatures) {
    const double d = chunked_sum(
        pairs.size(),
        [&](std::size_t i) {
          const double occ = bose_occupation(pairs[i].omega_g, T) +
                             (options.subtract_zero_point ? 0.0 : 0.5);
          return pairs[i].dnu_MHz * occ;
        },
        options.threads, 64);
    const double e = expansion ? expansion->shift(T) : 0.0;
    curve.expansion_term.push_back(e);
    curve.dynamic_term.push_back(d);
    curve.total.push_back(e + d);
  }
  if (temperatures.size() >= 3) curve.derivative = temperature_derivative(curve);
  return curve;
}

} // namespace spinshift
