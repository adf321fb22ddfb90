// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"
#include "spinshift/reduction.hpp"

namespace spinshift {

std::vector<double> default_bins(const PhononSpectrum& spectrum, int bins,
                                 double omega_min_THz) {
  if (bins < 1) throw ValidationError("default_bins: need at least one bin");
  const AdmittedModes admitted = filter_admitted(spectrum, omega_min_THz);
  if (admitted.modes.empty())
    throw ValidationError("default_bins: no admitted modes");
  double w_max = 0.0;
  for (const auto& m : admitted.modes) w_max = std::max(w_max, m.omega);
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b)
    edges[static_cast<std::size_t>(b)] =
        1.05 * w_max * static_cast<double>(b) / static_cast<double>(bins);
  return edges;
}

SpectralDensity spectral_density(const PhononSpectrum& spectrum,
                                 const CurvatureSet& curvatures,
                                 const std::vector<double>& bin_edges,
                                 double omega_min_THz) {
  if (bin_edges.size() < 2 || !std::is_sorted(bin_edges.begin(), bin_edges.end()))
    throw ValidationError("spectral_density: bin edges must be sorted, >= 2");
  curvatures.validate();
  const AdmittedModes admitted = filter_admitted(spectrum, omega_min_THz);

  std::unordered_map<int, double> d2nu_by_mode;
  for (const auto& s : curvatures.samples)
    d2nu_by_mode[s.mode_index] = second_derivative(s);

  SpectralDensity out;
  out.observable = curvatures.observable;
  out.bin_edges = bin_edges;
  out.weights.assign(bin_edges.size() - 1, 0.0);
  std::vector<KahanSum> acc(out.weights.size());

  for (const auto& mode : admitted.modes) {
    auto it = d2nu_by_mode.find(mode.index);
    if (it == d2nu_by_mode.end())
      throw ValidationError("spectral_density: curvature set '" + curvatures.observable +
                            "' has no sample for admitted mode " +
                            std::to_string(mode.index));
    const double w = it->second / mode.effective_mass;
    if (mode.omega < bin_edges.front() || mode.omega > bin_edges.back())
      throw ValidationError("spectral_density: mode " + std::to_string(mode.index) +
                            " lies outside the bin range");
    auto ub = std::upper_bound(bin_edges.begin(), bin_edges.end(), mode.omega);
    std::size_t bin = static_cast<std::size_t>(ub - bin_edges.begin());
    bin = (bin == 0) ? 0 : bin - 1;
    if (bin >= acc.size()) bin = acc.size() - 1; // top edge inclusive
    acc[bin].add(w);
    out.deltas.emplace_back(mode.omega, w);
  }
  for (std::size_t b = 0; b < acc.size(); ++b) out.weights[b] = acc[b].value();
  return out;
}

namespace {

double occupation_integral(const SpectralDensity& s, double T, double zeta) {
  KahanSum acc;
  for (const auto& [omega, weight] : s.deltas)
    acc.add(weight * (bose_occupation(omega, T) + zeta) / omega);
  return acc.value();
}

} // namespace

double shift_ratio(const SpectralDensity& s1, const SpectralDensity& s2,
                   double temperature_K, double zeta) {
  if (s1.bin_edges != s2.bin_edges)
    throw ValidationError("shift_ratio: densities do not share one bin grid");
  if (!(zeta == 0.0 || zeta == 0.5))
    throw ValidationError("shift_ratio: zeta must be 0 or 1/2");
  const double denom = occupation_integral(s2, temperature_K, zeta);
  if (denom == 0.0)
    throw NumericError("shift_ratio: denominator integral vanishes");
  return occupation_integral(s1, temperature_K, zeta) / denom;
}

std::vector<OverlayTable> correlation_overlay(const std::vector<ShiftCurve>& curves,
                                              std::size_t reference_index) {
  if (reference_index >= curves.size())
    throw ValidationError("correlation_overlay: reference index out of range");
  const ShiftCurve& ref = curves[reference_index];
  for (const auto& c : curves)
    if (c.temperatures != ref.temperatures)
      throw ValidationError("correlation_overlay: curves do not share the T grid");
  const std::size_t n = ref.temperatures.size();
  if (n < 3)
    throw ValidationError("correlation_overlay: need at least 3 grid points");

  std::vector<OverlayTable> tables;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    if (c == reference_index) continue;
    const ShiftCurve& cur = curves[c];
    OverlayTable table;
    table.reference = ref.observable;
    table.observable = cur.observable;
    table.rows.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t lo = (i == 0) ? 0 : i - 1;
      const std::size_t hi = (i + 1 == n) ? n - 1 : i + 1;
      const double dref = ref.total[hi] - ref.total[lo];
      const double dval = cur.total[hi] - cur.total[lo];
      table.rows[i] = {ref.temperatures[i], ref.total[i], cur.total[i],
                       dval / dref}; // NaN where the reference is locally flat
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

} // namespace spinshift
