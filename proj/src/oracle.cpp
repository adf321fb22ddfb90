// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/oracle.hpp"

#include <cmath>
#include <string>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"
#include "spinshift/reduction.hpp"

namespace spinshift {

namespace {

double boltzmann_x(double omega, double T) {
  return constants::hbar_eV_s * omega / (constants::boltzmann_eV_per_K * T);
}

} // namespace

int default_n_max(double omega_rad_s, double temperature_K) {
  if (!(omega_rad_s > 0.0))
    throw ValidationError("default_n_max: omega must be positive");
  if (temperature_K <= 0.0) return 1;
  const double x = boltzmann_x(omega_rad_s, temperature_K);
  // tail(n) = e^{-x(n+1)} / (1 - e^{-x}) < 1e-14
  const double r = std::exp(-x);
  for (int n = 1; n <= 200; ++n) {
    const double tail = std::exp(-x * (n + 1)) / (1.0 - r);
    if (tail < 1e-14) return n;
  }
  return 200;
}

OracleResult oracle_average(const OccupationEnsemble& ensemble, double nu0_MHz) {
  const std::size_t n_modes = ensemble.modes.size();
  if (n_modes > static_cast<std::size_t>(oracle_max_modes))
    throw ValidationError("oracle: more than " + std::to_string(oracle_max_modes) +
                          " modes (enumeration is exponential)");
  if (ensemble.n_max.size() != n_modes)
    throw ValidationError("oracle: n_max list does not match mode list");
  if (ensemble.temperature_K < 0.0)
    throw ValidationError("oracle: temperature must be non-negative");
  for (std::size_t i = 0; i < n_modes; ++i) {
    if (!(ensemble.modes[i].omega > 0.0))
      throw ValidationError("oracle: omega must be positive");
    if (ensemble.n_max[i] < 1)
      throw ValidationError("oracle: n_max must be >= 1");
  }

  OracleResult result;
  const double T = ensemble.temperature_K;

  if (n_modes == 0) {
    result.average_MHz = nu0_MHz;
    result.configurations = 1;
    return result;
  }

  // T = 0: only the ground configuration has weight.
  if (T == 0.0) {
    KahanSum zero_point;
    for (const auto& m : ensemble.modes) zero_point.add(0.5 * m.dnu_MHz);
    result.average_MHz = nu0_MHz + zero_point.value();
    result.configurations = 1;
    result.per_mode_tail_weight.assign(n_modes, 0.0);
    return result;
  }

  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n_modes; ++i) {
    const auto width = static_cast<std::uint64_t>(ensemble.n_max[i]) + 1;
    if (count > oracle_max_configurations / width)
      throw NumericError("oracle: configuration count exceeds " +
                         std::to_string(oracle_max_configurations));
    count *= width;
  }

  std::vector<double> x(n_modes);
  for (std::size_t i = 0; i < n_modes; ++i) x[i] = boltzmann_x(ensemble.modes[i].omega, T);

  // Lexicographic enumeration over occupation vectors. The common zero-point
  // factor exp(-sum x_i / 2) cancels between numerator and Z, so weights are
  // exp(-sum x_i n_i) <= 1: log-space accumulation with no overflow and
  // harmless underflow at low T.
  std::vector<int> occ(n_modes, 0);
  KahanSum z_sum, v_sum;
  for (std::uint64_t c = 0; c < count; ++c) {
    double log_w = 0.0;
    double value = nu0_MHz;
    for (std::size_t i = 0; i < n_modes; ++i) {
      log_w -= x[i] * occ[i];
      value += ensemble.modes[i].dnu_MHz * (occ[i] + 0.5);
    }
    const double w = std::exp(log_w);
    z_sum.add(w);
    v_sum.add(w * value);
    for (std::size_t i = 0; i < n_modes; ++i) {
      if (++occ[i] <= ensemble.n_max[i]) break;
      occ[i] = 0;
    }
  }

  const double z = z_sum.value();
  if (!(z > 0.0)) throw NumericError("oracle: partition function vanished");
  result.average_MHz = v_sum.value() / z;
  result.configurations = count;

  // Exact truncation deficit per mode: the distribution factorizes, so the
  // error of the average is sum_i |dnu_i| (m_full,i - m_trunc,i) where m is
  // the single-mode mean of (n + 1/2).
  result.per_mode_tail_weight.resize(n_modes);
  KahanSum bound;
  for (std::size_t i = 0; i < n_modes; ++i) {
    const double r = std::exp(-x[i]);
    result.per_mode_tail_weight[i] =
        std::exp(-x[i] * (ensemble.n_max[i] + 1)) / (1.0 - r);
    KahanSum s0, s1;
    double rn = 1.0;
    for (int n = 0; n <= ensemble.n_max[i]; ++n) {
      s0.add(rn);
      s1.add((n + 0.5) * rn);
      rn *= r;
    }
    const double m_trunc = s1.value() / s0.value();
    const double m_full = r / (1.0 - r) + 0.5; // geometric-series identity
    bound.add(std::abs(ensemble.modes[i].dnu_MHz) * std::max(0.0, m_full - m_trunc));
  }
  result.tail_bound_MHz = bound.value();
  return result;
}

} // namespace spinshift
