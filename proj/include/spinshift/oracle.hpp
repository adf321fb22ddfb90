// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace spinshift {

// Brute-force ground truth for the thermal average: every phonon occupation
// configuration {n_i <= n_max_i} is enumerated with its Boltzmann weight.
// Exponential in the mode count by construction; exists to check the closed
// form, not to be fast.
struct OracleMode {
  double omega;   // rad/s
  double dnu_MHz; // Delta_omega / 2 pi in MHz
};

struct OccupationEnsemble {
  std::vector<OracleMode> modes;
  std::vector<int> n_max; // per-mode cutoff, same length as modes
  double temperature_K = 0.0;
};

struct OracleResult {
  double average_MHz = 0.0;
  double tail_bound_MHz = 0.0; // upper bound on the truncation error
  std::uint64_t configurations = 0;
  std::vector<double> per_mode_tail_weight; // e^{-x(n_max+1)}/(1-e^{-x})
};

// Smallest cutoff with per-mode Boltzmann tail weight < 1e-14, capped at 200.
int default_n_max(double omega_rad_s, double temperature_K);

inline constexpr std::uint64_t oracle_max_configurations = 10'000'000;
inline constexpr int oracle_max_modes = 6;

OracleResult oracle_average(const OccupationEnsemble& ensemble, double nu0_MHz);

} // namespace spinshift
