// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace spinshift {

// Finite-difference triple for one mode: nu(+dq), nu(-dq), nu(0) in MHz,
// dq in Angstrom.
struct CurvatureSample {
  int mode_index = 0;
  double delta_q = 0.0;
  double nu_plus = 0.0;
  double nu_minus = 0.0;
  double nu_zero = 0.0;
};

// Central second difference [nu(+dq) + nu(-dq) - 2 nu(0)] / dq^2, MHz/A^2.
// Exact for polynomials up to cubic; O(dq^2) beyond.
double second_derivative(const CurvatureSample& sample);

// All samples of one observable. nu(0) must be the same configuration for
// every mode, which is what the relative 1e-9 consistency check enforces.
struct CurvatureSet {
  std::string observable;
  std::vector<CurvatureSample> samples;

  void validate() const;
  // Index of the sample for a mode, or -1.
  int find(int mode_index) const;
  std::vector<double> second_derivatives() const;
  // Common nu(0) of the set (validated consistent).
  double nu_zero() const;
};

} // namespace spinshift
