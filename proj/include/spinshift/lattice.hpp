// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

namespace spinshift {

// Experimental (T, a) table; T in K strictly increasing, a in Angstrom.
struct LatticeTable {
  std::vector<double> temperature;
  std::vector<double> lattice_parameter;

  void validate() const;
};

// Monotone cubic (Fritsch-Carlson) interpolant of a(T). alpha(T) is derived
// from the interpolant's own derivative so the table and the expansion
// coefficient can never disagree.
class LatticeInterpolant {
public:
  explicit LatticeInterpolant(const LatticeTable& table);

  double a(double T, bool allow_extrapolation = false) const;
  double dadT(double T, bool allow_extrapolation = false) const;
  double alpha(double T, bool allow_extrapolation = false) const;

  double t_min() const { return t_.front(); }
  double t_max() const { return t_.back(); }
  const std::vector<double>& knots() const { return t_; }

private:
  int segment(double T, bool allow_extrapolation) const;

  std::vector<double> t_;
  std::vector<double> y_;
  std::vector<double> slope_; // endpoint derivatives per knot
};

// Least-squares polynomial nu(a) (MHz vs Angstrom); degree 1 by default,
// degree 2 supported.
class NuOfAFit {
public:
  NuOfAFit(const std::vector<std::pair<double, double>>& samples, int degree = 1);

  double nu(double a) const;
  double dnu_da(double a) const;
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeff_; } // ascending powers

private:
  std::vector<double> coeff_;
};

} // namespace spinshift
