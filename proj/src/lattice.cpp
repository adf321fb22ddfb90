// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "spinshift/errors.hpp"

namespace spinshift {

void LatticeTable::validate() const {
  if (temperature.size() != lattice_parameter.size())
    throw ValidationError("lattice table: column length mismatch");
  if (temperature.size() < 2)
    throw ValidationError("lattice table: need at least two rows");
  for (std::size_t i = 0; i < temperature.size(); ++i) {
    if (!(lattice_parameter[i] > 0.0))
      throw ValidationError("lattice table: a must be positive");
    if (i > 0 && !(temperature[i] > temperature[i - 1]))
      throw ValidationError("lattice table: T must be strictly increasing");
  }
}

namespace {

// Fritsch-Carlson edge slope with the usual monotonicity clamps.
double edge_slope(double h0, double h1, double d0, double d1) {
  double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (m * d0 <= 0.0)
    m = 0.0;
  else if (d0 * d1 <= 0.0 && std::abs(m) > 3.0 * std::abs(d0))
    m = 3.0 * d0;
  return m;
}

} // namespace

LatticeInterpolant::LatticeInterpolant(const LatticeTable& table) {
  table.validate();
  t_ = table.temperature;
  y_ = table.lattice_parameter;
  const std::size_t n = t_.size();
  slope_.assign(n, 0.0);

  if (n == 2) {
    const double d = (y_[1] - y_[0]) / (t_[1] - t_[0]);
    slope_[0] = slope_[1] = d;
    return;
  }

  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = t_[k + 1] - t_[k];
    d[k] = (y_[k + 1] - y_[k]) / h[k];
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (d[k - 1] * d[k] <= 0.0) {
      slope_[k] = 0.0;
    } else {
      const double w1 = 2.0 * h[k] + h[k - 1];
      const double w2 = h[k] + 2.0 * h[k - 1];
      slope_[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
    }
  }
  slope_[0] = edge_slope(h[0], h[1], d[0], d[1]);
  slope_[n - 1] = edge_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
}

int LatticeInterpolant::segment(double T, bool allow_extrapolation) const {
  if (T < t_.front() || T > t_.back()) {
    if (!allow_extrapolation)
      throw ValidationError("lattice table: T = " + std::to_string(T) +
                            " K outside table range [" + std::to_string(t_.front()) +
                            ", " + std::to_string(t_.back()) + "]");
    return T < t_.front() ? 0 : static_cast<int>(t_.size()) - 2;
  }
  auto it = std::upper_bound(t_.begin(), t_.end(), T);
  int k = static_cast<int>(it - t_.begin()) - 1;
  k = std::clamp(k, 0, static_cast<int>(t_.size()) - 2);
  return k;
}

double LatticeInterpolant::a(double T, bool allow_extrapolation) const {
  const int k = segment(T, allow_extrapolation);
  const double h = t_[k + 1] - t_[k];
  const double s = (T - t_[k]) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * y_[k] + h10 * h * slope_[k] + h01 * y_[k + 1] + h11 * h * slope_[k + 1];
}

double LatticeInterpolant::dadT(double T, bool allow_extrapolation) const {
  const int k = segment(T, allow_extrapolation);
  const double h = t_[k + 1] - t_[k];
  const double s = (T - t_[k]) / h;
  const double s2 = s * s;
  const double dh00 = (6.0 * s2 - 6.0 * s) / h;
  const double dh10 = (3.0 * s2 - 4.0 * s + 1.0) / h;
  const double dh01 = (-6.0 * s2 + 6.0 * s) / h;
  const double dh11 = (3.0 * s2 - 2.0 * s) / h;
  return dh00 * y_[k] + dh10 * h * slope_[k] + dh01 * y_[k + 1] + dh11 * h * slope_[k + 1];
}

double LatticeInterpolant::alpha(double T, bool allow_extrapolation) const {
  return dadT(T, allow_extrapolation) / a(T, allow_extrapolation);
}

NuOfAFit::NuOfAFit(const std::vector<std::pair<double, double>>& samples, int degree) {
  if (degree < 1 || degree > 2)
    throw ValidationError("nu(a) fit: degree must be 1 or 2");
  if (samples.size() < static_cast<std::size_t>(degree + 1))
    throw ValidationError("nu(a) fit: need at least " + std::to_string(degree + 1) +
                          " samples");
  const int n = static_cast<int>(samples.size());
  Eigen::MatrixXd vand(n, degree + 1);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int j = 0; j <= degree; ++j) {
      vand(i, j) = p;
      p *= samples[static_cast<std::size_t>(i)].first;
    }
    rhs(i) = samples[static_cast<std::size_t>(i)].second;
  }
  Eigen::VectorXd c = vand.colPivHouseholderQr().solve(rhs);
  coeff_.assign(c.data(), c.data() + c.size());
}

double NuOfAFit::nu(double a) const {
  double acc = 0.0;
  for (std::size_t j = coeff_.size(); j-- > 0;) acc = acc * a + coeff_[j];
  return acc;
}

double NuOfAFit::dnu_da(double a) const {
  double acc = 0.0;
  for (std::size_t j = coeff_.size(); j-- > 1;)
    acc = acc * a + static_cast<double>(j) * coeff_[j];
  return acc;
}

} // namespace spinshift
