// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/curvature.hpp"

#include <cmath>
#include <set>
#include <string>

#include "spinshift/errors.hpp"

namespace spinshift {

double second_derivative(const CurvatureSample& sample) {
  if (!(sample.delta_q > 0.0))
    throw ValidationError("second_derivative: delta_q must be positive (mode " +
                          std::to_string(sample.mode_index) + ")");
  return (sample.nu_plus + sample.nu_minus - 2.0 * sample.nu_zero) /
         (sample.delta_q * sample.delta_q);
}

void CurvatureSet::validate() const {
  if (samples.empty())
    throw ValidationError("curvature set '" + observable + "': no samples");
  std::set<int> seen;
  const double ref = samples.front().nu_zero;
  const double scale = std::max(1.0, std::abs(ref));
  for (const auto& s : samples) {
    if (!(s.delta_q > 0.0))
      throw ValidationError("curvature set '" + observable + "': delta_q <= 0 for mode " +
                            std::to_string(s.mode_index));
    if (!seen.insert(s.mode_index).second)
      throw ValidationError("curvature set '" + observable + "': duplicate mode " +
                            std::to_string(s.mode_index));
    if (std::abs(s.nu_zero - ref) > 1e-9 * scale)
      throw ValidationError("curvature set '" + observable +
                            "': inconsistent nu(0) across samples (mode " +
                            std::to_string(s.mode_index) + ")");
  }
}

int CurvatureSet::find(int mode_index) const {
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (samples[i].mode_index == mode_index) return static_cast<int>(i);
  return -1;
}

std::vector<double> CurvatureSet::second_derivatives() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(second_derivative(s));
  return out;
}

double CurvatureSet::nu_zero() const {
  if (samples.empty())
    throw ValidationError("curvature set '" + observable + "': no samples");
  return samples.front().nu_zero;
}

} // namespace spinshift
