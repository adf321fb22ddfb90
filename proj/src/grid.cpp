// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/grid.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "spinshift/errors.hpp"

namespace spinshift {

namespace {

Eigen::Matrix3d basis_matrix(const ScalarField& f) {
  Eigen::Matrix3d b;
  b.col(0) = f.spacing[0];
  b.col(1) = f.spacing[1];
  b.col(2) = f.spacing[2];
  return b;
}

} // namespace

void ScalarField::validate() const {
  if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0)
    throw ValidationError("grid: dims must be positive");
  if (values.size() != size())
    throw ValidationError("grid: value count does not match dims");
  if (voxel_volume() <= 0.0)
    throw ValidationError("grid: spacing vectors must be linearly independent");
}

double ScalarField::voxel_volume() const {
  return std::abs(basis_matrix(*this).determinant());
}

bool ScalarField::contains(const Eigen::Vector3d& r) const {
  const Eigen::Vector3d f = basis_matrix(*this).inverse() * (r - origin);
  for (int d = 0; d < 3; ++d)
    if (f(d) < -1e-9 || f(d) > static_cast<double>(dims[d] - 1) + 1e-9) return false;
  return true;
}

double ScalarField::interpolate(const Eigen::Vector3d& r) const {
  const Eigen::Vector3d f = basis_matrix(*this).inverse() * (r - origin);
  std::array<int, 3> i0{};
  std::array<double, 3> t{};
  for (int d = 0; d < 3; ++d) {
    if (f(d) < -1e-9 || f(d) > static_cast<double>(dims[d] - 1) + 1e-9)
      throw ValidationError("grid: interpolation point outside the grid");
    double fd = std::clamp(f(d), 0.0, static_cast<double>(dims[d] - 1));
    int base = static_cast<int>(std::floor(fd));
    if (base >= dims[d] - 1) base = dims[d] - 2; // top face
    if (dims[d] == 1) {
      i0[d] = 0;
      t[d] = 0.0;
    } else {
      i0[d] = base;
      t[d] = fd - static_cast<double>(base);
    }
  }
  double acc = 0.0;
  for (int dz = 0; dz < 2; ++dz)
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) {
        if (dims[0] == 1 && dx > 0) continue;
        if (dims[1] == 1 && dy > 0) continue;
        if (dims[2] == 1 && dz > 0) continue;
        const double w = (dx ? t[0] : 1.0 - t[0]) * (dy ? t[1] : 1.0 - t[1]) *
                         (dz ? t[2] : 1.0 - t[2]);
        acc += w * at(i0[0] + dx, i0[1] + dy, i0[2] + dz);
      }
  return acc;
}

NucleusSpec nucleus_n14(const Eigen::Vector3d& position) {
  // 14N: gamma/2pi = 3.077 MHz/T, Q_I = 20.44 e*mb.
  return NucleusSpec{"N14", position, 3.077, 20.44, 7, 1.0};
}

NucleusSpec nucleus_c13(const Eigen::Vector3d& position) {
  // 13C: gamma/2pi = 10.7084 MHz/T, no quadrupole moment (I = 1/2).
  return NucleusSpec{"C13", position, 10.7084, 0.0, 6, 0.5};
}

} // namespace spinshift
