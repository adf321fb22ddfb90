// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

namespace spinshift {

// Real-space density samples on a (possibly non-orthogonal) regular grid.
// Node (i, j, k) sits at origin + i e1 + j e2 + k e3; values are stored
// x-fastest. Units: spin density in mu_B/A^3, charge density in e/A^3.
struct ScalarField {
  Eigen::Vector3d origin = Eigen::Vector3d::Zero();
  std::array<Eigen::Vector3d, 3> spacing = {Eigen::Vector3d::UnitX(),
                                            Eigen::Vector3d::UnitY(),
                                            Eigen::Vector3d::UnitZ()};
  std::array<int, 3> dims = {0, 0, 0};
  std::vector<double> values;

  void validate() const;
  std::size_t size() const {
    return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) *
           static_cast<std::size_t>(dims[2]);
  }
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(dims[0]) *
               (static_cast<std::size_t>(j) +
                static_cast<std::size_t>(dims[1]) * static_cast<std::size_t>(k));
  }
  double at(int i, int j, int k) const { return values[index(i, j, k)]; }
  Eigen::Vector3d position(int i, int j, int k) const {
    return origin + static_cast<double>(i) * spacing[0] +
           static_cast<double>(j) * spacing[1] + static_cast<double>(k) * spacing[2];
  }
  double voxel_volume() const;
  bool contains(const Eigen::Vector3d& r) const;
  // Trilinear interpolation in fractional coordinates; throws ValidationError
  // outside the grid.
  double interpolate(const Eigen::Vector3d& r) const;
};

// One nucleus: position (A), g-factor in the g_I mu_I / h sense (MHz/T, the
// gyromagnetic ratio gamma/2pi), quadrupole moment in e*mb, charge, spin.
struct NucleusSpec {
  std::string name;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double g_MHz_per_T = 0.0;
  double Q_emb = 0.0;
  int Z = 0;
  double I = 0.0;
};

// Known-isotope defaults used throughout the NV workflow.
NucleusSpec nucleus_n14(const Eigen::Vector3d& position);
NucleusSpec nucleus_c13(const Eigen::Vector3d& position);

} // namespace spinshift
