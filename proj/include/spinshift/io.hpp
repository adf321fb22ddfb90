// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "spinshift/curvature.hpp"
#include "spinshift/grid.hpp"
#include "spinshift/lattice.hpp"
#include "spinshift/oracle.hpp"
#include "spinshift/phonon.hpp"
#include "spinshift/shift.hpp"
#include "spinshift/spectral.hpp"
#include "spinshift/spin.hpp"

namespace spinshift::io {

// All data files are line-oriented text with a `#spinshift-<kind> v1` header;
// later '#' lines are comments. Writers emit 17 significant digits so a
// write/parse round trip is bit-exact. CSV outputs are the presentation
// format: 12 significant digits in fixed scientific layout, byte-stable.

std::string format_float(double value);       // CSV layout, 12 significant digits
std::string format_float_exact(double value); // data files, round-trip exact

// --- phonon spectra: rows `index freq_THz mass_amu` -------------------------
PhononSpectrum read_phonon_file(const std::filesystem::path& path);
void write_phonon_file(const std::filesystem::path& path, const PhononSpectrum& spectrum);

// Optional companion displacement file: `mode <index> <n_atoms>` blocks.
void read_displacement_file(const std::filesystem::path& path, PhononSpectrum& spectrum);
void write_displacement_file(const std::filesystem::path& path,
                             const PhononSpectrum& spectrum);

// --- curvature samples: `mode delta_q nu_plus nu_minus nu_zero` -------------
CurvatureSet read_curvature_file(const std::filesystem::path& path,
                                 const std::string& observable);
void write_curvature_file(const std::filesystem::path& path, const CurvatureSet& set);

// --- lattice table / nu(a) samples ------------------------------------------
LatticeTable read_lattice_file(const std::filesystem::path& path);
void write_lattice_file(const std::filesystem::path& path, const LatticeTable& table);

std::vector<std::pair<double, double>> read_nu_of_a_file(const std::filesystem::path& path);
void write_nu_of_a_file(const std::filesystem::path& path,
                        const std::vector<std::pair<double, double>>& samples);

// --- interaction tensors ------------------------------------------------------
InteractionTensor read_tensor_file(const std::filesystem::path& path);
void write_tensor_file(const std::filesystem::path& path, const InteractionTensor& tensor);

// Spin system: `S`, optional `axis`, `D <tensor file>`, one `nucleus I A-file
// [Q-file|-]` line per nucleus. Tensor paths resolve relative to the file.
SpinSystem read_system_file(const std::filesystem::path& path);

// --- density grids -----------------------------------------------------------
ScalarField read_grid_file(const std::filesystem::path& path);
void write_grid_file(const std::filesystem::path& path, const ScalarField& field);

// Cube-style volumetric import (Bohr or Angstrom, z-fastest value order).
ScalarField read_cube_file(const std::filesystem::path& path,
                           std::vector<NucleusSpec>* atoms = nullptr);

// --- nucleus list: `name x y z Z I g_MHz_per_T Q_emb` -----------------------
std::vector<NucleusSpec> read_nuclei_file(const std::filesystem::path& path);
void write_nuclei_file(const std::filesystem::path& path,
                       const std::vector<NucleusSpec>& nuclei);

// --- oracle input -------------------------------------------------------------
struct OracleInput {
  double temperature_K = 0.0;
  double nu0_MHz = 0.0;
  int n_max = 0; // 0 = auto
  std::vector<std::pair<double, double>> modes; // (freq_THz, dnu_MHz)
};
OracleInput read_oracle_file(const std::filesystem::path& path);
void write_oracle_file(const std::filesystem::path& path, const OracleInput& input);

// --- 13C site tensors: `site <id>` + three rows -------------------------------
struct SiteTensor {
  std::string id;
  Eigen::Matrix3d tensor = Eigen::Matrix3d::Zero();
};
std::vector<SiteTensor> read_sites_file(const std::filesystem::path& path);
void write_sites_file(const std::filesystem::path& path,
                      const std::vector<SiteTensor>& sites);

// --- CSV emission --------------------------------------------------------------
void write_shift_curve_csv(const std::filesystem::path& path, const ShiftCurve& curve);
void write_spectral_csv(const std::filesystem::path& path, const SpectralDensity& density);
void write_overlay_csv(const std::filesystem::path& path, const OverlayTable& table);
void write_levels_csv(const std::filesystem::path& path, const LevelSet& levels);
void write_ratio_csv(const std::filesystem::path& path,
                     const std::vector<double>& temperatures,
                     const std::vector<double>& ratios, const std::string& label);
void write_groups_csv(const std::filesystem::path& path,
                      const std::vector<NucleusGroup>& groups,
                      const std::vector<std::string>& site_names);

} // namespace spinshift::io
