// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <vector>

#include "spinshift/grid.hpp"

namespace spinshift {

// Quadrature controls shared by the kernel integrals. Singular kernels get an
// on-site exclusion sphere; the PAW-style treatment of the nuclear region is
// outside what a bare density grid can provide, so r_c is an accuracy knob,
// not a converged physical cutoff.
struct QuadratureOptions {
  double r_c = 0.05; // Angstrom, on-site exclusion radius
  int threads = 1;
};

// Isotropic Fermi-contact hyperfine constant,
//   (mu0 g_e g_I mu_B mu_I / <S_z>) (2/3) rho_s(R_I)  [MHz],
// with rho_s interpolated trilinearly at the nucleus.
double fermi_contact(const ScalarField& rho_s, const NucleusSpec& nucleus,
                     double Sz_expect);

// Anisotropic dipolar hyperfine part: voxel-sum of
//   (1/4pi) rho_s(r + R_I) (3 r_i r_j - delta_ij r^2) / r^5,
// symmetric and traceless by the kernel identity. MHz.
Eigen::Matrix3d dipolar_hyperfine(const ScalarField& rho_s, const NucleusSpec& nucleus,
                                  double Sz_expect, const QuadratureOptions& quad = {});

// Full hyperfine tensor: contact on the diagonal plus the dipolar part.
Eigen::Matrix3d hyperfine_tensor(const ScalarField& rho_s, const NucleusSpec& nucleus,
                                 double Sz_expect, const QuadratureOptions& quad = {});

// Electric field gradient at the target nucleus in V/A^2: electron charge
// density by quadrature (negative sign, exclusion sphere) plus the exact
// point-charge lattice sum over the other nuclei.
Eigen::Matrix3d efg_tensor(const ScalarField& rho, const std::vector<NucleusSpec>& nuclei,
                           const NucleusSpec& target, const QuadratureOptions& quad = {});

// EFG principal values ordered |V1| <= |V2| <= |V3| (NQR convention).
Eigen::Vector3d efg_pas_eigenvalues(const Eigen::Matrix3d& efg);

// Quadrupole coupling tensor from the PAS eigenvalues:
//   Q = [e Q_I / (4 I (2I-1))] diag(V1-V2-V3, -V1+V2-V3, 2 V3)  [MHz],
// built so the one-order trace sum is bitwise zero. Requires I >= 1.
Eigen::Matrix3d q_matrix(const Eigen::Vector3d& pas_values_V_per_A2,
                         const NucleusSpec& nucleus);

// Direct (density-density) term of the electron spin-spin dipolar tensor:
//   chi (mu0 g_e^2 mu_B^2 / 4pi) sum_{r1,r2} rho_a(r1) rho_b(r2)
//        (r^2 delta_ij - 3 r_i r_j)/r^5,  r = r1 - r2, |r| >= r_c.  [MHz]
// O(N^2) in voxels; refuses more than `max_pairs` voxel pairs.
Eigen::Matrix3d dipolar_coupling_direct(const ScalarField& rho_a, const ScalarField& rho_b,
                                        int chi, const QuadratureOptions& quad = {},
                                        std::uint64_t max_pairs = 10'000'000);

} // namespace spinshift
