// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/tensor_calc.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"
#include "spinshift/reduction.hpp"

namespace spinshift {

namespace {

// mu0 g_e mu_B * (gamma in Hz/T) * rho[m^-3] gives Hz; the 1e30/1e6 folds the
// A^-3 density and the MHz output into one factor.
double hyperfine_prefactor_MHz(const NucleusSpec& nucleus, double Sz_expect) {
  if (Sz_expect == 0.0)
    throw ValidationError("hyperfine: <S_z> must be nonzero");
  return constants::mu_0 * constants::g_e * constants::mu_B * nucleus.g_MHz_per_T *
         units::per_A3_to_per_m3 / Sz_expect;
}

// (3 r_i r_j - delta_ij r^2)/r^5 packed as xx, yy, zz, xy, xz, yz.
void traceless_kernel(const Eigen::Vector3d& r, std::array<double, 6>& k) {
  const double r2 = r.squaredNorm();
  const double r5 = r2 * r2 * std::sqrt(r2);
  const double inv = 1.0 / r5;
  k[0] = (3.0 * r.x() * r.x() - r2) * inv;
  k[1] = (3.0 * r.y() * r.y() - r2) * inv;
  k[2] = (3.0 * r.z() * r.z() - r2) * inv;
  k[3] = 3.0 * r.x() * r.y() * inv;
  k[4] = 3.0 * r.x() * r.z() * inv;
  k[5] = 3.0 * r.y() * r.z() * inv;
}

Eigen::Matrix3d unpack_symmetric(const std::array<double, 6>& c) {
  Eigen::Matrix3d m;
  m << c[0], c[3], c[4], c[3], c[1], c[5], c[4], c[5], c[2];
  return m;
}

// Voxel-sum of rho(x) K(x - center) dV with the exclusion sphere.
Eigen::Matrix3d kernel_quadrature(const ScalarField& field, const Eigen::Vector3d& center,
                                  double r_c, int threads) {
  const double dv = field.voxel_volume();
  const double rc2 = r_c * r_c;
  const auto [nx, ny, nz] = field.dims;
  const std::size_t n = field.size();
  auto sums = chunked_sum_array<6>(
      n,
      [&](std::size_t flat, std::array<double, 6>& v) {
        const int i = static_cast<int>(flat % static_cast<std::size_t>(nx));
        const int j = static_cast<int>((flat / static_cast<std::size_t>(nx)) %
                                       static_cast<std::size_t>(ny));
        const int k = static_cast<int>(flat / (static_cast<std::size_t>(nx) *
                                               static_cast<std::size_t>(ny)));
        (void)nz;
        const Eigen::Vector3d r = field.position(i, j, k) - center;
        if (r.squaredNorm() < rc2) {
          v.fill(0.0);
          return;
        }
        std::array<double, 6> kern;
        traceless_kernel(r, kern);
        const double rho = field.values[flat];
        for (int c = 0; c < 6; ++c) v[static_cast<std::size_t>(c)] = rho * kern[static_cast<std::size_t>(c)] * dv;
      },
      threads, 4096);
  return unpack_symmetric(sums);
}

} // namespace

double fermi_contact(const ScalarField& rho_s, const NucleusSpec& nucleus,
                     double Sz_expect) {
  rho_s.validate();
  if (!rho_s.contains(nucleus.position))
    throw ValidationError("fermi_contact: nucleus '" + nucleus.name +
                          "' lies outside the density grid");
  const double rho_at_nucleus = rho_s.interpolate(nucleus.position);
  return hyperfine_prefactor_MHz(nucleus, Sz_expect) * (2.0 / 3.0) * rho_at_nucleus;
}

Eigen::Matrix3d dipolar_hyperfine(const ScalarField& rho_s, const NucleusSpec& nucleus,
                                  double Sz_expect, const QuadratureOptions& quad) {
  rho_s.validate();
  if (!rho_s.contains(nucleus.position))
    throw ValidationError("dipolar_hyperfine: nucleus '" + nucleus.name +
                          "' lies outside the density grid");
  const Eigen::Matrix3d integral =
      kernel_quadrature(rho_s, nucleus.position, quad.r_c, quad.threads);
  return hyperfine_prefactor_MHz(nucleus, Sz_expect) / (4.0 * constants::pi) * integral;
}

Eigen::Matrix3d hyperfine_tensor(const ScalarField& rho_s, const NucleusSpec& nucleus,
                                 double Sz_expect, const QuadratureOptions& quad) {
  const double iso = fermi_contact(rho_s, nucleus, Sz_expect);
  Eigen::Matrix3d a = dipolar_hyperfine(rho_s, nucleus, Sz_expect, quad);
  a.diagonal().array() += iso;
  return a;
}

Eigen::Matrix3d efg_tensor(const ScalarField& rho, const std::vector<NucleusSpec>& nuclei,
                           const NucleusSpec& target, const QuadratureOptions& quad) {
  rho.validate();
  Eigen::Matrix3d electron =
      -kernel_quadrature(rho, target.position, quad.r_c, quad.threads);

  Eigen::Matrix3d nuclear = Eigen::Matrix3d::Zero();
  for (const auto& other : nuclei) {
    const Eigen::Vector3d r = other.position - target.position;
    if (r.norm() < 1e-9) {
      if (other.name == target.name) continue; // the target itself
      throw ValidationError("efg_tensor: nucleus '" + other.name +
                            "' coincides with target '" + target.name + "'");
    }
    std::array<double, 6> kern;
    traceless_kernel(r, kern);
    nuclear += static_cast<double>(other.Z) * unpack_symmetric(kern);
  }
  return units::coulomb_V_A * (electron + nuclear);
}

Eigen::Vector3d efg_pas_eigenvalues(const Eigen::Matrix3d& efg) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(efg);
  if (solver.info() != Eigen::Success)
    throw NumericError("efg_pas_eigenvalues: eigensolver failed");
  Eigen::Vector3d v = solver.eigenvalues();
  std::array<double, 3> s{v(0), v(1), v(2)};
  std::sort(s.begin(), s.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  return Eigen::Vector3d(s[0], s[1], s[2]);
}

Eigen::Matrix3d q_matrix(const Eigen::Vector3d& pas, const NucleusSpec& nucleus) {
  const double denom = nucleus.I * (2.0 * nucleus.I - 1.0);
  if (!(nucleus.I >= 1.0) || denom == 0.0)
    throw ValidationError("q_matrix: nucleus '" + nucleus.name +
                          "' has no quadrupole moment (I < 1)");
  // e Q_I V / (4 I (2I-1) h) in MHz; Q_I in e*mb, V in V/A^2.
  const double pref = constants::elementary_charge / constants::planck_J_s *
                      units::millibarn_to_m2 / (units::angstrom_to_m * units::angstrom_to_m) *
                      units::Hz_to_MHz * nucleus.Q_emb / (4.0 * denom);
  const double q00 = pref * (pas(0) - pas(1) - pas(2));
  const double q11 = pref * (-pas(0) + pas(1) - pas(2));
  // Algebraically 2 V3 * pref; accumulated this way the trace is bitwise zero.
  const double q22 = -(q00 + q11);
  Eigen::Matrix3d q = Eigen::Matrix3d::Zero();
  q(0, 0) = q00;
  q(1, 1) = q11;
  q(2, 2) = q22;
  return q;
}

Eigen::Matrix3d dipolar_coupling_direct(const ScalarField& rho_a, const ScalarField& rho_b,
                                        int chi, const QuadratureOptions& quad,
                                        std::uint64_t max_pairs) {
  rho_a.validate();
  rho_b.validate();
  if (chi != 1 && chi != -1)
    throw ValidationError("dipolar_coupling_direct: chi must be +1 or -1");
  if (rho_a.dims != rho_b.dims || (rho_a.origin - rho_b.origin).norm() > 1e-12 ||
      (rho_a.spacing[0] - rho_b.spacing[0]).norm() > 1e-12 ||
      (rho_a.spacing[1] - rho_b.spacing[1]).norm() > 1e-12 ||
      (rho_a.spacing[2] - rho_b.spacing[2]).norm() > 1e-12)
    throw ValidationError("dipolar_coupling_direct: fields must share one grid");

  const std::uint64_t n = rho_a.size();
  if (n > max_pairs / std::max<std::uint64_t>(n, 1))
    throw NumericError("dipolar_coupling_direct: voxel pair count exceeds " +
                       std::to_string(max_pairs));

  // Precompute node positions once; the pair loop is the hot path.
  const auto [nx, ny, nz] = rho_a.dims;
  (void)nz;
  std::vector<Eigen::Vector3d> pos(n);
  for (std::size_t flat = 0; flat < n; ++flat) {
    const int i = static_cast<int>(flat % static_cast<std::size_t>(nx));
    const int j = static_cast<int>((flat / static_cast<std::size_t>(nx)) %
                                   static_cast<std::size_t>(ny));
    const int k = static_cast<int>(flat / (static_cast<std::size_t>(nx) *
                                           static_cast<std::size_t>(ny)));
    pos[flat] = rho_a.position(i, j, k);
  }

  const double dv = rho_a.voxel_volume();
  const double rc2 = quad.r_c * quad.r_c;
  auto sums = chunked_sum_array<6>(
      static_cast<std::size_t>(n),
      [&](std::size_t i1, std::array<double, 6>& v) {
        v.fill(0.0);
        const double w1 = rho_a.values[i1];
        if (w1 == 0.0) return;
        std::array<KahanSum, 6> acc{};
        std::array<double, 6> kern;
        for (std::size_t i2 = 0; i2 < n; ++i2) {
          const double w2 = rho_b.values[i2];
          if (w2 == 0.0) continue;
          const Eigen::Vector3d r = pos[i1] - pos[i2];
          if (r.squaredNorm() < rc2) continue;
          traceless_kernel(r, kern);
          // kernel here is (r^2 delta - 3 r r)/r^5 = -traceless_kernel
          for (int c = 0; c < 6; ++c)
            acc[static_cast<std::size_t>(c)].add(-w1 * w2 * kern[static_cast<std::size_t>(c)]);
        }
        for (int c = 0; c < 6; ++c) v[static_cast<std::size_t>(c)] = acc[static_cast<std::size_t>(c)].value();
      },
      quad.threads, 16);

  const double pref = static_cast<double>(chi) * constants::mu_0 / (4.0 * constants::pi) *
                      (constants::g_e * constants::mu_B) * (constants::g_e * constants::mu_B) /
                      constants::planck_J_s * units::per_A3_to_per_m3 * units::Hz_to_MHz;
  return pref * dv * dv * unpack_symmetric(sums);
}

} // namespace spinshift
