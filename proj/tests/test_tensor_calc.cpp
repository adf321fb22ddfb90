// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"
#include "spinshift/grid.hpp"
#include "spinshift/tensor_calc.hpp"

using namespace spinshift;

namespace {

ScalarField cubic_grid(int n, double h, const Eigen::Vector3d& center) {
  ScalarField f;
  f.dims = {n, n, n};
  f.spacing = {Eigen::Vector3d(h, 0, 0), Eigen::Vector3d(0, h, 0),
               Eigen::Vector3d(0, 0, h)};
  f.origin = center - Eigen::Vector3d::Constant(h * (n - 1) / 2.0);
  f.values.assign(f.size(), 0.0);
  return f;
}

void fill_gaussian(ScalarField& f, double amplitude, double sigma,
                   const Eigen::Vector3d& center) {
  for (int k = 0; k < f.dims[2]; ++k)
    for (int j = 0; j < f.dims[1]; ++j)
      for (int i = 0; i < f.dims[0]; ++i) {
        const double r2 = (f.position(i, j, k) - center).squaredNorm();
        f.values[f.index(i, j, k)] = amplitude * std::exp(-r2 / (2.0 * sigma * sigma));
      }
}

} // namespace

TEST_CASE("scalar field interpolation") {
  ScalarField f = cubic_grid(9, 0.5, Eigen::Vector3d::Zero());
  // Linear field: trilinear interpolation is exact.
  for (int k = 0; k < 9; ++k)
    for (int j = 0; j < 9; ++j)
      for (int i = 0; i < 9; ++i) {
        const Eigen::Vector3d r = f.position(i, j, k);
        f.values[f.index(i, j, k)] = 1.0 + 2.0 * r.x() - 0.5 * r.y() + 0.25 * r.z();
      }
  CHECK(f.interpolate(Eigen::Vector3d(0.13, -0.4, 0.77)) ==
        doctest::Approx(1.0 + 2.0 * 0.13 + 0.5 * 0.4 + 0.25 * 0.77).epsilon(1e-12));
  CHECK_THROWS_AS(f.interpolate(Eigen::Vector3d(5.0, 0.0, 0.0)), ValidationError);
  CHECK(f.voxel_volume() == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("fermi contact") {
  SUBCASE("zero density") {
    ScalarField f = cubic_grid(9, 0.5, Eigen::Vector3d::Zero());
    CHECK(fermi_contact(f, nucleus_n14(Eigen::Vector3d::Zero()), 1.0) == 0.0);
  }

  SUBCASE("uniform density: position independent, frozen prefactor") {
    ScalarField f = cubic_grid(9, 0.5, Eigen::Vector3d::Zero());
    const double c = 0.05;
    for (auto& v : f.values) v = c;
    const double at_center = fermi_contact(f, nucleus_n14(Eigen::Vector3d::Zero()), 1.0);
    const double off_center =
        fermi_contact(f, nucleus_n14(Eigen::Vector3d(0.4, -0.7, 1.1)), 1.0);
    CHECK(at_center == doctest::Approx(off_center).epsilon(1e-12));
    // mu0 g_e mu_B 1e30 = 23.3351588810155 MHz per (MHz/T * A^-3), frozen.
    CHECK(at_center ==
          doctest::Approx(23.3351588810155 * 3.077 * (2.0 / 3.0) * c).epsilon(1e-12));
  }

  SUBCASE("scaling in amplitude and 1/<S_z>") {
    ScalarField f = cubic_grid(9, 0.5, Eigen::Vector3d::Zero());
    fill_gaussian(f, 0.08, 0.6, Eigen::Vector3d::Zero());
    const auto n = nucleus_c13(Eigen::Vector3d(0.3, 0.0, 0.0));
    const double base = fermi_contact(f, n, 1.0);
    ScalarField f2 = f;
    for (auto& v : f2.values) v *= 3.0;
    CHECK(fermi_contact(f2, n, 1.0) == doctest::Approx(3.0 * base).epsilon(1e-12));
    CHECK(fermi_contact(f, n, 2.0) == doctest::Approx(0.5 * base).epsilon(1e-12));
    CHECK_THROWS_AS(fermi_contact(f, n, 0.0), ValidationError);
  }

  SUBCASE("gaussian density on a 64^3 grid vs analytic") {
    ScalarField f = cubic_grid(64, 0.1, Eigen::Vector3d::Zero());
    const double amp = 0.7, sigma = 0.45;
    fill_gaussian(f, amp, sigma, Eigen::Vector3d::Zero());
    const Eigen::Vector3d probe(0.234, -0.117, 0.391); // off-node
    const auto n = nucleus_c13(probe);
    const double got = fermi_contact(f, n, 1.0);
    const double rho_exact = amp * std::exp(-probe.squaredNorm() / (2.0 * sigma * sigma));
    const double expected = 23.3351588810155 * n.g_MHz_per_T * (2.0 / 3.0) * rho_exact;
    CHECK(std::abs(got - expected) / expected <= 1e-3);
  }

  SUBCASE("nucleus outside the grid") {
    ScalarField f = cubic_grid(9, 0.5, Eigen::Vector3d::Zero());
    CHECK_THROWS_AS(fermi_contact(f, nucleus_n14(Eigen::Vector3d(9.0, 0, 0)), 1.0),
                    ValidationError);
  }
}

TEST_CASE("dipolar hyperfine") {
  SUBCASE("spherically symmetric density vanishes") {
    ScalarField f = cubic_grid(21, 0.2, Eigen::Vector3d::Zero());
    fill_gaussian(f, 0.1, 0.5, Eigen::Vector3d::Zero());
    const Eigen::Matrix3d w =
        dipolar_hyperfine(f, nucleus_n14(Eigen::Vector3d::Zero()), 1.0);
    // Grid symmetry makes the cancellation essentially exact.
    CHECK(w.norm() <= 1e-10);
  }

  SUBCASE("point blob on the z axis") {
    ScalarField f = cubic_grid(17, 0.25, Eigen::Vector3d::Zero());
    const double R = 1.5, w0 = 0.4;
    f.values[f.index(8, 8, 14)] = w0; // node at (0, 0, 1.5)
    const auto nucleus = nucleus_c13(Eigen::Vector3d::Zero());
    const Eigen::Matrix3d got = dipolar_hyperfine(f, nucleus, 1.0);
    const double pref = 23.3351588810155 * nucleus.g_MHz_per_T;
    const double scale =
        pref / (4.0 * constants::pi) * w0 * f.voxel_volume() / (R * R * R);
    CHECK(got(0, 0) == doctest::Approx(-scale).epsilon(1e-12));
    CHECK(got(1, 1) == doctest::Approx(-scale).epsilon(1e-12));
    CHECK(got(2, 2) == doctest::Approx(2.0 * scale).epsilon(1e-12));
    CHECK(std::abs(got(0, 1)) <= 1e-14 * scale);
  }

  SUBCASE("symmetric and traceless") {
    ScalarField f = cubic_grid(15, 0.3, Eigen::Vector3d::Zero());
    fill_gaussian(f, 0.2, 0.6, Eigen::Vector3d(0.35, -0.2, 0.5));
    const Eigen::Matrix3d w =
        dipolar_hyperfine(f, nucleus_n14(Eigen::Vector3d::Zero()), 1.0);
    CHECK((w - w.transpose()).norm() == 0.0);
    CHECK(std::abs(w.trace()) <= 1e-8 * w.norm());
  }

  SUBCASE("full tensor = contact + dipolar") {
    ScalarField f = cubic_grid(15, 0.3, Eigen::Vector3d::Zero());
    fill_gaussian(f, 0.2, 0.6, Eigen::Vector3d(0.35, -0.2, 0.5));
    const auto n = nucleus_n14(Eigen::Vector3d::Zero());
    const Eigen::Matrix3d a = hyperfine_tensor(f, n, 1.0);
    const Eigen::Matrix3d dip = dipolar_hyperfine(f, n, 1.0);
    const double iso = fermi_contact(f, n, 1.0);
    CHECK((a - dip - iso * Eigen::Matrix3d::Identity()).norm() <= 1e-14 * a.norm());
  }
}

TEST_CASE("EFG tensor") {
  SUBCASE("single point charge at 1.5 A: analytic, ratio exactly -2") {
    ScalarField empty = cubic_grid(5, 0.5, Eigen::Vector3d::Zero());
    NucleusSpec target = nucleus_n14(Eigen::Vector3d::Zero());
    NucleusSpec charge = nucleus_c13(Eigen::Vector3d(0.0, 0.0, 1.5));
    charge.Z = 1;
    const Eigen::Matrix3d v = efg_tensor(empty, {target, charge}, target);
    CHECK(v(2, 2) == doctest::Approx(8.53312324647447).epsilon(1e-12));
    CHECK(v(0, 0) == doctest::Approx(-4.26656162323724).epsilon(1e-12));
    CHECK(v(2, 2) / v(0, 0) == -2.0);
    CHECK(v(0, 1) == 0.0);
  }

  SUBCASE("coincident nuclei rejected") {
    ScalarField empty = cubic_grid(5, 0.5, Eigen::Vector3d::Zero());
    NucleusSpec target = nucleus_n14(Eigen::Vector3d::Zero());
    NucleusSpec clone = nucleus_c13(Eigen::Vector3d::Zero());
    CHECK_THROWS_AS(efg_tensor(empty, {target, clone}, target), ValidationError);
  }

  SUBCASE("gaussian cloud matches the point-charge limit; halving h converges >= 3x") {
    // A spherically symmetric cloud seen from outside acts as a point charge,
    // so the residual against the point formula is the quadrature error.
    const double sigma = 0.2, amp = 1.0;
    const Eigen::Vector3d cloud_center(0.0, 0.0, 0.0);
    NucleusSpec target = nucleus_n14(Eigen::Vector3d(0.0, 0.0, 3.0));
    target.Z = 7;

    const double q_exact =
        amp * std::pow(2.0 * constants::pi * sigma * sigma, 1.5);
    auto efg_error = [&](int n, double h) {
      ScalarField f = cubic_grid(n, h, cloud_center);
      fill_gaussian(f, amp, sigma, cloud_center);
      const Eigen::Matrix3d v = efg_tensor(f, {target}, target);
      // Electron term sign: -rho; analytic counterpart for charge q at
      // distance R below the nucleus.
      const double R = 3.0;
      Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
      const double k = units::coulomb_V_A * (-q_exact) / (R * R * R);
      expected(0, 0) = -k;
      expected(1, 1) = -k;
      expected(2, 2) = 2.0 * k;
      return (v - expected).norm() / expected.norm();
    };

    const double coarse = efg_error(9, 0.4);   // +/- 1.6 A box
    const double fine = efg_error(17, 0.2);    // same box, halved spacing
    CHECK(fine * 3.0 <= coarse);
    CHECK(coarse < 0.05);
  }
}

TEST_CASE("q matrix") {
  const NucleusSpec n14 = nucleus_n14(Eigen::Vector3d::Zero());

  SUBCASE("axial case, frozen unit chain") {
    const Eigen::Matrix3d q = q_matrix(Eigen::Vector3d(-1.0, -1.0, 2.0), n14);
    // e Q_I / (4 I (2I-1) h) for Q_I = 20.44 e*mb: 0.0123559250270539 MHz per V/A^2.
    CHECK(q(0, 0) == doctest::Approx(-0.0247118500541079).epsilon(1e-12));
    CHECK(q(1, 1) == doctest::Approx(-0.0247118500541079).epsilon(1e-12));
    CHECK(q(2, 2) == doctest::Approx(0.0494237001082157).epsilon(1e-12));
    CHECK(q(0, 0) + q(1, 1) + q(2, 2) == 0.0);
  }

  SUBCASE("bitwise traceless for arbitrary inputs") {
    const Eigen::Vector3d cases[] = {{0.123, -4.56, 7.89},
                                     {1e-7, 2e3, -3.3e2},
                                     {-0.577, 0.333, 0.244}};
    for (const auto& pas : cases) {
      const Eigen::Matrix3d q = q_matrix(pas, n14);
      CHECK(q(0, 0) + q(1, 1) + q(2, 2) == 0.0);
    }
  }

  SUBCASE("splitting relation Q = 3/2 Q_zz = pref * 3 V3") {
    const Eigen::Vector3d pas(-0.4, -1.1, 1.5);
    const Eigen::Matrix3d q = q_matrix(pas, n14);
    const double pref = 0.0123559250270539;
    CHECK(1.5 * q(2, 2) == doctest::Approx(pref * 3.0 * pas(2)).epsilon(1e-12));
  }

  SUBCASE("requires I >= 1") {
    CHECK_THROWS_AS(q_matrix(Eigen::Vector3d(-1, -1, 2),
                             nucleus_c13(Eigen::Vector3d::Zero())),
                    ValidationError);
  }

  SUBCASE("PAS ordering |V1| <= |V2| <= |V3|") {
    Eigen::Matrix3d v = Eigen::Vector3d(2.0, -0.5, -1.5).asDiagonal();
    const Eigen::Vector3d pas = efg_pas_eigenvalues(v);
    CHECK(pas(0) == doctest::Approx(-0.5));
    CHECK(pas(1) == doctest::Approx(-1.5));
    CHECK(pas(2) == doctest::Approx(2.0));
  }
}

TEST_CASE("direct dipolar coupling") {
  SUBCASE("zero second density gives zero") {
    ScalarField a = cubic_grid(9, 0.3, Eigen::Vector3d::Zero());
    ScalarField b = a;
    fill_gaussian(a, 0.1, 0.4, Eigen::Vector3d::Zero());
    CHECK(dipolar_coupling_direct(a, b, 1).norm() == 0.0);
  }

  SUBCASE("two point blobs: analytic two-point formula") {
    ScalarField a = cubic_grid(11, 0.3, Eigen::Vector3d::Zero());
    ScalarField b = a;
    const double R = 0.3 * 8; // eight voxels apart on z
    a.values[a.index(5, 5, 1)] = 1.0;
    b.values[b.index(5, 5, 9)] = 1.0;
    const Eigen::Matrix3d got = dipolar_coupling_direct(a, b, 1);
    // Frozen prefactor mu0 g_e^2 mu_B^2 / (4 pi h): 52041.0159928359 MHz A^3.
    const double dv = a.voxel_volume();
    const double scale = 52041.0159928359 * dv * dv / (R * R * R);
    CHECK(got(0, 0) == doctest::Approx(scale).epsilon(1e-12));
    CHECK(got(1, 1) == doctest::Approx(scale).epsilon(1e-12));
    CHECK(got(2, 2) == doctest::Approx(-2.0 * scale).epsilon(1e-12));

    // chi flips the sign.
    const Eigen::Matrix3d flipped = dipolar_coupling_direct(a, b, -1);
    CHECK(flipped(2, 2) == doctest::Approx(2.0 * scale).epsilon(1e-12));
  }

  SUBCASE("swap symmetry") {
    ScalarField a = cubic_grid(9, 0.3, Eigen::Vector3d::Zero());
    ScalarField b = a;
    fill_gaussian(a, 0.2, 0.5, Eigen::Vector3d(0.3, 0.0, -0.2));
    fill_gaussian(b, 0.15, 0.4, Eigen::Vector3d(-0.4, 0.2, 0.6));
    const Eigen::Matrix3d ab = dipolar_coupling_direct(a, b, 1);
    const Eigen::Matrix3d ba = dipolar_coupling_direct(b, a, 1);
    CHECK((ab - ba).norm() <= 1e-12 * ab.norm());
  }

  SUBCASE("grid mismatch and pair budget") {
    ScalarField a = cubic_grid(9, 0.3, Eigen::Vector3d::Zero());
    ScalarField c = cubic_grid(7, 0.3, Eigen::Vector3d::Zero());
    CHECK_THROWS_AS(dipolar_coupling_direct(a, c, 1), ValidationError);
    ScalarField b = a;
    CHECK_THROWS_AS(dipolar_coupling_direct(a, b, 1, {}, /*max_pairs=*/10),
                    NumericError);
  }
}
