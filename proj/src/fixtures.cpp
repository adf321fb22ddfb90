// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/fixtures.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>

#include "spinshift/constants.hpp"
#include "spinshift/io.hpp"

namespace spinshift::fixtures {

namespace fs = std::filesystem;

namespace {

PhononSpectrum make_spectrum() {
  PhononSpectrum spectrum;
  spectrum.label = "modes";
  const double freqs_THz[] = {5.0, 12.0, 25.0, 39.0, 0.0};
  const double masses[] = {12.0, 12.5, 13.0, 12.2, 12.0};
  for (int i = 0; i < 5; ++i)
    spectrum.modes.push_back(
        {i + 1, freqs_THz[i] * units::THz_to_rad_per_s, masses[i], std::nullopt});
  // The last row is a zero-frequency translational mode: it exercises the
  // admission filter and the CLI's excluded-mode report.
  return spectrum;
}

CurvatureSet make_curvatures(const std::string& observable, double nu_zero,
                             const double (&d2nu)[4]) {
  CurvatureSet set;
  set.observable = observable;
  const double dq = 0.03;
  const double cubic = 40.0; // odd term, cancels in the central difference
  for (int i = 0; i < 4; ++i) {
    CurvatureSample s;
    s.mode_index = i + 1;
    s.delta_q = dq;
    const double quad = 0.5 * d2nu[i] * dq * dq;
    s.nu_plus = nu_zero + quad + cubic * dq * dq * dq;
    s.nu_minus = nu_zero + quad - cubic * dq * dq * dq;
    s.nu_zero = nu_zero;
    set.samples.push_back(s);
  }
  return set;
}

LatticeTable make_lattice() {
  LatticeTable table;
  for (int T = 0; T <= 600; T += 25) {
    const double t = static_cast<double>(T);
    table.temperature.push_back(t);
    // Smooth, monotone, diamond-like: alpha ~ 1e-6 1/K near room temperature.
    table.lattice_parameter.push_back(3.567 + 6.0e-6 * t * t / (t + 400.0));
  }
  return table;
}

std::vector<std::pair<double, double>> make_nu_of_a(double nu0, double slope) {
  std::vector<std::pair<double, double>> samples;
  for (int i = 0; i < 5; ++i) {
    const double a = 3.566 + 0.002 * i;
    samples.emplace_back(a, nu0 + slope * (a - 3.567));
  }
  return samples;
}

Eigen::Matrix3d rotate_about_z(const Eigen::Matrix3d& m, double angle_rad) {
  Eigen::Matrix3d r;
  const double c = std::cos(angle_rad), s = std::sin(angle_rad);
  r << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
  return r * m * r.transpose();
}

ScalarField make_gaussian_grid(double amplitude, double sigma,
                               const Eigen::Vector3d& center) {
  ScalarField field;
  const int n = 20;
  const double h = 0.25;
  field.dims = {n, n, n};
  field.spacing = {Eigen::Vector3d(h, 0, 0), Eigen::Vector3d(0, h, 0),
                   Eigen::Vector3d(0, 0, h)};
  field.origin = Eigen::Vector3d::Constant(-h * (n - 1) / 2.0);
  field.values.resize(field.size());
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double r2 = (field.position(i, j, k) - center).squaredNorm();
        field.values[field.index(i, j, k)] =
            amplitude * std::exp(-r2 / (2.0 * sigma * sigma));
      }
  return field;
}

} // namespace

std::vector<fs::path> write_bundle(const fs::path& directory) {
  fs::create_directories(directory);
  std::vector<fs::path> written;
  auto emit = [&](const fs::path& p) { written.push_back(p); };

  // Phonons and curvatures for three observables.
  const PhononSpectrum spectrum = make_spectrum();
  io::write_phonon_file(directory / "modes.phonon", spectrum);
  emit(directory / "modes.phonon");

  const double d2nu_D[4] = {-900.0, -1500.0, -600.0, -250.0};
  const double d2nu_Q[4] = {-110.0, -190.0, -80.0, -30.0};
  const double d2nu_Azz[4] = {140.0, 260.0, 90.0, 45.0};
  io::write_curvature_file(directory / "D.curv", make_curvatures("D", 2870.0, d2nu_D));
  io::write_curvature_file(directory / "Q.curv", make_curvatures("Q", -4.95, d2nu_Q));
  io::write_curvature_file(directory / "Azz.curv",
                           make_curvatures("Azz", -2.16, d2nu_Azz));
  emit(directory / "D.curv");
  emit(directory / "Q.curv");
  emit(directory / "Azz.curv");

  // Lattice table and nu(a) samples.
  io::write_lattice_file(directory / "lattice.dat", make_lattice());
  emit(directory / "lattice.dat");
  io::write_nu_of_a_file(directory / "nu_of_a_D.dat", make_nu_of_a(2870.0, -1400.0));
  io::write_nu_of_a_file(directory / "nu_of_a_Q.dat", make_nu_of_a(-4.95, -45.0));
  io::write_nu_of_a_file(directory / "nu_of_a_Azz.dat", make_nu_of_a(-2.16, 30.0));
  emit(directory / "nu_of_a_D.dat");
  emit(directory / "nu_of_a_Q.dat");
  emit(directory / "nu_of_a_Azz.dat");

  // ZPL spectra: excited surface uniformly softer by 0.05 THz.
  {
    PhononSpectrum ground, excited;
    ground.label = "zpl_ground";
    excited.label = "zpl_excited";
    for (int i = 0; i < 10; ++i) {
      const double f = 4.0 + 4.0 * i;
      ground.modes.push_back({i + 1, f * units::THz_to_rad_per_s, 12.0, std::nullopt});
      excited.modes.push_back(
          {i + 1, (f - 0.05) * units::THz_to_rad_per_s, 12.0, std::nullopt});
    }
    io::write_phonon_file(directory / "zpl_ground.phonon", ground);
    io::write_phonon_file(directory / "zpl_excited.phonon", excited);
    emit(directory / "zpl_ground.phonon");
    emit(directory / "zpl_excited.phonon");
    io::write_nu_of_a_file(directory / "nu_of_a_ZPL.dat",
                           make_nu_of_a(470.4e6, -3.0e6)); // 1.945 eV in MHz scale
    emit(directory / "nu_of_a_ZPL.dat");
  }

  // Oracle input.
  {
    io::OracleInput oracle;
    oracle.temperature_K = 300.0;
    oracle.nu0_MHz = 2870.0;
    oracle.modes = {{5.0, -2.0}, {25.0, -0.5}};
    io::write_oracle_file(directory / "oracle.dat", oracle);
    emit(directory / "oracle.dat");
  }

  // NV-like spin system: D = 2870 MHz, Q = -4.95 MHz, A_zz = -2.16 MHz,
  // A_perp = -2.7 MHz.
  {
    InteractionTensor d;
    d.kind = TensorKind::D;
    d.matrix = Eigen::Vector3d(-2870.0 / 3.0, -2870.0 / 3.0, 2.0 * 2870.0 / 3.0)
                   .asDiagonal();
    io::write_tensor_file(directory / "D.tensor", d);

    InteractionTensor q;
    q.kind = TensorKind::Q;
    q.matrix =
        Eigen::Vector3d(4.95 / 3.0, 4.95 / 3.0, -2.0 * 4.95 / 3.0).asDiagonal();
    io::write_tensor_file(directory / "Q.tensor", q);

    InteractionTensor a;
    a.kind = TensorKind::A;
    a.matrix = Eigen::Vector3d(-2.7, -2.7, -2.16).asDiagonal();
    io::write_tensor_file(directory / "A.tensor", a);

    std::ofstream sys(directory / "system.dat", std::ios::binary);
    sys << "#spinshift-system v1\n"
        << "S 1\n"
        << "axis 0 0 1\n"
        << "D D.tensor\n"
        << "nucleus 1 A.tensor Q.tensor\n";
    emit(directory / "D.tensor");
    emit(directory / "Q.tensor");
    emit(directory / "A.tensor");
    emit(directory / "system.dat");
  }

  // 13C demo sites: three symmetry-equivalent shells (C3 rotations about z
  // leave nu_A invariant), strongest first shell near 129 MHz.
  {
    Eigen::Matrix3d first, second, third;
    first << 110.0, 0.0, 38.0, 0.0, 96.0, 0.0, 38.0, 0.0, 123.0;
    second << 10.0, 0.0, 3.0, 0.0, 9.0, 0.0, 3.0, 0.0, 13.4;
    third << 8.0, 0.0, 2.0, 0.0, 7.5, 0.0, 2.0, 0.0, 12.6;
    std::vector<io::SiteTensor> sites;
    const char* shells[] = {"C1", "C2", "C3"};
    const Eigen::Matrix3d bases[] = {first, second, third};
    for (int shell = 0; shell < 3; ++shell)
      for (int copy = 0; copy < 3; ++copy) {
        io::SiteTensor site;
        site.id = std::string(shells[shell]) + char('a' + copy);
        site.tensor = rotate_about_z(bases[shell],
                                     2.0 * constants::pi * copy / 3.0);
        sites.push_back(std::move(site));
      }
    io::write_sites_file(directory / "sites.dat", sites);
    emit(directory / "sites.dat");
  }

  // Density grids and nuclei for the tensor demos.
  {
    io::write_grid_file(directory / "spin_density.grid",
                        make_gaussian_grid(0.08, 0.55, Eigen::Vector3d::Zero()));
    io::write_grid_file(
        directory / "charge_density.grid",
        make_gaussian_grid(1.2, 0.7, Eigen::Vector3d(0.4, 0.0, 0.3)));
    emit(directory / "spin_density.grid");
    emit(directory / "charge_density.grid");

    std::vector<NucleusSpec> nuclei;
    nuclei.push_back(nucleus_n14(Eigen::Vector3d::Zero()));
    auto c1 = nucleus_c13(Eigen::Vector3d(1.54, 0.0, 0.4));
    c1.name = "C13a";
    auto c2 = nucleus_c13(Eigen::Vector3d(-0.77, 1.3337, 0.4));
    c2.name = "C13b";
    nuclei.push_back(c1);
    nuclei.push_back(c2);
    io::write_nuclei_file(directory / "nuclei.dat", nuclei);
    emit(directory / "nuclei.dat");
  }

  return written;
}

} // namespace spinshift::fixtures
