// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"
#include "spinshift/oracle.hpp"
#include "spinshift/shift.hpp"

using namespace spinshift;

namespace {

PhononMode mode_of(double freq_THz, double mass_amu, int index = 1) {
  return PhononMode{index, freq_THz * units::THz_to_rad_per_s, mass_amu, std::nullopt};
}

// Finite-difference triple of nu(q) = a + b q^2 + c q^3 + d q^4.
CurvatureSample sample_of(int index, double dq, double a, double b, double c = 0.0,
                          double d = 0.0) {
  auto nu = [&](double q) { return a + b * q * q + c * q * q * q + d * q * q * q * q; };
  return CurvatureSample{index, dq, nu(dq), nu(-dq), nu(0.0)};
}

CurvatureSet set_of(std::vector<CurvatureSample> samples, std::string label = "obs") {
  return CurvatureSet{std::move(label), std::move(samples)};
}

} // namespace

TEST_CASE("second derivative recovers polynomial curvature") {
  SUBCASE("quadratic, dyadic step: exact") {
    // dq = 2^-5 and dyadic coefficients make every intermediate exact.
    CHECK(second_derivative(sample_of(1, 0.03125, 5.0, 3.0)) == 6.0);
  }
  SUBCASE("cubic term cancels, dyadic step: exact") {
    CHECK(second_derivative(sample_of(1, 0.03125, 5.0, 3.0, 7.0)) == 6.0);
  }
  SUBCASE("paper step 0.03: exact to roundoff") {
    CHECK(second_derivative(sample_of(1, 0.03, 5.0, 3.0)) ==
          doctest::Approx(6.0).epsilon(5e-12));
    CHECK(second_derivative(sample_of(1, 0.03, 5.0, 3.0, 7.0)) ==
          doctest::Approx(6.0).epsilon(5e-12));
  }
  SUBCASE("quartic picks up 2 d dq^2") {
    // nu = 5 + 3 q^2 + 2 q^4 at dq = 0.03: symbolic expansion gives 6.0036.
    CHECK(second_derivative(sample_of(1, 0.03, 5.0, 3.0, 0.0, 2.0)) ==
          doctest::Approx(6.0 + 4.0 * 0.03 * 0.03).epsilon(1e-12));
  }
  SUBCASE("zero step rejected") {
    CHECK_THROWS_AS(second_derivative(CurvatureSample{1, 0.0, 1.0, 1.0, 1.0}),
                    ValidationError);
  }
}

TEST_CASE("modal frequency shift") {
  const PhononMode mode = mode_of(10.0, 12.0);
  CHECK(modal_frequency_shift(mode, 0.0) == 0.0);

  // Frozen oracle: (hbar / 2 M w) 2 pi d2nu for M = 12 amu, w = 2 pi x 10 THz,
  // d2nu = 1 MHz/A^2.
  CHECK(modal_frequency_shift(mode, 1.0) ==
        doctest::Approx(26461.5830399537).epsilon(1e-12));

  // Scaling laws: doubling the mass or the frequency halves the shift.
  const double base = modal_frequency_shift(mode, 2.5);
  CHECK(modal_frequency_shift(mode_of(10.0, 24.0), 2.5) ==
        doctest::Approx(0.5 * base).epsilon(1e-12));
  CHECK(modal_frequency_shift(mode_of(20.0, 12.0), 2.5) ==
        doctest::Approx(0.5 * base).epsilon(1e-12));

  CHECK_THROWS_AS(modal_frequency_shift(mode_of(0.05, 12.0), 1.0), ValidationError);
}

TEST_CASE("dynamic shift basics") {
  PhononSpectrum spectrum;
  spectrum.modes = {mode_of(5.0, 12.0, 1), mode_of(20.0, 13.0, 2)};

  SUBCASE("zero curvature everywhere -> zero at every T") {
    const CurvatureSet zeros =
        set_of({sample_of(1, 0.03, 2870.0, 0.0), sample_of(2, 0.03, 2870.0, 0.0)});
    for (double T : {0.0, 77.0, 300.0, 500.0})
      CHECK(dynamic_shift(spectrum, zeros, T) == 0.0);
  }

  SUBCASE("additive over disjoint mode subsets") {
    const CurvatureSet both =
        set_of({sample_of(1, 0.03, 0.0, -4.0), sample_of(2, 0.03, 0.0, 3.0)});
    PhononSpectrum first, second;
    first.modes = {spectrum.modes[0]};
    second.modes = {spectrum.modes[1]};
    const CurvatureSet c1 = set_of({sample_of(1, 0.03, 0.0, -4.0)});
    const CurvatureSet c2 = set_of({sample_of(2, 0.03, 0.0, 3.0)});
    ShiftOptions options;
    options.subtract_zero_point = false;
    for (double T : {0.0, 150.0, 400.0}) {
      const double whole = dynamic_shift(spectrum, both, T, options);
      const double parts =
          dynamic_shift(first, c1, T, options) + dynamic_shift(second, c2, T, options);
      CHECK(whole == doctest::Approx(parts).epsilon(1e-12));
    }
  }

  SUBCASE("missing coverage of an admitted mode") {
    const CurvatureSet incomplete = set_of({sample_of(1, 0.03, 0.0, -4.0)});
    CHECK_THROWS_AS(dynamic_shift(spectrum, incomplete, 300.0), ValidationError);
  }

  SUBCASE("zero-point value identity") {
    const CurvatureSet set =
        set_of({sample_of(1, 0.03, 0.0, -4.0), sample_of(2, 0.03, 0.0, 3.0)});
    ShiftOptions options;
    options.subtract_zero_point = false;
    const double at_zero = dynamic_shift(spectrum, set, 0.0, options);
    // Independent accumulation of sum_i (hbar / 4 M_i w_i) d2nu_i.
    double expected = 0.0;
    const double d2nu[] = {-4.0, 3.0};
    for (int i = 0; i < 2; ++i) {
      const auto& m = spectrum.modes[static_cast<std::size_t>(i)];
      expected += constants::hbar_J_s /
                  (4.0 * m.effective_mass * constants::amu_kg * m.omega) *
                  units::m2_to_A2 * d2nu[i];
    }
    CHECK(at_zero == doctest::Approx(expected).epsilon(1e-12));
    // Subtraction referencing: exactly zero at T = 0.
    CHECK(dynamic_shift(spectrum, set, 0.0) == 0.0);
  }

  SUBCASE("monotone in T when curvatures share a sign") {
    const CurvatureSet negative =
        set_of({sample_of(1, 0.03, 0.0, -4.0), sample_of(2, 0.03, 0.0, -1.5)});
    double prev = dynamic_shift(spectrum, negative, 0.0);
    for (double T = 25.0; T <= 600.0; T += 25.0) {
      const double v = dynamic_shift(spectrum, negative, T);
      CHECK(v < prev);
      prev = v;
    }
  }

  SUBCASE("closed form vs brute-force oracle, single mode at 300 K") {
    PhononSpectrum single;
    single.modes = {mode_of(10.0, 12.0, 1)};
    const CurvatureSet set = set_of({sample_of(1, 0.03, 0.0, 5.0)});
    ShiftOptions options;
    options.subtract_zero_point = false;
    const double closed = dynamic_shift(single, set, 300.0, options);

    OccupationEnsemble ensemble;
    ensemble.temperature_K = 300.0;
    const double omega = single.modes[0].omega;
    const double dnu =
        modal_frequency_shift(single.modes[0], 5.0) / (2.0 * constants::pi) *
        units::Hz_to_MHz;
    ensemble.modes = {{omega, dnu}};
    ensemble.n_max = {default_n_max(omega, 300.0)};
    const OracleResult oracle = oracle_average(ensemble, 0.0);
    CHECK(std::abs(closed - oracle.average_MHz) <=
          1e-9 * std::max(1.0, std::abs(closed)));
  }

  SUBCASE("threaded evaluation is bit-identical") {
    PhononSpectrum many;
    CurvatureSet set;
    set.observable = "obs";
    for (int i = 1; i <= 300; ++i) {
      many.modes.push_back(mode_of(1.0 + 0.13 * i, 12.0 + 0.01 * i, i));
      set.samples.push_back(sample_of(i, 0.03, 0.0, std::sin(0.7 * i) * 5.0));
    }
    ShiftOptions serial, parallel;
    parallel.threads = 8;
    CHECK(dynamic_shift(many, set, 300.0, serial) ==
          dynamic_shift(many, set, 300.0, parallel));
  }
}

TEST_CASE("expansion shift") {
  SUBCASE("constant nu(a) gives zero") {
    LatticeTable table;
    for (int i = 0; i <= 10; ++i) {
      table.temperature.push_back(50.0 * i);
      table.lattice_parameter.push_back(3.567 + 1e-5 * i * i);
    }
    std::vector<std::pair<double, double>> flat = {{3.566, 7.0}, {3.57, 7.0}, {3.575, 7.0}};
    for (double T : {0.0, 120.0, 480.0})
      CHECK(expansion_shift(table, flat, T) == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("linear nu(a) with linear a(T): analytic") {
    // a(T) = a0 (1 + beta T), nu(a) = c a  =>  shift = c a0 beta T.
    const double a0 = 3.567, beta = 1.2e-6, c = -1500.0;
    LatticeTable table;
    for (int i = 0; i <= 12; ++i) {
      const double T = 50.0 * i;
      table.temperature.push_back(T);
      table.lattice_parameter.push_back(a0 * (1.0 + beta * T));
    }
    std::vector<std::pair<double, double>> nu_of_a;
    for (int i = 0; i < 4; ++i) {
      const double a = 3.566 + 0.002 * i;
      nu_of_a.emplace_back(a, c * a);
    }
    for (double T : {100.0, 250.0, 455.0}) {
      CHECK(expansion_shift(table, nu_of_a, T) ==
            doctest::Approx(c * a0 * beta * T).epsilon(1e-9));
    }
  }

  SUBCASE("direct and integral paths agree") {
    LatticeTable table;
    for (int i = 0; i <= 24; ++i) {
      const double T = 25.0 * i;
      table.temperature.push_back(T);
      table.lattice_parameter.push_back(3.567 + 6e-6 * T * T / (T + 400.0));
    }
    std::vector<std::pair<double, double>> nu_of_a = {
        {3.566, 2871.4}, {3.568, 2868.6}, {3.570, 2865.8}, {3.572, 2863.0}};
    for (int degree : {1, 2}) {
      ExpansionOptions options;
      options.fit_degree = degree;
      ExpansionModel model(table, nu_of_a, options);
      for (double T : {40.0, 137.0, 300.0, 577.5}) {
        const double direct = model.shift_direct(T);
        const double integral = model.shift_integral(T);
        CHECK(std::abs(direct - integral) <=
              1e-10 * std::max(1.0, std::abs(direct)));
      }
    }
  }

  SUBCASE("extrapolation guarded by flag") {
    LatticeTable table;
    table.temperature = {100.0, 200.0, 300.0};
    table.lattice_parameter = {3.567, 3.568, 3.570};
    std::vector<std::pair<double, double>> nu_of_a = {{3.566, 1.0}, {3.571, 2.0}};
    ExpansionOptions strict;
    strict.T_ref = 100.0;
    CHECK_THROWS_AS(expansion_shift(table, nu_of_a, 350.0, strict), ValidationError);
    ExpansionOptions relaxed = strict;
    relaxed.allow_extrapolation = true;
    CHECK_NOTHROW(expansion_shift(table, nu_of_a, 350.0, relaxed));
  }
}

TEST_CASE("total shift curve") {
  PhononSpectrum spectrum;
  spectrum.modes = {mode_of(5.0, 12.0, 1), mode_of(20.0, 13.0, 2)};
  const CurvatureSet set =
      set_of({sample_of(1, 0.03, 2870.0, -900.0), sample_of(2, 0.03, 2870.0, -300.0)},
             "D");

  LatticeTable table;
  for (int i = 0; i <= 24; ++i) {
    const double T = 25.0 * i;
    table.temperature.push_back(T);
    table.lattice_parameter.push_back(3.567 + 6e-6 * T * T / (T + 400.0));
  }
  std::vector<std::pair<double, double>> nu_of_a = {
      {3.566, 2871.4}, {3.568, 2868.6}, {3.570, 2865.8}};
  const ExpansionModel expansion(table, nu_of_a, {});

  const auto grid = temperature_grid(0.0, 500.0, 10.0);
  const ShiftCurve curve = total_shift_curve(spectrum, set, &expansion, grid, {});

  SUBCASE("breakdown sums to total exactly") {
    for (std::size_t i = 0; i < grid.size(); ++i)
      CHECK(curve.total[i] == curve.expansion_term[i] + curve.dynamic_term[i]);
  }

  SUBCASE("flat when both terms vanish") {
    const CurvatureSet zeros =
        set_of({sample_of(1, 0.03, 2870.0, 0.0), sample_of(2, 0.03, 2870.0, 0.0)});
    const ShiftCurve flat = total_shift_curve(spectrum, zeros, nullptr, grid, {});
    for (double v : flat.total) CHECK(v == 0.0);
  }

  SUBCASE("single-mode fixture matches hand-computed closed form") {
    PhononSpectrum single;
    single.modes = {mode_of(10.0, 12.0, 1)};
    const CurvatureSet one = set_of({sample_of(1, 0.03, 0.0, 6.0)});
    const ShiftCurve c = total_shift_curve(single, one, nullptr, grid, {});
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double n = bose_occupation(single.modes[0].omega, grid[i]);
      const double expected = 0.5 * 6.0 *
                              (constants::hbar_J_s /
                               (12.0 * constants::amu_kg * single.modes[0].omega)) *
                              units::m2_to_A2 * n;
      CHECK(c.total[i] == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("temperature derivative") {
  SUBCASE("linear curve") {
    const auto grid = temperature_grid(0.0, 100.0, 5.0);
    std::vector<double> values;
    for (double T : grid) values.push_back(0.25 * T + 3.0); // MHz
    const auto deriv = temperature_derivative(grid, values);
    for (double d : deriv) CHECK(d == doctest::Approx(250.0).epsilon(1e-12)); // kHz/K
  }

  SUBCASE("quadratic curve: central difference exact in the interior") {
    const auto grid = temperature_grid(0.0, 100.0, 5.0);
    std::vector<double> values;
    for (double T : grid) values.push_back(0.01 * T * T);
    const auto deriv = temperature_derivative(grid, values);
    for (std::size_t i = 1; i + 1 < grid.size(); ++i)
      CHECK(deriv[i] == doctest::Approx(2.0 * 0.01 * grid[i] * 1e3).epsilon(1e-10));
  }

  SUBCASE("too few points") {
    CHECK_THROWS_AS(temperature_derivative({1.0, 2.0}, {0.0, 0.0}), ValidationError);
  }

  SUBCASE("single-mode fixture matches the analytic Bose derivative at 300 K") {
    PhononSpectrum single;
    single.modes = {mode_of(10.0, 12.0, 1)};
    const CurvatureSet one = set_of({sample_of(1, 0.03, 0.0, 6.0)});
    const auto grid = temperature_grid(299.9, 300.1, 0.01);
    const ShiftCurve curve = total_shift_curve(single, one, nullptr, grid, {});
    const std::size_t mid = grid.size() / 2;
    CHECK(grid[mid] == doctest::Approx(300.0));
    // d/dT [0.5 d2nu (hbar/Mw) n(T)], frozen from symbolic differentiation.
    CHECK(curve.derivative[mid] ==
          doctest::Approx(0.0427260636664967).epsilon(1e-7));
  }
}

TEST_CASE("zpl shift") {
  auto make = [](std::vector<double> freqs) {
    PhononSpectrum s;
    for (std::size_t i = 0; i < freqs.size(); ++i)
      s.modes.push_back(
          {static_cast<int>(i) + 1, freqs[i] * units::THz_to_rad_per_s, 12.0,
           std::nullopt});
    return s;
  };
  const auto grid = temperature_grid(0.0, 500.0, 50.0);

  SUBCASE("identical spectra: zero dynamic shift") {
    const PhononSpectrum g = make({5.0, 12.0, 25.0});
    ShiftOptions options;
    options.subtract_zero_point = false;
    const ShiftCurve curve = zpl_shift(g, g, nullptr, grid, options);
    for (double v : curve.dynamic_term) CHECK(v == 0.0);
  }

  SUBCASE("uniform softening: N (dw/2pi)(n + 1/2)") {
    const int n_modes = 10;
    std::vector<double> gf, ef;
    for (int i = 0; i < n_modes; ++i) {
      gf.push_back(10.0);
      ef.push_back(10.0 - 0.05);
    }
    const PhononSpectrum g = make(gf), e = make(ef);
    ShiftOptions options;
    options.subtract_zero_point = false;
    const ShiftCurve curve = zpl_shift(g, e, nullptr, grid, options);
    const double dnu = -0.05 * 1e12 * units::Hz_to_MHz; // MHz
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double n = bose_occupation(g.modes[0].omega, grid[i]);
      CHECK(curve.dynamic_term[i] ==
            doctest::Approx(n_modes * dnu * (n + 0.5)).epsilon(1e-12));
    }
  }

  SUBCASE("mode count mismatch") {
    CHECK_THROWS_AS(zpl_shift(make({5.0, 12.0}), make({5.0}), nullptr, grid, {}),
                    ValidationError);
  }

  SUBCASE("two-mode fixture vs oracle in delta-omega mode") {
    const PhononSpectrum g = make({6.0, 18.0});
    const PhononSpectrum e = make({5.95, 17.92});
    ShiftOptions options;
    options.subtract_zero_point = false;
    const ShiftCurve curve = zpl_shift(g, e, nullptr, {300.0, 301.0, 302.0}, options);

    OccupationEnsemble ensemble;
    ensemble.temperature_K = 300.0;
    for (int i = 0; i < 2; ++i) {
      const double wg = g.modes[static_cast<std::size_t>(i)].omega;
      const double we = e.modes[static_cast<std::size_t>(i)].omega;
      ensemble.modes.push_back({wg, (we - wg) / (2.0 * constants::pi) * units::Hz_to_MHz});
      ensemble.n_max.push_back(default_n_max(wg, 300.0));
    }
    const OracleResult oracle = oracle_average(ensemble, 0.0);
    CHECK(std::abs(curve.dynamic_term[0] - oracle.average_MHz) <=
          1e-9 * std::max(1.0, std::abs(oracle.average_MHz)));
  }
}
