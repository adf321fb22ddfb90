// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"
#include "spinshift/oracle.hpp"
#include "spinshift/phonon.hpp"
#include "spinshift/reduction.hpp"

using namespace spinshift;

namespace {

double thz(double f) { return f * units::THz_to_rad_per_s; }

OccupationEnsemble make_ensemble(std::vector<OracleMode> modes, double T) {
  OccupationEnsemble e;
  e.modes = std::move(modes);
  e.temperature_K = T;
  for (const auto& m : e.modes) e.n_max.push_back(default_n_max(m.omega, T));
  return e;
}

} // namespace

TEST_CASE("oracle trivial limits") {
  SUBCASE("all dnu zero returns nu0 at any T") {
    for (double T : {0.0, 50.0, 300.0}) {
      const auto r =
          oracle_average(make_ensemble({{thz(5.0), 0.0}, {thz(20.0), 0.0}}, T), 2870.0);
      CHECK(r.average_MHz == doctest::Approx(2870.0).epsilon(1e-13));
    }
  }

  SUBCASE("T = 0 keeps only the ground configuration") {
    const auto r =
        oracle_average(make_ensemble({{thz(5.0), -2.0}, {thz(20.0), 0.6}}, 0.0), 100.0);
    CHECK(r.average_MHz == doctest::Approx(100.0 + 0.5 * (-2.0 + 0.6)).epsilon(1e-13));
    CHECK(r.configurations == 1);
    CHECK(r.tail_bound_MHz == 0.0);
  }
}

TEST_CASE("oracle equals the geometric-series closed form") {
  // Single mode with tail < 1e-14: the independent check is the identity
  // sum n r^n / sum r^n = r/(1-r).
  const double omega = thz(10.0);
  const double T = 300.0;
  const auto r = oracle_average(make_ensemble({{omega, -2.5}}, T), 2870.0);
  const double closed = 2870.0 + (-2.5) * (bose_occupation(omega, T) + 0.5);
  CHECK(std::abs(r.average_MHz - closed) <= 1e-12 * std::abs(closed));
  CHECK(r.per_mode_tail_weight[0] < 1e-14);
}

TEST_CASE("oracle factorizes over modes") {
  const double T = 250.0;
  const std::vector<OracleMode> modes = {
      {thz(4.0), -3.0}, {thz(11.0), 1.2}, {thz(27.0), -0.4}};
  const auto joint = oracle_average(make_ensemble(modes, T), 0.0);
  KahanSum parts;
  for (const auto& m : modes)
    parts.add(oracle_average(make_ensemble({m}, T), 0.0).average_MHz);
  CHECK(std::abs(joint.average_MHz - parts.value()) <=
        1e-12 * std::max(1.0, std::abs(joint.average_MHz)));
}

TEST_CASE("monotone convergence within the reported tail bound") {
  const double T = 400.0;
  OccupationEnsemble coarse = make_ensemble({{thz(3.0), -2.0}, {thz(9.0), 0.7}}, T);
  coarse.n_max = {8, 5}; // deliberately truncated
  const auto low = oracle_average(coarse, 0.0);

  OccupationEnsemble fine = coarse;
  fine.n_max = {28, 25};
  const auto high = oracle_average(fine, 0.0);

  CHECK(std::abs(high.average_MHz - low.average_MHz) <=
        low.tail_bound_MHz * (1.0 + 1e-9));
  CHECK(high.tail_bound_MHz < low.tail_bound_MHz);
}

TEST_CASE("oracle refusals") {
  SUBCASE("too many modes") {
    std::vector<OracleMode> modes;
    for (int i = 0; i < 7; ++i) modes.push_back({thz(5.0 + i), 0.1});
    CHECK_THROWS_AS(oracle_average(make_ensemble(modes, 300.0), 0.0), ValidationError);
  }
  SUBCASE("configuration budget") {
    OccupationEnsemble e = make_ensemble(
        {{thz(5.0), 0.1}, {thz(6.0), 0.1}, {thz(7.0), 0.1}, {thz(8.0), 0.1}}, 300.0);
    e.n_max = {200, 200, 200, 200}; // 201^4 > 1e7
    CHECK_THROWS_AS(oracle_average(e, 0.0), NumericError);
  }
  SUBCASE("invalid inputs") {
    OccupationEnsemble e = make_ensemble({{thz(5.0), 0.1}}, 300.0);
    e.n_max = {0};
    CHECK_THROWS_AS(oracle_average(e, 0.0), ValidationError);
    CHECK_THROWS_AS(oracle_average(make_ensemble({{-1.0, 0.1}}, 300.0), 0.0),
                    ValidationError);
  }
}

TEST_CASE("default n_max meets the tail target") {
  for (double f : {1.0, 5.0, 20.0, 40.0}) {
    for (double T : {10.0, 77.0, 300.0, 500.0}) {
      const int n = default_n_max(thz(f), T);
      CHECK(n >= 1);
      CHECK(n <= 200);
      const double x = constants::hbar_eV_s * thz(f) / (constants::boltzmann_eV_per_K * T);
      const double tail = std::exp(-x * (n + 1)) / (1.0 - std::exp(-x));
      if (n < 200) CHECK(tail < 1e-14);
    }
  }
}
