#include <doctest.h>

#include <cmath>

#include "critwin/asymptotics.hpp"
#include "critwin/genfun.hpp"

using namespace critwin;
using namespace critwin::asym;

TEST_CASE("y(x) solver") {
  CHECK(surplus_ratio_y(1.0) == 0.0);
  CHECK(surplus_ratio_y(std::log(3.0)) == doctest::Approx(0.5).epsilon(1e-12));
  double y10 = surplus_ratio_y(10.0);
  CHECK(y10 > 0.99);
  CHECK(y10 < 1.0 + 1e-16);
  CHECK_THROWS_AS(surplus_ratio_y(0.5), std::domain_error);

  for (double y = 0.1; y < 0.95; y += 0.1) {
    double x = std::atanh(y) / y;
    CHECK(surplus_ratio_y(x) == doctest::Approx(y).epsilon(1e-12));
  }
  // residual check across the range; past x ~ 2 the y-form loses resolution
  // against 1 (one ulp in y moves the residual by ~1/(1-y^2)), so the
  // contract is checked on the 1-y representation there
  for (double x : {1.0001, 1.01, 1.5, 2.0}) {
    double y = surplus_ratio_y(x);
    double back = std::atanh(y) / y;
    CHECK(std::abs(back - x) <= 1e-14 * std::max(1.0, x));
  }
  for (double x : {2.0, 5.0, 12.0, 19.0}) {
    double d = surplus_ratio_one_minus_y(x);
    double back = 0.5 * std::log((2 - d) / d) / (1 - d);
    CHECK(std::abs(back - x) <= 1e-14 * std::max(1.0, x));
  }
}

TEST_CASE("phi and a") {
  CHECK(phi_exp(1.0) == doctest::Approx(2 / M_E).epsilon(1e-15));
  double x = std::log(3.0);
  double want = 2 * std::exp(-x) * std::pow(0.5, 1 - x) / std::sqrt(0.75);
  CHECK(phi_exp(x) == doctest::Approx(want).epsilon(1e-12));

  CHECK(a_correction(1.0) == doctest::Approx(2 + 0.5 * std::log(1.5)).epsilon(1e-15));
  double y = 0.5;
  double a_want = x * (x + 1) * (1 - y) + std::log(1 - x + x * y) -
                  0.5 * std::log(1 - x + x * y * y);
  CHECK(a_correction(x) == doctest::Approx(a_want).epsilon(1e-12));

  // bounded, and decaying like ~2 x^2 e^{-2x} for large x
  double sup = 0;
  for (double xx = 1; xx <= 50; xx += 0.25) sup = std::max(sup, std::abs(a_correction(xx)));
  CHECK(sup <= 2 + 0.5 * std::log(1.5) + 1e-12);
  CHECK(std::abs(a_correction(20.0)) < 1e-12);
}

TEST_CASE("asymptotic count estimate") {
  counts::CountTable table(60, 45);
  // n=3, k=0 closed form
  Real want = pow(2 / real_e(), 3) * exp(Real(2 + 0.5 * std::log(1.5)));
  CHECK(static_cast<double>(abs(asymptotic_connected_count(3, 0) - want)) < 1e-12);

  // relative error decreases along n at fixed k/n
  for (double frac : {0.0, 0.1, 0.5}) {
    double prev = 1e9;
    for (int n : {10, 20, 40, 60}) {
      long long k = std::llround(frac * n);
      Real exact(table.connected(n, n + k));
      double rel = std::abs(static_cast<double>(exact / asymptotic_connected_count(n, k)) - 1);
      CHECK(rel < prev);
      prev = rel;
    }
  }
  CHECK(asymptotic_connected_count(10, 3) > 0);
  CHECK_THROWS_AS(asymptotic_connected_count(4, 5), std::invalid_argument);
}

TEST_CASE("explicit count bound regime") {
  counts::CountTable table(40, 41);
  double ccal = calibrate_prop_constant(table, 3, 40);
  CHECK(ccal < 10);
  for (int n = 3; n <= 40; ++n) {
    long long N = static_cast<long long>(n) * (n - 1) / 2;
    for (long long k = 0; k <= std::min<long long>(n, N - n); ++k) {
      CHECK(Real(table.connected(n, n + k)) <= connected_count_upper(n, k, ccal));
    }
  }
  // k = 0 convention k^k = 1
  Real direct = Real(ccal) * Real(counts::binomial(45, 10)) * pow(2 / real_e(), 10);
  CHECK(static_cast<double>(abs(connected_count_upper(10, 0, ccal) - direct)) < 1e-20);
  // t-form equivalence: (en/k)^{k/2} = (t^2 n/(3k))^{k/2} at t^2 = 3e
  int n = 12, k = 5;
  Real t2 = 3 * real_e();
  Real tform = Real(counts::binomial(66, 17)) * pow(2 / real_e(), 12) *
               pow(t2 * n / (3 * Real(k)), Real(k) / 2);
  CHECK(static_cast<double>(abs(connected_count_upper(n, k, 1.0) / tform - 1)) < 1e-25);
  CHECK_THROWS_AS(connected_count_upper(10, 11, 1.0), std::invalid_argument);
}

TEST_CASE("crude bound") {
  CHECK(crude_bound(4, 0) == 15);
  CHECK(crude_bound(3, -1) == 3);
  counts::CountTable table(12);
  for (int n = 3; n <= 12; ++n) {
    long long N = static_cast<long long>(n) * (n - 1) / 2;
    for (long long k = -1; k <= N - n; ++k)
      CHECK(table.connected(n, n + k) <= crude_bound(n, k));
  }
  // Stirling relaxation dominates the binomial
  CHECK(Real(crude_bound(10, 4)) <= crude_bound_stirling(10, 4));
}

TEST_CASE("sparse and dense sums") {
  counts::CountTable table(14);
  Real z("0.01");
  CHECK(static_cast<double>(abs(sparse_sum_A(3, z, table) - z / 3)) < 1e-30);
  CHECK(sparse_sum_A(5, Real(0), table) == 0);
  // B(3, z) = 0 (no k >= 1 terms exist), B(4, z) = z^3/16
  CHECK(dense_sum_B(3, z, table) == 0);
  CHECK(static_cast<double>(abs(dense_sum_B(4, z, table) - z * z * z / 16)) < 1e-35);

  // linear regime: A/(n^{3/2} z) bounded when n^{3/2} z <= 1
  double worst = 0;
  for (int n = 3; n <= 14; ++n) {
    Real zz = Real(1) / pow(Real(n), Real(3) / 2);
    worst = std::max(worst, static_cast<double>(sparse_sum_A(n, zz, table) /
                                                (pow(Real(n), Real(3) / 2) * zz)));
  }
  CHECK(worst < 1.0);

  // dense chain bound dominates and the hypothesis is enforced
  for (int n = 3; n <= 14; ++n) {
    Real zz = 3 / (real_e() * n);
    CHECK(dense_sum_B(n, zz, table) <= dense_bound_B(n, zz));
  }
  CHECK_THROWS_AS(dense_bound_B(10, Real(1)), std::domain_error);
}

TEST_CASE("kk series") {
  CHECK(kk_series(0) == 1);
  // independent double-precision partial sum oracle at x = 1
  double direct = 1;
  for (int k = 1; k <= 60; ++k) direct += std::exp(-0.5 * k * std::log(k));
  CHECK(static_cast<double>(kk_series(1)) == doctest::Approx(direct).epsilon(1e-12));
  // ratio to the asymptotic form approaches 1
  double prev = 1;
  for (double x : {5.0, 10.0, 20.0}) {
    Real asymF = sqrt(4 * real_pi() / real_e()) * x * exp(Real(x) * x / (2 * real_e()));
    double dev = std::abs(static_cast<double>(kk_series(x) / asymF) - 1);
    CHECK(dev < prev);
    prev = dev;
  }
  CHECK(prev < 0.02);
}

TEST_CASE("surplus upper bound vs exact") {
  counts::CountTable table(14);
  const double eps = 0.01;
  std::vector<double> xgrid = {0.01, 0.03, 0.1, 0.3, 0.5, 1.0, 2.0};
  for (int n = 3; n <= 14; ++n)
    for (double zz : {1e-4, 1e-3}) xgrid.push_back(zz * std::pow(n, 1.5));
  double ceps = calibrate_sparse_constant(table, 14, eps, xgrid);
  CHECK(ceps < 10);
  for (int n = 3; n <= 14; ++n) {
    for (double zz : {1e-4, 1e-3}) {
      Real z(zz);
      CHECK(genfun::surplus_series(n, z, table) <= surplus_upper(n, z, eps, ceps));
    }
  }
  CHECK(surplus_upper(5, Real(0), eps, ceps) >= 0);
}
