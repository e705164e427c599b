#include <doctest.h>

#include <cmath>

#include "critwin/profiles.hpp"

using namespace critwin;
using namespace critwin::profiles;

namespace {
double dbl(const Real& r) { return static_cast<double>(r); }
}

TEST_CASE("profile I closed form and asymptotics") {
  auto i0 = profile_I(0, 1e-10);
  Real closed = real_e() * pow(Real(2), Real(-3) / 4) * tgamma(Real(1) / 4) / sqrt(2 * real_pi());
  CHECK(dbl(abs(i0.value - closed)) < 1e-10);
  CHECK(dbl(i0.value) == doctest::Approx(2.3378).epsilon(1e-4));

  CHECK(dbl(profile_I(-8).value / asymptotic_I(-8, Branch::Minus)) == doctest::Approx(1).epsilon(0.1));
  CHECK(dbl(profile_I(8).value / asymptotic_I(8, Branch::Plus)) == doctest::Approx(1).epsilon(0.1));
  CHECK(dbl(asymptotic_I(-2, Branch::Minus)) == doctest::Approx(M_E / 2).epsilon(1e-14));
  CHECK_THROWS_AS(asymptotic_I(2, Branch::Minus), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_I(0.5, Branch::Plus), std::invalid_argument);

  // both branch ratios tend to 1 along the test grids
  double prev = 1;
  for (double s : {-4.0, -8.0, -16.0}) {
    double dev = std::abs(dbl(profile_I(s).value / asymptotic_I(s, Branch::Minus)) - 1);
    CHECK(dev < prev);
    prev = dev;
  }
  prev = 1;
  for (double s : {4.0, 6.0, 8.0}) {
    double dev = std::abs(dbl(profile_I(s).value / asymptotic_I(s, Branch::Plus)) - 1);
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("profile I is log-convex in s") {
  double h = 0.25;
  for (double s = -3; s <= 3.0001; s += 0.5) {
    double a = std::log(dbl(profile_I(s - h).value));
    double mid = std::log(dbl(profile_I(s).value));
    double b = std::log(dbl(profile_I(s + h).value));
    CHECK(a + b >= 2 * mid - 1e-9);
  }
}

TEST_CASE("quadrature error estimates are honest") {
  for (double s : {-2.0, 0.0, 2.0}) {
    auto coarse = profile_I(s, 1e-8);
    auto fine = profile_I(s, 5e-9);
    CHECK(dbl(abs(coarse.value - fine.value)) <= dbl(coarse.est_abs_error) + 1e-15);
  }
  for (double k : {0.5, 2.0}) {
    auto coarse = profile_Ik(k, 0.5, 1e-8);
    auto fine = profile_Ik(k, 0.5, 5e-9);
    CHECK(dbl(abs(coarse.value - fine.value)) <= dbl(coarse.est_abs_error) + 1e-15);
  }
  auto pc = perc_profile(0.5, 1e-7);
  auto pf = perc_profile(0.5, 5e-8);
  CHECK(dbl(abs(pc.value - pf.value)) <= dbl(pc.est_abs_error) + 1e-15);
}

TEST_CASE("I_k values and monotonicity") {
  auto i1 = profile_Ik(1, 0);
  CHECK(dbl(abs(i1.value - sqrt(real_pi()) / 2)) < 1e-12);
  for (double k : {0.0, 1.5}) {
    double prev = 1e300;
    for (double s : {-1.0, 0.0, 1.0, 2.0}) {
      double v = dbl(profile_Ik(k, s).value);
      CHECK(v < prev);
      CHECK(v > 0);
      prev = v;
    }
  }
  CHECK_THROWS_AS(profile_Ik(-1.0, 0), std::invalid_argument);
  // negative-order reduction consistency: I_{-1/2} via parts equals I of Faxen form
  auto in = profile_Ik(-0.5, 0.7);
  auto byparts = (profile_Ik(3.5, 0.7).value + Real(0.7) * profile_Ik(1.5, 0.7).value) / Real(0.5);
  CHECK(dbl(abs(in.value - byparts)) < 1e-9);
}

TEST_CASE("Faxen identity") {
  const Real c = real_e() * pow(Real(2), Real(1) / 4) / sqrt(real_pi());
  for (double s = -3; s <= 3.0001; s += 1.0) {
    Real lhs = profile_I(s, 1e-10).value;
    Real rhs = c * profile_Ik(0, -std::sqrt(2.0) * s, 1e-10).value;
    CHECK(dbl(abs(lhs - rhs)) < 1e-8);
  }
}

TEST_CASE("lambert W0") {
  CHECK(lambert_w0(Real(0)) == 0);
  CHECK(lambert_w0(Real(-1) / real_e()) == -1);
  Real omega = lambert_w0(Real(1));
  CHECK(dbl(abs(omega * exp(omega) - 1)) < 1e-30);
  CHECK(dbl(omega) == doctest::Approx(0.567143).epsilon(1e-6));
  CHECK_THROWS_AS(lambert_w0(Real(-1)), std::domain_error);

  // inversion residual on a grid across both regimes
  for (double z = -0.36; z <= 10.0; z += 0.37) {
    Real w = lambert_w0(Real(z));
    CHECK(dbl(abs(w * exp(w) - Real(z))) <= 1e-12 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("one-point limit and series") {
  CHECK(dbl(abs(tree_one_point_limit(Real(1)) - real_e())) < 1e-30);
  CHECK(dbl(tree_one_point_limit(Real("1e-9"))) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(tree_one_point_limit(Real(0)) == 1);
  CHECK_THROWS_AS(tree_one_point_limit(Real(2)), std::domain_error);

  // independent truncated-series oracle at p = 0.5 (terms < 1e-20)
  Real p("0.5");
  Real pe = p / real_e();
  Real t(1), sum(1);
  for (int n = 1; n < 400; ++n) {
    t *= pow(1 + Real(1) / n, n - 1) * pe;
    sum += t;
    if (t < Real("1e-20")) break;
  }
  CHECK(dbl(abs(tree_one_point_limit(p) - sum)) < 1e-10);
  CHECK(dbl(abs(tree_one_point_series(p) - sum)) < 1e-18);

  // Euler-Maclaurin completion at the boundary p = 1
  CHECK(dbl(abs(tree_one_point_series(Real(1)) - real_e())) < 1e-11);
}

TEST_CASE("spin profile") {
  Real f1 = spin_profile(1, 0);
  Real oracle = profile_Ik(2, 0).value / profile_Ik(0, 0).value;
  CHECK(dbl(abs(f1 - oracle)) < 1e-10);
  CHECK(f1 > 0);

  // n -> 0 limit approaches I_1(s)
  for (double s : {-1.0, 0.0, 1.0}) {
    Real fn = spin_profile(1e-3, s);
    Real i1 = profile_Ik(1, s).value;
    CHECK(std::abs(dbl(fn / i1) - 1) < 0.01);
  }
  // decays as s -> +infinity
  CHECK(spin_profile(1, 10) < spin_profile(1, 5));
  CHECK(spin_profile(1, 5) < spin_profile(1, 0));
  CHECK_THROWS_AS(spin_profile(0.0, 0), std::invalid_argument);
}

TEST_CASE("excursion area moments") {
  CHECK(dbl(abs(excursion_area_moment(0) - 1)) < 1e-35);
  CHECK(dbl(abs(excursion_area_moment(1) - sqrt(real_pi() / 8))) < 1e-30);
  CHECK(dbl(abs(excursion_area_moment(2) - Real(5) / 12)) < 1e-30);
  CHECK(dbl(abs(excursion_area_moment(4) - Real(221) / 1008)) < 1e-30);
  for (int k = 1; k <= 30; ++k) CHECK(excursion_area_moment(k) > 0);
}

TEST_CASE("excursion MGF") {
  CHECK(excursion_mgf(Real(0)) == 1);
  Real a = excursion_mgf(Real("0.5")), b = excursion_mgf(Real(1)), c = excursion_mgf(Real(2));
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a > 1);
  CHECK_THROWS_AS(excursion_mgf(Real(-1)), std::domain_error);
  // matches a direct small-x expansion 1 + M1 x + M2 x^2/2 + O(x^3)
  Real x("0.001");
  Real direct = 1 + excursion_area_moment(1) * x + excursion_area_moment(2) * x * x / 2 +
                excursion_area_moment(3) * x * x * x / 6;
  CHECK(dbl(abs(excursion_mgf(x) - direct)) < 1e-12);
  // explicit truncation order
  CHECK(dbl(abs(excursion_mgf(x, 3) - direct)) < 1e-40);
  CHECK(excursion_mgf(x, 0) == 1);
}

TEST_CASE("percolation profile") {
  for (double s : {-2.0, 0.0, 2.0}) {
    auto r = perc_profile(s);
    CHECK(dbl(r.value) > 0);
  }
  // two independent quadrature schemes agree
  auto gk = perc_profile(0, 1e-9, 0);
  auto ts = perc_profile(0, 1e-9, 1);
  CHECK(dbl(abs(gk.value - ts.value)) < 1e-6);
}
