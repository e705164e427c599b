#include <doctest.h>

#include <cmath>

#include "critwin/tail.hpp"

using namespace critwin;

TEST_CASE("tail bound dominates the direct sum") {
  // gamma = 0, lambda = 0, b = 3, V = 100, kappa = 1/2:
  // sum_{n=30}^{inf} e^{-n^2/200} vs closed-form erfc bound
  double direct = 0;
  for (int n = 30; n <= 2000; ++n) direct += std::exp(-0.5 * n * n / 100.0);
  Real bound = tail_bound(0.0, 0.5, 0.0, 3.0, 100);
  CHECK(static_cast<double>(bound) >= direct);
  CHECK(static_cast<double>(bound) < 10 * direct + 1e-3);  // not absurdly loose
}

TEST_CASE("tail bound monotone in b") {
  Real b3 = tail_bound(0.5, 0.5, 1.0, 3.0, 400);
  Real b4 = tail_bound(0.5, 0.5, 1.0, 4.0, 400);
  CHECK(b4 <= b3);
}

TEST_CASE("tail bound scaling in V") {
  // bound / (b^{-gamma} V^{(1-gamma)/2}) stays below a constant
  double gamma = 0.5, b = 3.0;
  double worst = 0;
  for (long long V : {100LL, 1000LL, 10000LL, 100000LL, 1000000LL}) {
    Real bd = tail_bound(gamma, 0.5, 1.0, b, V);
    double scale = std::pow(b, -gamma) * std::pow(static_cast<double>(V), (1 - gamma) / 2);
    worst = std::max(worst, static_cast<double>(bd) / scale);
  }
  CHECK(worst < 5.0);
}

TEST_CASE("tail bound preconditions") {
  // lambda too large for this b: summand increasing, bound refused
  CHECK_THROWS_AS(tail_bound(0.0, 0.5, 100.0, 3.0, 100), std::domain_error);
  // b sqrt(V) < 2
  CHECK_THROWS_AS(tail_bound(0.0, 0.5, 0.0, 0.1, 100), std::domain_error);
  CHECK_THROWS_AS(tail_bound(-1.0, 0.5, 0.0, 3.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(tail_bound(0.0, 0.0, 0.0, 3.0, 100), std::invalid_argument);
}
