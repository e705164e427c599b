#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "critwin/saw.hpp"

using namespace critwin;

namespace {

// brute-force count of n-step self-avoiding walks 0 -> 1 on K_V
long long brute_saw(int V, int n) {
  std::vector<int> walk = {0};
  std::vector<bool> used(V, false);
  used[0] = true;
  long long count = 0;
  std::function<void(int, int)> rec = [&](int at, int steps) {
    if (steps == n) {
      if (at == 1) ++count;
      return;
    }
    for (int next = 0; next < V; ++next) {
      if (used[next]) continue;
      // the walk must be self-avoiding and end at 1 exactly at step n
      if (next == 1 && steps + 1 != n) continue;
      used[next] = true;
      rec(next, steps + 1);
      used[next] = false;
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("walk counts") {
  CHECK(saw::walk_count(4, 1) == 1);
  CHECK(saw::walk_count(4, 2) == 2);
  CHECK(saw::walk_count(5, 3) == 6);
  CHECK_THROWS_AS(saw::walk_count(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(saw::walk_count(4, 4), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) CHECK(saw::walk_count(5, n) == brute_saw(5, n));
  for (int n = 1; n <= 5; ++n) CHECK(saw::walk_count(6, n) == brute_saw(6, n));
}

TEST_CASE("two point and susceptibility, small V") {
  Real p("0.8");
  auto s2 = saw::two_point(2, p);
  CHECK(static_cast<double>(abs(s2.value - p / 2)) < 1e-35);
  auto c2 = saw::susceptibility(2, p);
  CHECK(static_cast<double>(abs(c2.value - (1 + p / 2))) < 1e-35);
  CHECK(saw::two_point(10, Real(0)).value == 0);
  CHECK(saw::susceptibility(10, Real(0)).value == 1);
}

TEST_CASE("monotone in p, exact term count") {
  Real prev(-1);
  for (double pv : {0.0, 0.5, 1.0, 1.5}) {
    Real v = saw::susceptibility(50, Real(pv)).value;
    CHECK(v >= prev);
    prev = v;
  }
  auto r = saw::two_point(50, Real(1));
  CHECK(r.terms == 49);  // exactly V-1 terms, no truncation at small V
  CHECK(!r.tail.has_value());
}

TEST_CASE("truncated evaluation within certificate") {
  EvalOptions full_opt;
  full_opt.mode = SumMode::Full;
  EvalOptions trunc_opt;
  trunc_opt.mode = SumMode::Truncated;
  for (double pv : {0.99, 1.0, 1.01}) {
    auto full = saw::susceptibility(20000, Real(pv), full_opt);
    auto trunc = saw::susceptibility(20000, Real(pv), trunc_opt);
    REQUIRE(trunc.tail.has_value());
    Real diff = full.value - trunc.value;
    CHECK(diff >= 0);
    CHECK(diff <= trunc.tail->bound);
  }
}
