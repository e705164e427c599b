#include <doctest.h>

#include "critwin/count.hpp"

using namespace critwin;
using counts::Count;

TEST_CASE("cayley counts") {
  CHECK(counts::cayley_count(1) == 1);
  CHECK(counts::cayley_count(2) == 1);
  CHECK(counts::cayley_count(4) == 16);
  CHECK(counts::cayley_count(8) == 262144);
  CHECK_THROWS_AS(counts::cayley_count(0), std::invalid_argument);
}

TEST_CASE("binomial") {
  CHECK(counts::binomial(6, 4) == 15);
  CHECK(counts::binomial(10, 5) == 252);
  CHECK(counts::binomial(1, 1) == 1);  // (V-1, n-1) at V = n = 2
  CHECK(counts::binomial(5, -1) == 0);
  CHECK(counts::binomial(5, 6) == 0);
  CHECK_THROWS_AS(counts::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("total graphs") {
  CHECK(counts::total_graphs(4, 4) == 15);
  CHECK(counts::total_graphs(5, 5) == 252);
  CHECK(counts::total_graphs(3, 4) == 0);
}

TEST_CASE("brute force connected") {
  CHECK(counts::brute_force_connected(4, 3) == 16);
  CHECK(counts::brute_force_connected(4, 6) == 1);
  CHECK(counts::brute_force_connected(4, 5) == 6);
  CHECK(counts::brute_force_connected(1, 0) == 1);
  CHECK(counts::brute_force_connected(2, 1) == 1);
  CHECK_THROWS_AS(counts::brute_force_connected(9, 8), std::invalid_argument);
}

TEST_CASE("table matches brute force for n <= 6") {
  counts::CountTable table(6);
  for (int n = 1; n <= 6; ++n) {
    long long edges = static_cast<long long>(n) * (n - 1) / 2;
    for (long long m = 0; m <= edges; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(table.connected(n, m) == counts::brute_force_connected(n, static_cast<int>(m)));
    }
  }
  CHECK(table.connected(3, 3) == 1);
  CHECK(table.connected(4, 4) == 15);
  CHECK(table.connected(5, 5) == 222);
}

TEST_CASE("table invariants") {
  counts::CountTable table(10);
  // Cayley column
  for (int n = 2; n <= 10; ++n) CHECK(table.connected(n, n - 1) == counts::cayley_count(n));
  // row sums against the known totals of connected labelled graphs
  const Count totals[] = {Count(1),     Count(1),      Count(4),
                          Count(38),    Count(728),    Count(26704),
                          Count(1866256), Count(251548592)};
  for (int n = 1; n <= 8; ++n) CHECK(table.connected_total(n) == totals[n - 1]);
  // dominated by the total graph count; single complete-graph entry
  for (int n = 2; n <= 10; ++n) {
    long long edges = static_cast<long long>(n) * (n - 1) / 2;
    CHECK(table.connected(n, edges) == 1);
    for (long long m = 0; m <= edges; ++m) {
      CHECK(table.connected(n, m) <= counts::total_graphs(n, m));
      bool positive = table.connected(n, m) > 0;
      CHECK(positive == (m >= n - 1 && m <= edges));
    }
  }
}

TEST_CASE("banded table matches full table on its stored range") {
  counts::CountTable full(12);
  counts::CountTable band(12, 3);
  for (int n = 2; n <= 12; ++n) {
    for (long long m = n - 1; m <= band.row_top(n); ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(band.connected(n, m) == full.connected(n, m));
    }
  }
}

TEST_CASE("table capacity errors") {
  counts::CountTable table(6, 1);
  CHECK_THROWS_AS(table.connected(7, 6), std::out_of_range);
  CHECK_THROWS_AS(table.connected(6, 15), std::out_of_range);  // beyond band
  CHECK(table.connected(6, 5) == counts::cayley_count(6));
  CHECK_THROWS_AS(counts::CountTable(0), std::invalid_argument);
}
