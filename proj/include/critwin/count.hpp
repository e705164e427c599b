#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <vector>

namespace critwin::counts {

// Exact nonnegative integer count; arithmetic never rounds.
using Count = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                            boost::multiprecision::et_off>;

// Number of labelled trees on n vertices, n^{n-2}. Rejects n = 0.
Count cayley_count(long long n);

// Exact binomial coefficient; 0 when b < 0 or b > a. Requires a >= 0.
Count binomial(long long a, long long b);

// Number of graphs (connected or not) on n labelled vertices with m edges,
// binom(n(n-1)/2, m); 0 out of range.
Count total_graphs(int n, long long m);

// Counts m-edge subsets of K_n whose union is connected and spans all n
// vertices, by explicit enumeration over edge subsets. Requires n <= 8.
Count brute_force_connected(int n, int m);

// Memoized table of C(n, m), the number of connected labelled graphs on n
// vertices with m edges. Built single-threaded via the component-of-vertex-1
// inclusion-exclusion recurrence
//   C(n,m) = T(n,m) - sum_{j=1}^{n-1} binom(n-1, j-1) sum_i C(j,i) T(n-j, m-i),
// then frozen; reads are safe from any number of threads.
//
// A table may be surplus-banded: with surplus_cap >= 0, row n stores
// m up to (n-1) + surplus_cap + (n_max - n); the extra width toward small n
// is what closes the recurrence inside the band (see row_top). Every stored
// entry is exact. surplus_cap < 0 stores all m up to n(n-1)/2.
class CountTable {
 public:
  explicit CountTable(int n_max, long long surplus_cap = -1);

  int n_max() const { return n_max_; }
  long long surplus_cap() const { return surplus_cap_; }
  bool banded() const { return surplus_cap_ >= 0; }

  // C(n, m); exact zero outside the support. Throws std::out_of_range if n
  // exceeds the capacity or if m falls beyond a banded table's stored range.
  const Count& connected(int n, long long m) const;

  // Largest m stored for row n.
  long long row_top(int n) const;

  // sum_m C(n, m): total connected labelled graphs on n vertices.
  // Requires an unbanded table.
  Count connected_total(int n) const;

 private:
  int n_max_;
  long long surplus_cap_;
  // rows_[n] holds C(n, m) for m in [row_lo(n), row_top(n)]
  std::vector<std::vector<Count>> rows_;
  static long long row_lo(int n) { return n <= 1 ? 0 : n - 1; }
  void build();
};

// C(n, m) through a table (spec-level convenience wrapper).
inline const Count& connected_count(int n, long long m, const CountTable& table) {
  return table.connected(n, m);
}

}  // namespace critwin::counts
