#pragma once

#include <vector>

#include "critwin/count.hpp"
#include "critwin/real.hpp"

namespace critwin::asym {

// Solution of x = (1/y) artanh(y) for y in [0,1), with y(1) = 0.
// Residual |(1/y) artanh y - x| <= 1e-14 max(1, x). Rejects x < 1.
double surplus_ratio_y(double x);

// Same solution represented as 1 - y, accurate when y is close to 1.
double surplus_ratio_one_minus_y(double x);

// e^{phi(x)} = 2 e^{-x} y^{1-x} / sqrt(1-y^2), continuously 2/e at x = 1.
double phi_exp(double x);
// phi(x) itself (log of the above); useful for n*phi without overflow.
double phi_log(double x);

// a(x) = x(x+1)(1-y) + log(1-x+xy) - (1/2) log(1-x+xy^2), a(1) = 2 + log(3/2)/2.
// Throws std::domain_error if a log argument is nonpositive.
double a_correction(double x);

// Leading-order asymptotic estimate of C(n, n+k):
//   binom(N, n+k) e^{n phi(x)} e^{a(x)},  x = 1 + k/n, N = binom(n,2),
// with the bounded per-surplus constant set to 1. Requires 0 <= k <= N-n.
Real asymptotic_connected_count(int n, long long k);

// Explicit upper-bound form c_cal * binom(N, n+k) (2/e)^n (e n / k)^{k/2},
// with k^{k/2} = 1 at k = 0. Requires n >= 3 and 0 <= k <= n.
Real connected_count_upper(int n, long long k, double c_cal);

// binom(N, n+k) for k >= -1 (total graphs, connected or not), and its
// Stirling relaxation N^{n+k}/(n+k)!.
counts::Count crude_bound(int n, long long k);
Real crude_bound_stirling(int n, long long k);

// Sparse/dense split of the surplus series, normalized by n^{n-2}:
//   A(n,z) = n^{-(n-2)} sum_{k=0}^{n}  C(n,n+k) z^{k+1}
//   B(n,z) = n^{-(n-2)} sum_{k>=floor(n/2)} C(n,n+k) z^{k+1}
Real sparse_sum_A(int n, const Real& z, const counts::CountTable& table);
Real dense_sum_B(int n, const Real& z, const counts::CountTable& table);

// Bound evaluators. sparse_bound_A returns c_eps * exp((1/24+eps) e t^2 z^2 n^3)
// at t^2 = 3e (c_eps from calibration). dense_bound_B returns K_n z^2 with K_n
// assembled from the explicit geometric-series + Stirling chain; it requires
// z <= 3/(e n) and throws std::domain_error otherwise.
Real sparse_bound_A(int n, const Real& z, double eps, double c_eps);
Real dense_bound_B(int n, const Real& z);

// sum_{k>=0} x^k / k^{k/2} (0^0 = 1), summed until term < 1e-30 * partial.
Real kk_series(double x);

// n^{n-2} (sparse_bound_A + dense_bound_B); hypothesis failures propagate.
Real surplus_upper(int n, const Real& z, double eps, double c_eps);

// Calibration sweeps: largest exact/bound-form ratio over the stated ranges.
double calibrate_prop_constant(const counts::CountTable& table, int n_lo, int n_hi);
double calibrate_sparse_constant(const counts::CountTable& table, int n_hi,
                                 double eps, const std::vector<double>& x_grid);

}  // namespace critwin::asym
