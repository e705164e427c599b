#include "critwin/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace critwin::asym {

namespace {

// (1/y) artanh(y), series form near 0 to avoid 0/0.
double xy_of_y(double y) {
  if (y < 0.25) {
    double y2 = y * y, term = y2, s = 1;
    for (int m = 1; m < 40; ++m) {
      s += term / (2 * m + 1);
      term *= y2;
      if (term < 1e-18) break;
    }
    return s;
  }
  return std::atanh(y) / y;
}

// x as a function of d = 1-y:  (1/(1-d)) * artanh(1-d), artanh(1-d) in log form.
double xy_of_d(double d) {
  return 0.5 * std::log((2 - d) / d) / (1 - d);
}

// Solve in d = 1-y; robust for all x > 1 (bisection in log d).
double solve_d(double x) {
  double lo = std::log(std::max(1e-300, 0.5 * std::exp(-2 * x - 2)));  // y side above root
  double hi = 0.0;                                                     // d = 1 (y = 0)
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (xy_of_d(std::exp(mid)) > x)
      lo = mid;  // d too small means x(d) too large
    else
      hi = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace

double surplus_ratio_one_minus_y(double x) {
  if (x < 1) throw std::domain_error("surplus ratio: x must be >= 1");
  if (x == 1) return 1.0;
  return solve_d(x);
}

double surplus_ratio_y(double x) {
  if (x < 1) throw std::domain_error("surplus ratio: x must be >= 1");
  if (x == 1) return 0.0;
  if (x > 1.5) return 1.0 - solve_d(x);
  // bisection in y on [0, 1), initial upper bracket y <= sqrt(3(x-1))
  double lo = 0.0, hi = std::min(std::sqrt(3 * (x - 1)) * 1.0000001, 1 - 1e-16);
  while (xy_of_y(hi) < x) hi = 0.5 * (1 + hi);
  for (int it = 0; it < 90; ++it) {
    double mid = 0.5 * (lo + hi);
    if (xy_of_y(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  double y = 0.5 * (lo + hi);
  // Newton polish: f(y) = artanh(y)/y, f' = (y/(1-y^2) - artanh y)/y^2
  for (int it = 0; it < 3; ++it) {
    double f = xy_of_y(y), at = f * y;
    double fp = (y / (1 - y * y) - at) / (y * y);
    double step = (f - x) / fp;
    double ynew = y - step;
    if (ynew > 0 && ynew < 1) y = ynew;
  }
  return y;
}

double phi_log(double x) {
  if (x < 1) throw std::domain_error("phi: x must be >= 1");
  if (x == 1) return std::log(2.0) - 1.0;  // y^{1-x} := 1 at x = 1
  double d = solve_d(x);
  double log_y = std::log1p(-d);
  return std::log(2.0) - x + (1 - x) * log_y - 0.5 * std::log(d * (2 - d));
}

double phi_exp(double x) { return std::exp(phi_log(x)); }

double a_correction(double x) {
  if (x < 1) throw std::domain_error("a: x must be >= 1");
  if (x == 1) return 2.0 + 0.5 * std::log(1.5);
  double d = solve_d(x);
  // 1 - x + x y = 1 - x d;  1 - x + x y^2 = 1 - x d (2 - d)
  double u1 = 1 - x * d;
  double u2 = 1 - x * d * (2 - d);
  if (u1 <= 0 || u2 <= 0)
    throw std::domain_error("a: nonpositive log argument (solver failure)");
  return x * (x + 1) * d + std::log(u1) - 0.5 * std::log(u2);
}

Real asymptotic_connected_count(int n, long long k) {
  if (n < 3) throw std::invalid_argument("asymptotic_connected_count: n must be >= 3");
  long long N = static_cast<long long>(n) * (n - 1) / 2;
  if (k < 0 || k > N - n)
    throw std::invalid_argument("asymptotic_connected_count: need 0 <= k <= N - n");
  double x = 1 + static_cast<double>(k) / n;
  Real expo = exp(Real(n * phi_log(x) + a_correction(x)));
  return Real(counts::binomial(N, n + k)) * expo;
}

Real connected_count_upper(int n, long long k, double c_cal) {
  if (n < 3) throw std::invalid_argument("connected_count_upper: n must be >= 3");
  if (k < 0 || k > n)
    throw std::invalid_argument("connected_count_upper: bound regime is 0 <= k <= n");
  long long N = static_cast<long long>(n) * (n - 1) / 2;
  Real v = Real(counts::binomial(N, n + k)) * pow(2 / real_e(), n);
  if (k > 0) v *= pow(real_e() * n / Real(k), Real(k) / 2);
  return Real(c_cal) * v;
}

counts::Count crude_bound(int n, long long k) {
  if (n < 2) throw std::invalid_argument("crude_bound: n must be >= 2");
  if (k < -1) throw std::invalid_argument("crude_bound: k must be >= -1");
  long long N = static_cast<long long>(n) * (n - 1) / 2;
  return counts::binomial(N, n + k);
}

Real crude_bound_stirling(int n, long long k) {
  if (n < 2) throw std::invalid_argument("crude_bound_stirling: n must be >= 2");
  long long N = static_cast<long long>(n) * (n - 1) / 2;
  long long m = n + k;
  if (m < 0) return Real(0);
  return exp(Real(m) * log(Real(N)) - lgamma(Real(m + 1)));
}

Real sparse_sum_A(int n, const Real& z, const counts::CountTable& table) {
  if (n < 3) throw std::invalid_argument("sparse_sum_A: n must be >= 3");
  if (n > table.n_max()) throw std::out_of_range("sparse_sum_A: n beyond table capacity");
  long long N = static_cast<long long>(n) * (n - 1) / 2;
  long long ktop = std::min<long long>(n, N - n);
  if (table.row_top(n) < n + ktop)
    throw std::out_of_range("sparse_sum_A: banded table too narrow for k <= n");
  Real acc(0);
  for (long long k = ktop; k >= 0; --k)
    acc = acc * z + Real(table.connected(n, n + k));
  Real npow = pow(Real(n), n - 2);
  return acc * z / npow;
}

Real dense_sum_B(int n, const Real& z, const counts::CountTable& table) {
  if (n < 3) throw std::invalid_argument("dense_sum_B: n must be >= 3");
  if (n > table.n_max()) throw std::out_of_range("dense_sum_B: n beyond table capacity");
  long long N = static_cast<long long>(n) * (n - 1) / 2;
  long long klo = n / 2, ktop = N - n;
  if (table.row_top(n) < N)
    throw std::out_of_range("dense_sum_B: requires full table rows");
  if (klo > ktop) return Real(0);
  Real acc(0);
  for (long long k = ktop; k >= klo; --k)
    acc = acc * z + Real(table.connected(n, n + k));
  Real npow = pow(Real(n), n - 2);
  return acc * pow(z, klo + 1) / npow;
}

Real sparse_bound_A(int n, const Real& z, double eps, double c_eps) {
  if (n < 3) throw std::invalid_argument("sparse_bound_A: n must be >= 3");
  if (z < 0) throw std::domain_error("sparse_bound_A: z must be >= 0");
  // t^2 = 3e, so (1/24 + eps) e t^2 = (1/24 + eps) 3 e^2
  Real expo = (Real(1) / 24 + Real(eps)) * 3 * real_e() * real_e() * z * z * pow(Real(n), 3);
  return Real(c_eps) * exp(expo);
}

Real dense_bound_B(int n, const Real& z) {
  if (n < 3) throw std::invalid_argument("dense_bound_B: n must be >= 3");
  if (z < 0) throw std::domain_error("dense_bound_B: z must be >= 0");
  if (z > 3 / (real_e() * n))
    throw std::domain_error("dense_bound_B: hypothesis z <= 3/(e n) violated; bound invalid");
  // Chain: B <= z^{1+nu}/n^{n-2} * N^{n+nu}/(n+nu)! * 1/(1-q), q = Nz/(n+nu) <= 1/e,
  // then z^{1+nu} <= z^2 (e/3)(3/e)^nu n^{1-nu} and Stirling (n+nu)! >= sqrt(2 pi (n+nu)) ((n+nu)/e)^{n+nu}.
  long long nu = n / 2;
  long long N = static_cast<long long>(n) * (n - 1) / 2;
  Real e = real_e();
  Real log_k = (1 - log(Real(3))) + Real(nu) * (log(Real(3)) - 1) +
               Real(1 - nu) * log(Real(n)) - Real(n - 2) * log(Real(n)) +
               Real(n + nu) * (log(Real(N)) + 1 - log(Real(n + nu))) -
               log(2 * real_pi() * Real(n + nu)) / 2 + log(e / (e - 1));
  return exp(log_k) * z * z;
}

Real kk_series(double x) {
  if (x < 0) throw std::domain_error("kk_series: x must be >= 0");
  Real sum(1);  // k = 0 with 0^0 = 1
  if (x == 0) return sum;
  Real lx = log(Real(x));
  for (long long k = 1; k < 1000000; ++k) {
    Real t = exp(Real(k) * lx - Real(k) * log(Real(k)) / 2);
    sum += t;
    if (t < 1e-30 * sum) break;
  }
  return sum;
}

Real surplus_upper(int n, const Real& z, double eps, double c_eps) {
  Real bound = sparse_bound_A(n, z, eps, c_eps) + dense_bound_B(n, z);
  return pow(Real(n), n - 2) * bound;
}

namespace {

// round up so the calibrated constant still dominates after double rounding
double round_up(double v) {
  return std::nextafter(std::nextafter(v, 1e300), 1e300);
}

}  // namespace

double calibrate_prop_constant(const counts::CountTable& table, int n_lo, int n_hi) {
  double worst = 0;
  for (int n = std::max(3, n_lo); n <= n_hi; ++n) {
    long long N = static_cast<long long>(n) * (n - 1) / 2;
    for (long long k = 0; k <= std::min<long long>(n, N - n); ++k) {
      const counts::Count& exact = table.connected(n, n + k);
      if (exact.is_zero()) continue;
      Real ratio = Real(exact) / connected_count_upper(n, k, 1.0);
      worst = std::max(worst, static_cast<double>(ratio));
    }
  }
  return round_up(worst);
}

double calibrate_sparse_constant(const counts::CountTable& table, int n_hi,
                                 double eps, const std::vector<double>& x_grid) {
  double worst = 0;
  for (int n = 3; n <= n_hi; ++n) {
    for (double xg : x_grid) {
      Real z = Real(xg) / pow(Real(n), Real(1.5));
      Real a = sparse_sum_A(n, z, table);
      Real form = sparse_bound_A(n, z, eps, 1.0);
      worst = std::max(worst, static_cast<double>(a / form));
    }
  }
  return round_up(worst);
}

}  // namespace critwin::asym
