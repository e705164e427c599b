#include "critwin/profiles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace critwin::profiles {

namespace {

using boost::math::quadrature::gauss_kronrod;

struct Quad {
  double value;
  double err;
};

template <typename F>
Quad integrate(F f, double a, double b, double tol) {
  double err = 0;
  double v = gauss_kronrod<double, 15>::integrate(f, a, b, 12, tol, &err);
  return {v, err};
}

}  // namespace

ProfileEval profile_I(double s, double tol) {
  // x = u^2: I(s) = (e/sqrt(2 pi)) * 2 * int_0^inf e^{-u^4/2 + s u^2} du
  auto f = [s](double u) {
    double u2 = u * u;
    return std::exp(-0.5 * u2 * u2 + s * u2);
  };
  // integrand < 1e-20 * peak beyond U
  double peak = s > 0 ? 0.5 * s * s : 0.0;
  double U = 2.0;
  while (0.5 * std::pow(U, 4) - s * U * U + peak < 50 && U < 1e3) U += 0.5;
  auto q = integrate(f, 0.0, U, tol * 1e-3);
  double c = 2 * M_E / std::sqrt(2 * M_PI);
  ProfileEval out;
  out.s = s;
  out.value = Real(c * q.value);
  out.method = Method::Quadrature;
  out.est_abs_error = Real(c * (q.err + 1e-16 * std::abs(q.value)));
  if (!(q.err < tol * std::max(1.0, std::abs(q.value)) * 10 + tol))
    throw std::runtime_error("profile_I: quadrature did not converge");
  return out;
}

ProfileEval profile_Ik(double k, double s, double tol) {
  if (k <= -1) throw std::invalid_argument("profile_Ik: need k > -1");
  if (k > 400)
    throw std::invalid_argument("profile_Ik: order too large for double-range quadrature");
  if (k < 0) {
    // I_k = (I_{k+4} + s I_{k+2}) / (k+1)
    ProfileEval a = profile_Ik(k + 4, s, tol);
    ProfileEval b = profile_Ik(k + 2, s, tol);
    ProfileEval out;
    out.s = s;
    out.value = (a.value + Real(s) * b.value) / Real(k + 1);
    out.method = Method::Quadrature;
    out.est_abs_error =
        (a.est_abs_error + abs(Real(s)) * b.est_abs_error) / Real(k + 1);
    return out;
  }
  auto f = [k, s](double x) {
    if (x <= 0) return k == 0 ? 1.0 : 0.0;
    double lg = -0.25 * std::pow(x, 4) - 0.5 * s * x * x + k * std::log(x);
    return std::exp(lg);
  };
  double U = 2.0;
  double peak = s < 0 ? std::abs(s) * std::abs(s) / 4 : 0.0;  // max of -x^4/4 - sx^2/2 at x^2 = -s
  while (0.25 * std::pow(U, 4) + 0.5 * s * U * U - k * std::log(U) + peak < 50 && U < 1e3)
    U += 0.5;
  // tanh-sinh: handles the x^k endpoint behaviour for fractional k
  boost::math::quadrature::tanh_sinh<double> ts;
  double err = 0, l1 = 0;
  double v = ts.integrate(f, 0.0, U, std::max(tol * 1e-2, 1e-14), &err, &l1);
  ProfileEval out;
  out.s = s;
  out.value = Real(v);
  out.method = Method::Quadrature;
  double abs_err = err * l1 + 1e-15 * std::abs(v);
  out.est_abs_error = Real(abs_err);
  if (!(abs_err < std::max(tol, 1e-13 * std::abs(v)) * 100 + tol))
    throw std::runtime_error("profile_Ik: quadrature did not converge");
  return out;
}

Real asymptotic_I(double s, Branch branch) {
  if (std::abs(s) < 1) throw std::invalid_argument("asymptotic_I: need |s| >= 1");
  if (branch == Branch::Minus) {
    if (s >= 0) throw std::invalid_argument("asymptotic_I: minus branch needs s < 0");
    return real_e() / sqrt(Real(-2 * s));
  }
  if (s <= 0) throw std::invalid_argument("asymptotic_I: plus branch needs s > 0");
  Real rs(s);
  return real_e() / sqrt(rs) * exp(rs * rs / 2);
}

Real lambert_w0(const Real& z) {
  const Real me_inv = -1 / real_e();
  if (z < me_inv) throw std::domain_error("lambert_w0: z < -1/e");
  if (z == me_inv) return Real(-1);
  if (z.is_zero()) return Real(0);
  if (abs(z) <= Real("0.2")) {
    // W0(z) = sum (-n)^{n-1} z^n / n!; t_{n+1}/t_n = -(1+1/n)^{n-1} z
    Real t = z, sum = z;
    for (long long n = 1; n < 500; ++n) {
      t *= -pow(1 + Real(1) / n, n - 1) * z;
      sum += t;
      if (abs(t) < abs(sum) * pow(Real(2), -static_cast<long long>(precision_bits()) - 8))
        break;
    }
    return sum;
  }
  // seed, then Halley at full precision (cubic convergence)
  double zd = static_cast<double>(z);
  double w;
  if (zd < -0.25) {
    double q = 2 * (M_E * zd + 1);
    double sq = std::sqrt(std::max(q, 0.0));
    w = -1 + sq - q / 3 + 11.0 / 72.0 * sq * q;
  } else if (zd < 3) {
    w = zd * (1 - zd + 1.5 * zd * zd) / (1 + 0.5 * zd);  // crude; Halley fixes it
    if (zd > 0.5) w = std::log1p(zd) * 0.7;
  } else {
    double l1 = std::log(zd), l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }
  Real wr(w);
  for (int it = 0; it < 40; ++it) {
    Real ew = exp(wr);
    Real f = wr * ew - z;
    Real denom = ew * (wr + 1) - (wr + 2) * f / (2 * wr + 2);
    Real step = f / denom;
    wr -= step;
    if (abs(step) <= abs(wr) * pow(Real(2), -static_cast<long long>(precision_bits())) + Real(1e-60))
      break;
  }
  return wr;
}

Real tree_one_point_limit(const Real& p) {
  if (p < 0 || p > 1) throw std::domain_error("tree_one_point_limit: p must be in [0,1]");
  if (p.is_zero()) return Real(1);
  return -(real_e() / p) * lambert_w0(-p / real_e());
}

namespace {

// digamma(x) for large x via the asymptotic series; used only with x >= 2000
// where the truncation error is far below the working tolerance.
Real digamma_large(const Real& x) {
  Real inv = 1 / x, inv2 = inv * inv;
  return log(x) - inv / 2 - inv2 / 12 + inv2 * inv2 / 120 - inv2 * inv2 * inv2 / 252;
}

// adaptive Simpson in Real arithmetic (smooth integrands only)
Real simpson_adapt(const std::function<Real(const Real&)>& f, const Real& a,
                   const Real& b, const Real& fa, const Real& fm, const Real& fb,
                   const Real& whole, const Real& tol, int depth) {
  Real m = (a + b) / 2;
  Real lm = (a + m) / 2, rm = (m + b) / 2;
  Real flm = f(lm), frm = f(rm);
  Real left = (m - a) / 6 * (fa + 4 * flm + fm);
  Real right = (b - m) / 6 * (fm + 4 * frm + fb);
  Real diff = left + right - whole;
  if (depth <= 0 || abs(diff) <= 15 * tol) return left + right + diff / 15;
  return simpson_adapt(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_adapt(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

Real integrate_real(const std::function<Real(const Real&)>& f, const Real& a,
                    const Real& b, const Real& tol) {
  Real fa = f(a), fb = f(b), fm = f((a + b) / 2);
  Real whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson_adapt(f, a, b, fa, fm, fb, whole, tol, 30);
}

}  // namespace

Real tree_one_point_series(const Real& p) {
  if (p < 0 || p > 1) throw std::domain_error("tree_one_point_series: p must be in [0,1]");
  if (p.is_zero()) return Real(1);
  const Real pe = p / real_e();
  const long long N = 4000;
  Real t(1), sum(1);
  bool converged = false;
  long long n = 1;
  for (; n < N; ++n) {
    t *= pow(1 + Real(1) / n, n - 1) * pe;
    sum += t;
    if (t < sum * 1e-25) {
      converged = true;
      break;
    }
  }
  if (converged) return sum;
  // Euler-Maclaurin completion of sum_{n >= N+1} g(n),
  // g(t) = exp[(t-1)(ln p - 1) + (t-1) ln t - lngamma(t+1)]
  const Real lp = log(p);
  auto g = [&](const Real& x) -> Real {
    return exp((x - 1) * (lp - 1) + (x - 1) * log(x) - lgamma(x + 1));
  };
  auto gprime = [&](const Real& x) -> Real {
    return g(x) * (lp + log(x) - 1 / x - digamma_large(x + 1));
  };
  const Real a = Real(N + 1);
  // int_a^inf g = int_0^1 g(a/u^2) 2a/u^3 du (integrand -> 2 c / sqrt(a) at u -> 0)
  auto h = [&](const Real& u) -> Real {
    if (u.is_zero()) {
      // limit: g(t) ~ (e/sqrt(2 pi)) p^{t-1} t^{-3/2}; zero unless p = 1
      if (p == 1) return 2 * real_e() / sqrt(2 * real_pi() * a);
      return Real(0);
    }
    Real x = a / (u * u);
    return g(x) * 2 * a / (u * u * u);
  };
  Real integral = integrate_real(h, Real(0), Real(1), Real(1e-20));
  Real tail = integral + g(a) / 2 - gprime(a) / 12;
  return sum + tail;
}

Real spin_profile(double n, double s) {
  if (n <= 0) throw std::invalid_argument("spin_profile: n must be > 0");
  ProfileEval up = profile_Ik(n + 1, s, 1e-12);
  ProfileEval dn = profile_Ik(n - 1, s, 1e-12);
  return up.value / (Real(n) * dn.value);
}

namespace {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

constexpr int kMomentCap = 448;

// Moments of the Brownian excursion area from the Riccati recurrence for the
// asymptotic-series coefficients s_k of -Ai'(z)/Ai(z) = sqrt(z) S(z^{-3/2}),
//   S^2 - (w/2) S + (3/2) w^2 S' = 1   (exact rationals),
//   M_k = sqrt(2 pi) k! (-1)^{k+1} s_k 2^{(1-k)/2} / Gamma((3k-1)/2).
// Built once per precision up to kMomentCap, then read without locking.
struct MomentData {
  std::vector<Real> m;          // M_k
  std::vector<double> ratio_d;  // (M_k / k!) / (M_{k-1} / (k-1)!), ratio_d[0] unused
};

const MomentData& moment_data() {
  static std::mutex mu;
  static unsigned built_bits = 0;
  static MomentData data;
  std::lock_guard<std::mutex> lock(mu);
  if (built_bits != precision_bits()) {
    std::vector<Rational> s(kMomentCap + 1);
    s[0] = 1;
    for (int k = 1; k <= kMomentCap; ++k) {
      Rational acc(0);
      for (int i = 1; i < k; ++i) acc += s[i] * s[k - i];
      acc += Rational(3 * k - 4, 2) * s[k - 1];
      s[k] = acc / -2;
    }
    data.m.assign(kMomentCap + 1, Real(0));
    data.ratio_d.assign(kMomentCap + 1, 0.0);
    Real fact(1);
    for (int k = 0; k <= kMomentCap; ++k) {
      if (k >= 2) fact *= k;
      Real sign = (k % 2 == 0) ? Real(-1) : Real(1);
      data.m[k] = sqrt(2 * real_pi()) * fact * sign * Real(s[k]) *
                  pow(Real(2), Real(1 - k) / 2) / tgamma(Real(3 * k - 1) / 2);
      if (k >= 1) data.ratio_d[k] = static_cast<double>(data.m[k] / (data.m[k - 1] * k));
    }
    built_bits = precision_bits();
  }
  return data;
}

// fast double path for quadrature integrands; term-ratio form avoids
// coefficient underflow
double excursion_mgf_d(double x) {
  if (x < 0) throw std::domain_error("excursion_mgf: x must be >= 0");
  if (x * x / 24 > 600) throw std::domain_error("excursion_mgf: x out of supported range");
  const auto& d = moment_data();
  double sum = 1, term = 1;
  for (int k = 1; k <= kMomentCap; ++k) {
    term *= x * d.ratio_d[k];
    sum += term;
    if (term < sum * 1e-12) return sum;
  }
  throw std::runtime_error("excursion_mgf: series did not reach 1e-12 within cached moments");
}

}  // namespace

Real excursion_area_moment(int k) {
  if (k < 0 || k > kMomentCap)
    throw std::invalid_argument("excursion_area_moment: k out of cached range");
  return moment_data().m[k];
}

Real excursion_mgf(const Real& x, int K) {
  if (x < 0) throw std::domain_error("excursion_mgf: x must be >= 0");
  if (K > kMomentCap)
    throw std::invalid_argument("excursion_mgf: K beyond cached moment range");
  const auto& d = moment_data();
  Real sum(1), xpow(1), fact(1);
  const int top = K < 0 ? kMomentCap : K;
  for (int k = 1; k <= top; ++k) {
    xpow *= x;
    fact *= k;
    Real t = d.m[k] * xpow / fact;
    sum += t;
    if (K < 0 && t < sum * 1e-12) return sum;
  }
  if (K < 0)
    throw std::runtime_error("excursion_mgf: series did not reach 1e-12 within cached moments");
  return sum;
}

ProfileEval perc_profile(double s, double tol, int scheme) {
  // x = u^2: f_perc(s) = (2/sqrt(2 pi)) int_0^inf Psi(u^3) e^{-u^6/6 + s u^4/2 - s^2 u^2/2} du
  auto f = [s](double u) {
    double u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u4 * u2;
    double lg = -u6 / 6 + 0.5 * s * u4 - 0.5 * s * s * u2;
    return excursion_mgf_d(u3) * std::exp(lg);
  };
  // truncate where e^{-x^3/6} is below 1e-16 of the peak (x = u^2 scale)
  double U = 1.5;
  auto logmass = [s](double u) {
    double u2 = u * u, u4 = u2 * u2, u6 = u4 * u2;
    double lpsi = u6 / 24.0;  // Psi(x^{3/2}) grows like e^{x^3/24}
    return -u6 / 6 + 0.5 * s * u4 - 0.5 * s * s * u2 + lpsi;
  };
  double peak = logmass(0.0);
  for (double u = 0; u < 4; u += 0.05) peak = std::max(peak, logmass(u));
  while (logmass(U) - peak > -40 && U < 6) U += 0.25;

  ProfileEval out;
  out.s = s;
  out.method = Method::Quadrature;
  if (scheme == 0) {
    auto q = integrate(f, 0.0, U, tol * 1e-2);
    double c = 2.0 / std::sqrt(2 * M_PI);
    out.value = Real(c * q.value);
    out.est_abs_error = Real(c * (q.err + 1e-15 * std::abs(q.value)));
  } else {
    boost::math::quadrature::tanh_sinh<double> ts;
    double err = 0, l1 = 0;
    double v = ts.integrate(f, 0.0, U, tol * 1e-2, &err, &l1);
    double c = 2.0 / std::sqrt(2 * M_PI);
    out.value = Real(c * v);
    out.est_abs_error = Real(c * (err * l1 + 1e-15 * std::abs(v)));
  }
  return out;
}

}  // namespace critwin::profiles
