#pragma once

#include "critwin/real.hpp"

namespace critwin::profiles {

enum class Method { Quadrature, Asymptotic, ClosedForm };

struct ProfileEval {
  double s = 0;
  Real value;
  Method method = Method::Quadrature;
  Real est_abs_error;
};

// I(s) = (e/sqrt(2 pi)) int_0^inf e^{-x^2/2 + s x} x^{-1/2} dx, via x = u^2.
ProfileEval profile_I(double s, double tol = 1e-10);

// I_k(s) = int_0^inf x^k e^{-x^4/4 - s x^2/2} dx for real k > -1. For
// -1 < k < 0 the integrable endpoint singularity is removed exactly through
// I_k = (I_{k+4} + s I_{k+2}) / (k+1) (integration by parts).
ProfileEval profile_Ik(double k, double s, double tol = 1e-10);

enum class Branch { Minus, Plus };

// Large-|s| forms e|2s|^{-1/2} (minus) and e s^{-1/2} e^{s^2/2} (plus);
// diagnostic only, never silently substituted for the quadrature.
Real asymptotic_I(double s, Branch branch);

// Principal Lambert branch, W0(z) e^{W0(z)} = z, z >= -1/e. Power series for
// |z| <= 0.2, Halley refinement elsewhere; W0(-1/e) = -1 exactly.
Real lambert_w0(const Real& z);

// Closed form of the V -> infinity one-point limit, -(e/p) W0(-p/e), p in [0,1].
Real tree_one_point_limit(const Real& p);

// Independent series route: sum_{n>=1} n^{n-1}/n! (p/e)^{n-1}, exact term
// summation completed with an Euler-Maclaurin tail (needed near p = 1 where
// the terms decay like n^{-3/2}).
Real tree_one_point_series(const Real& p);

// Spin profile f_n(s) = I_{n+1}(s) / (n I_{n-1}(s)); real n > 0 accepted so
// the n -> 0 limit can be probed.
Real spin_profile(double n, double s);

// k-th moment of the Brownian excursion area, from the Riccati recurrence for
// the asymptotic-series coefficients of Ai'/Ai (exact rationals inside).
Real excursion_area_moment(int k);

// Psi(x) = E exp(x * excursion area) = sum_{k<=K} M_k x^k / k!. With K < 0
// the order is chosen so the last term is below 1e-12 of the partial sum;
// throws if the cached moment range cannot reach that target.
Real excursion_mgf(const Real& x, int K = -1);

// f_perc(s) = int_0^infty x^2 dsigma_s with
//   dsigma_s = (2 pi)^{-1/2} x^{-5/2} Psi(x^{3/2}) e^{-x^3/6 + s x^2/2 - s^2 x/2} dx,
// via x = u^2. `scheme` 0: adaptive Gauss-Kronrod (default), 1: tanh-sinh
// (independent cross-check scheme).
ProfileEval perc_profile(double s, double tol = 1e-9, int scheme = 0);

}  // namespace critwin::profiles
