#include "critwin/tail.hpp"

#include <cmath>
#include <stdexcept>

namespace critwin {

namespace {

// log of a rigorous upper bound for erfc(x)
double log_erfc_upper(double x) {
  if (x < 6) return std::log(std::erfc(x) * (1 + 1e-12));
  // erfc(x) <= exp(-x^2)/(x sqrt(pi)) for x > 0
  return -x * x - std::log(x) - 0.5723649429247001;  // log(sqrt(pi))
}

// Is y^{-gamma} exp(-kappa y^2/V + lambda y/sqrt V) decreasing on [n0, inf)?
// d/dy log = -gamma/y - 2 kappa y/V + lambda/sqrt(V); concave with stationary
// point y* = sqrt(gamma V / (2 kappa)), so it suffices to check max(y*, n0).
bool summand_decreasing(double gamma, double kappa, double lambda, double n0,
                        double V) {
  double y = n0;
  if (gamma > 0) {
    double ystar = std::sqrt(gamma * V / (2 * kappa));
    if (ystar > y) y = ystar;
  }
  double d = -2 * kappa * y / V + lambda / std::sqrt(V);
  if (gamma > 0) d -= gamma / y;
  return d < 0;
}

}  // namespace

namespace detail {

std::optional<double> log_tail_bound(double gamma, double kappa, double lambda,
                                     double b, long long V) {
  if (!(kappa > 0) || gamma < 0 || V < 1) return std::nullopt;
  const double sv = std::sqrt(static_cast<double>(V));
  const double n0 = b * sv;
  if (n0 < 2) return std::nullopt;
  if (!summand_decreasing(gamma, kappa, lambda, n0, static_cast<double>(V)))
    return std::nullopt;
  // int_{n0-1}^inf exp(-kappa y^2/V + lambda y/sqrt V) dy
  //   = exp(lambda^2/(4 kappa)) * sqrt(pi V/kappa)/2 * erfc(sqrt(kappa/V) (n0-1-mu)),
  // mu = lambda sqrt(V) / (2 kappa).
  const double mu = lambda * sv / (2 * kappa);
  const double arg = std::sqrt(kappa / V) * (n0 - 1 - mu);
  double lg = lambda * lambda / (4 * kappa) +
              0.5 * std::log(M_PI * V / kappa) - std::log(2.0) +
              log_erfc_upper(arg) - gamma * std::log(n0);
  return lg + 1e-10;  // rounding slack, keeps the bound an upper bound
}

}  // namespace detail

Real tail_bound(double gamma, double kappa, double lambda, double b, long long V) {
  if (!(kappa > 0)) throw std::invalid_argument("tail_bound: kappa must be > 0");
  if (gamma < 0) throw std::invalid_argument("tail_bound: gamma must be >= 0");
  if (b * std::sqrt(static_cast<double>(V)) < 2)
    throw std::domain_error("tail_bound: need b*sqrt(V) >= 2");
  auto lg = detail::log_tail_bound(gamma, kappa, lambda, b, V);
  if (!lg)
    throw std::domain_error(
        "tail_bound: summand not decreasing past b*sqrt(V); bound invalid");
  return exp(Real(*lg));
}

}  // namespace critwin
