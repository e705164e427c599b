#pragma once

#include <optional>

#include "critwin/real.hpp"

namespace critwin {

// Certificate that the sum of the omitted terms past `cutoff` (the first
// omitted index) is at most `bound`. The reported partial sum plus `bound`
// brackets the true sum from above.
struct TailCertificate {
  long long cutoff = 0;
  Real bound;
  double gamma = 0, kappa = 0, lambda = 0, b = 0;
};

// Rigorous upper bound on sum_{n >= ceil(b sqrt(V))} n^{-gamma}
// exp(-kappa n^2/V + lambda n/sqrt(V)):
//   (b sqrt V)^{-gamma} * int_{b sqrt V - 1}^inf exp(-kappa y^2/V + lambda y/sqrt V) dy,
// the integral in closed form through the complementary error function.
// Preconditions: b*sqrt(V) >= 2 and the summand must be decreasing on
// [b sqrt V, inf) — checked numerically; throws std::domain_error otherwise.
Real tail_bound(double gamma, double kappa, double lambda, double b, long long V);

namespace detail {

// log of the bound above (natural log), for overflow-free comparisons;
// returns nullopt when the monotonicity precondition fails.
std::optional<double> log_tail_bound(double gamma, double kappa, double lambda,
                                     double b, long long V);

}  // namespace detail

// Outcome of a series evaluation: value at the working precision, the number
// of summed terms, and a tail certificate when the sum was truncated.
struct SeriesResult {
  Real value;
  long long terms = 0;
  std::optional<TailCertificate> tail;
};

enum class SumMode { Auto, Full, Truncated };

struct EvalOptions {
  SumMode mode = SumMode::Auto;
  double rel_tail_target = 1e-12;   // certify tail < target * partial sum
  long long full_threshold = 20000; // Auto: full summation for V up to here
};

}  // namespace critwin
