#include "critwin/saw.hpp"

#include <cmath>
#include <stdexcept>

namespace critwin::saw {

counts::Count walk_count(long long V, long long n) {
  if (V < 2) throw std::invalid_argument("walk_count: V must be >= 2");
  if (n < 1 || n > V - 1) throw std::invalid_argument("walk_count: need 1 <= n <= V-1");
  counts::Count c(1);
  for (long long j = 2; j <= n; ++j) c *= (V - j);
  return c;
}

SeriesResult two_point(long long V, const Real& p, const EvalOptions& opt) {
  if (V < 2) throw std::invalid_argument("saw two_point: V must be >= 2");
  if (p < 0) throw std::domain_error("saw two_point: p must be >= 0");

  bool truncate;
  switch (opt.mode) {
    case SumMode::Full: truncate = false; break;
    case SumMode::Truncated: truncate = true; break;
    default: truncate = V > opt.full_threshold; break;
  }

  const double sqv = std::sqrt(static_cast<double>(V));
  const double logp = p > 0 ? static_cast<double>(log(p)) : 0.0;
  const double lambda = std::max(0.0, logp) * sqv;
  // envelope: t_n <= (p/V) e^{1/V} e^{-n^2/(2V)} e^{lambda n/sqrt V}
  const double log_pref = logp - std::log(static_cast<double>(V)) + 1.0 / V;

  SeriesResult res;
  Real t = p / V, sum = t;  // n = 1
  long long n = 1;
  const double prec_eps = std::pow(2.0, -static_cast<double>(precision_bits()) - 10);
  const long long probe_from = static_cast<long long>((1.0 + lambda) * sqv) + 64;

  while (n < V - 1) {
    if (t.is_zero()) break;
    t *= (V - n - 1) * p / V;
    ++n;
    sum += t;
    if (truncate && n >= probe_from && (n & 63) == 0) {
      const double b = static_cast<double>(n + 1) / sqv;
      auto lgb = detail::log_tail_bound(0.0, 0.5, lambda, b, V);
      if (lgb) {
        const double log_bound = log_pref + *lgb;
        const double log_target =
            std::log(opt.rel_tail_target) + static_cast<double>(log(sum));
        if (log_bound <= log_target) {
          TailCertificate cert;
          cert.cutoff = n + 1;
          cert.bound = exp(Real(log_bound));
          cert.gamma = 0.0;
          cert.kappa = 0.5;
          cert.lambda = lambda;
          cert.b = b;
          res.tail = cert;
          break;
        }
      }
    }
    if (!truncate) {
      double q = static_cast<double>(p) * (1.0 - static_cast<double>(n + 1) / V);
      if (q >= 0 && q < 0.99) {
        if (t * Real(q / (1 - q)) < sum * prec_eps) break;
      }
    }
  }
  res.value = sum;
  res.terms = n;
  return res;
}

SeriesResult susceptibility(long long V, const Real& p, const EvalOptions& opt) {
  SeriesResult s = two_point(V, p, opt);
  s.value = 1 + (V - 1) * s.value;
  if (s.tail) s.tail->bound *= (V - 1);
  return s;
}

}  // namespace critwin::saw
