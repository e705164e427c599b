#include "critwin/genfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace critwin::genfun {

namespace {

// Shared engine for the three tree series. The term ratio is
//   t_{n+1}/t_n = (1 - n/V) * (1 + 1/n)^{n-c} * (p/e) * extra(n),
// with c = 0 for chi, c = 1 for g0/g01 and extra(n) = n/(n-1) for g01 only.
// Tail certificates use termwise envelopes
//   t_n <= pref * n^{-gamma} * exp(-n^2/(2V) + lambda_eff n/sqrt(V)),
// which follow from Stirling (n! >= sqrt(2 pi n)(n/e)^n) and 1-x <= e^{-x}.
struct TreeSeriesSpec {
  int c;              // exponent shift in (1+1/n)^{n-c}
  bool g01_extra;     // multiply ratio by n/(n-1)
  double gamma;       // envelope power
  double log_pref;    // log of envelope prefactor
  long long n_start;
};

SeriesResult run_tree_series(const WindowPoint& w, const EvalOptions& opt,
                             const TreeSeriesSpec& spec, Real t0) {
  const long long V = w.V;
  const Real pe = w.p / real_e();
  const double sqv = std::sqrt(static_cast<double>(V));
  const double logp = w.p > 0 ? static_cast<double>(log(w.p)) : 0.0;
  const double lambda_eff = std::max(0.0, logp) * sqv + 0.5 / sqv;

  bool truncate;
  switch (opt.mode) {
    case SumMode::Full: truncate = false; break;
    case SumMode::Truncated: truncate = true; break;
    default: truncate = V > opt.full_threshold; break;
  }

  SeriesResult res;
  Real t = t0, sum = t0;
  long long n = spec.n_start;
  const double prec_eps = std::pow(2.0, -static_cast<double>(precision_bits()) - 10);
  // start looking for a certified cutoff once past the term-envelope peak
  const long long probe_from =
      static_cast<long long>((1.0 + lambda_eff) * sqv) + 64;

  while (n < V) {
    if (t.is_zero()) break;  // p = 0 collapses the series to the leading term
    Real ratio = (1 - Real(n) / V) * pow(1 + Real(1) / n, n - spec.c) * pe;
    if (spec.g01_extra) ratio *= Real(n) / (n - 1);
    t *= ratio;
    ++n;
    sum += t;

    if (truncate && n >= probe_from && (n & 63) == 0) {
      const double b = static_cast<double>(n + 1) / sqv;
      auto lgb = detail::log_tail_bound(spec.gamma, 0.5, lambda_eff, b, V);
      if (lgb) {
        const double log_bound = spec.log_pref + *lgb;
        const double log_target =
            std::log(opt.rel_tail_target) + static_cast<double>(log(sum));
        if (log_bound <= log_target) {
          TailCertificate cert;
          cert.cutoff = n + 1;
          cert.bound = exp(Real(log_bound));
          cert.gamma = spec.gamma;
          cert.kappa = 0.5;
          cert.lambda = lambda_eff;
          cert.b = b;
          res.tail = cert;
          break;
        }
      }
    }
    if (!truncate) {
      // all later ratios are <= q below; stop once the geometric remainder
      // is beyond the working precision
      double q = static_cast<double>(w.p) * (1.0 - static_cast<double>(n) / V);
      if (spec.g01_extra) q *= 1.002;  // covers the n/(n-1) factor for n >= 32
      if (n >= 32 && q >= 0 && q < 0.99) {
        if (t * Real(q / (1 - q)) < sum * prec_eps) break;
      }
    }
  }
  res.value = sum;
  res.terms = n - spec.n_start + 1;
  return res;
}

const double kLogSqrt2Pi = 0.91893853320467274;

}  // namespace

SeriesResult chi_tree(const WindowPoint& w, const EvalOptions& opt) {
  TreeSeriesSpec spec{0, false, 0.5, 1.0 - kLogSqrt2Pi, 1};
  return run_tree_series(w, opt, spec, Real(1));
}

SeriesResult g0_tree(const WindowPoint& w, const EvalOptions& opt) {
  TreeSeriesSpec spec{1, false, 1.5, 1.0 - kLogSqrt2Pi, 1};
  return run_tree_series(w, opt, spec, Real(1));
}

SeriesResult g01_tree(const WindowPoint& w, const EvalOptions& opt) {
  if (w.V < 2) throw std::invalid_argument("g01_tree: V must be >= 2");
  TreeSeriesSpec spec{1, true, 0.5,
                      1.0 + 1.0 / static_cast<double>(w.V) -
                          std::log(static_cast<double>(w.V)) - kLogSqrt2Pi,
                      2};
  Real t0 = w.p / (real_e() * w.V);  // n = 2 term
  return run_tree_series(w, opt, spec, t0);
}

Real surplus_series(int n, const Real& z, const counts::CountTable& table) {
  if (n < 3)
    throw std::invalid_argument("surplus_series: n must be >= 3 (surplus is zero for n = 1, 2)");
  if (n > table.n_max())
    throw std::out_of_range("surplus_series: n beyond table capacity");
  const long long full_top = static_cast<long long>(n) * (n - 1) / 2;
  if (table.row_top(n) != full_top)
    throw std::logic_error("surplus_series: banded table cannot evaluate S(n,z) exactly");
  // Horner over m = n .. E(n); S = sum_m C(n,m) z^{m-(n-1)}
  Real acc(0);
  for (long long m = full_top; m >= n; --m) {
    acc = acc * z + Real(table.connected(n, m));
  }
  return acc * z;
}

namespace {

Real delta_sum(const WindowPoint& w, const counts::CountTable& table, bool chi_weight) {
  if (w.V > table.n_max())
    throw std::out_of_range(
        "exact animal evaluation unsupported for V = " + std::to_string(w.V) +
        " > table capacity " + std::to_string(table.n_max()) +
        " (no approximation is attempted)");
  if (w.p.is_zero() || w.V < 3) return Real(0);
  const Real z = w.p / (real_e() * w.V);
  Real zpow = z * z;  // z^{n-1} at n = 3
  Real sum(0);
  for (long long n = 3; n <= w.V; ++n) {
    Real term = Real(counts::binomial(w.V - 1, n - 1)) *
                surplus_series(static_cast<int>(n), z, table) * zpow;
    if (chi_weight) term *= n;
    sum += term;
    zpow *= z;
  }
  return sum;
}

}  // namespace

Real delta_g0(const WindowPoint& w, const counts::CountTable& table) {
  return delta_sum(w, table, false);
}

Real delta_chi(const WindowPoint& w, const counts::CountTable& table) {
  return delta_sum(w, table, true);
}

Real g0_animal(const WindowPoint& w, const counts::CountTable& table) {
  EvalOptions full;
  full.mode = SumMode::Full;
  return g0_tree(w, full).value + delta_g0(w, table);
}

Real chi_animal(const WindowPoint& w, const counts::CountTable& table) {
  EvalOptions full;
  full.mode = SumMode::Full;
  return chi_tree(w, full).value + delta_chi(w, table);
}

Real g01_animal(const WindowPoint& w, const counts::CountTable& table) {
  if (w.V < 2) throw std::invalid_argument("g01_animal: V must be >= 2");
  return (chi_animal(w, table) - g0_animal(w, table)) / (w.V - 1);
}

}  // namespace critwin::genfun
