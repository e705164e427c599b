#pragma once

// Monte Carlo oracle for the Brownian excursion area, independent of the
// moment recurrence it gates: uniform Dyck paths of semilength n via the
// cycle lemma, area = sum of heights, scaled by (2n)^{3/2}.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "critwin/count.hpp"
#include "critwin/real.hpp"
#include "critwin/rng.hpp"

namespace critwin::testsupport {

// Area (sum of heights at integer times) of one uniform Dyck path of
// semilength n: draw a uniform arrangement of (n+1) up-steps and n
// down-steps by sampling without replacement, then rotate at the unique
// minimum (cycle lemma) and drop the leading up-step.
inline long long dyck_area_sample(long long n, Xoshiro256& rng) {
  const long long len = 2 * n + 1;
  std::vector<std::int8_t> step(len);
  long long ups = n + 1;
  for (long long i = 0; i < len; ++i) {
    long long remaining = len - i;
    bool up = rng.below(static_cast<std::uint64_t>(remaining)) <
              static_cast<std::uint64_t>(ups);
    step[i] = up ? 1 : -1;
    if (up) --ups;
  }
  // position where the walk attains its minimum for the last time; the good
  // rotation (all partial sums > 0) starts just after it
  long long h = 0, minh = len + 1, argmin = -1;
  for (long long i = 0; i < len; ++i) {
    h += step[i];
    if (h <= minh) {
      minh = h;
      argmin = i;
    }
  }
  // rotate so the path starts right after argmin; first step is then an
  // up-step, giving an excursion of length 2n after removing it
  long long area = 0, height = 0;
  for (long long i = 1; i < len; ++i) {
    long long idx = (argmin + 1 + i) % len;
    height += step[idx];
    area += height;
  }
  return area;  // heights of the 2n-step Dyck path (last summand is 0)
}

struct ExcursionMC {
  double mean = 0;       // scaled area mean
  double std_error = 0;
  double raw_mean = 0;   // unscaled discrete mean, for the exact-mean check
};

inline ExcursionMC excursion_area_mc(long long semilength, long long paths,
                                     std::uint64_t seed, int threads = 1) {
  struct Part {
    unsigned long long sum = 0;
    __uint128_t sq = 0;
  };
  int nt = threads < 1 ? 1 : threads;
  std::vector<Part> parts(nt);
  auto work = [&](int tid) {
    Part acc;
    for (long long r = tid; r < paths; r += nt) {
      Xoshiro256 rng(seed, static_cast<std::uint64_t>(r));
      long long a = dyck_area_sample(semilength, rng);
      acc.sum += static_cast<unsigned long long>(a);
      acc.sq += static_cast<__uint128_t>(a) * static_cast<__uint128_t>(a);
    }
    parts[tid] = acc;
  };
  if (nt == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  unsigned long long sum = 0;
  __uint128_t sq = 0;
  for (auto& p : parts) {
    sum += p.sum;
    sq += p.sq;
  }
  double n = static_cast<double>(paths);
  double scale = std::pow(2.0 * static_cast<double>(semilength), 1.5);
  ExcursionMC out;
  out.raw_mean = static_cast<double>(sum) / n;
  out.mean = out.raw_mean / scale;
  double msq = static_cast<double>(sq) / n;
  double var = std::max(0.0, msq - out.raw_mean * out.raw_mean);
  out.std_error = std::sqrt(var / n) / scale;
  return out;
}

// Exact discrete mean: E[sum of heights] over uniform Dyck paths of
// semilength n equals (4^n - binom(2n+1, n)) / Catalan(n).
inline Real dyck_area_exact_mean(long long n) {
  counts::Count four_n(1);
  mpz_mul_2exp(four_n.backend().data(), four_n.backend().data(),
               static_cast<unsigned long>(2 * n));
  counts::Count catalan = counts::binomial(2 * n, n) / (n + 1);
  counts::Count b = counts::binomial(2 * n + 1, n);
  return Real(four_n - b) / Real(catalan);
}

}  // namespace critwin::testsupport
