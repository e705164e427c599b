#pragma once

#include "critwin/count.hpp"
#include "critwin/tail.hpp"

namespace critwin::saw {

// Number of n-step self-avoiding walks from 0 to 1 on K_V:
// c_{V,n}(0,1) = prod_{j=2}^{n} (V-j); empty product (= 1) at n = 1.
// Requires 1 <= n <= V-1.
counts::Count walk_count(long long V, long long n);

// S_{V,01}(p) = sum_{n=1}^{V-1} c_{V,n}(0,1) (p/V)^n, exact finite sum with a
// certified hard cap mirroring the genfun truncation for very large V.
SeriesResult two_point(long long V, const Real& p, const EvalOptions& opt = {});

// chi_V^SAW(p) = 1 + (V-1) S_{V,01}(p).
SeriesResult susceptibility(long long V, const Real& p, const EvalOptions& opt = {});

}  // namespace critwin::saw
