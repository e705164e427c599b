#pragma once

#include <stdexcept>

#include "critwin/real.hpp"

namespace critwin {

// Critical-window coordinate for trees/animals/SAW: p = 1 + s V^{-1/2}.
// p is always derived, never stored independently of (V, s).
struct WindowPoint {
  long long V;
  Real s;
  Real p;

  static WindowPoint from_s(long long V, const Real& s) {
    check_v(V);
    Real p = 1 + s / sqrt(Real(V));
    if (p < 0) throw std::domain_error("WindowPoint: p < 0 (s below -sqrt(V))");
    return {V, s, p};
  }

  static WindowPoint from_p(long long V, const Real& p) {
    check_v(V);
    if (p < 0) throw std::domain_error("WindowPoint: p must be >= 0");
    return {V, (p - 1) * sqrt(Real(V)), p};
  }

 private:
  static void check_v(long long V) {
    if (V < 1) throw std::invalid_argument("WindowPoint: V must be >= 1");
  }
};

}  // namespace critwin
