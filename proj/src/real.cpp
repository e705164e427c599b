#include "critwin/real.hpp"

#include <atomic>
#include <cmath>

namespace critwin {

namespace {
std::atomic<unsigned> g_bits{128};

unsigned digits10_for_bits(unsigned bits) {
  // round up, plus guard digits
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 2;
}

struct Init {
  Init() { Real::default_precision(digits10_for_bits(128)); }
} g_init;
}  // namespace

void set_precision_bits(unsigned bits) {
  if (bits < 24) bits = 24;
  g_bits.store(bits);
  Real::default_precision(digits10_for_bits(bits));
}

unsigned precision_bits() { return g_bits.load(); }

Real real_e() { return exp(Real(1)); }

Real real_pi() { return 4 * atan(Real(1)); }

}  // namespace critwin
