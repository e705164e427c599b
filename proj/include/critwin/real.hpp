#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace critwin {

// Variable-precision real; precision is set process-wide in bits (default 128)
// and recorded alongside every emitted value.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the working precision. Must be called before values are created;
// not safe to change while worker threads hold Real values.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Constants at the current working precision.
Real real_e();
Real real_pi();

inline Real real_sqrt(long long v) { return sqrt(Real(v)); }

}  // namespace critwin
