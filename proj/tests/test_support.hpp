#pragma once

#include <string>

#include "dirichlet/bigfloat.hpp"

namespace testing {

// |a - b| < 10^-digits
inline bool near(const dirichlet::BigReal& a, const dirichlet::BigReal& b, long digits) {
  return dirichlet::abs(a - b) < dirichlet::pow10(-digits, a.prec());
}

inline bool near(const dirichlet::BigComplex& a, const dirichlet::BigComplex& b, long digits) {
  return near(a.re, b.re, digits) && near(a.im, b.im, digits);
}

inline dirichlet::BigReal dec(const std::string& s, mpfr_prec_t bits = 256) { return dirichlet::BigReal(s, bits); }

}  // namespace testing
