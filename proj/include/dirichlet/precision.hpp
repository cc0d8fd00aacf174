#pragma once

#include <cstdint>

#include "dirichlet/bigfloat.hpp"

namespace dirichlet {

/// Accuracy policy shared by every numeric operation.
struct PrecisionContext {
  int target_digits = 50;
  int guard_digits = 15;
  /// Primes p <= cutoff are summed directly; the rest go through L-series logs.
  std::uint64_t cutoff = 100000;

  int working_digits() const { return target_digits + guard_digits; }
  mpfr_prec_t bits() const { return digits_to_bits(working_digits()); }
  /// Absolute truncation threshold 10^-(target + guard/2).
  BigReal tail_tol() const { return pow10(-(target_digits + guard_digits / 2), bits()); }
  double tail_tol_log10() const { return -(target_digits + guard_digits / 2.0); }
  /// Relative stopping threshold for special-function series, 10^-working.
  BigReal eval_tol() const { return pow10(-working_digits(), bits()); }

  /// Throws DomainError unless guard_digits >= 10, target_digits >= 1 and
  /// cutoff >= 2 * max_modulus.
  void validate(int max_modulus) const;

  /// Same policy with the digit counts scaled (used by finite-difference checks).
  PrecisionContext with_digits(int target, int guard) const {
    PrecisionContext c = *this;
    c.target_digits = target;
    c.guard_digits = guard;
    return c;
  }
};

}  // namespace dirichlet
