#pragma once

// Arbitrary-precision special functions used by every series evaluation.
//
// The Hurwitz zeta function and its s-derivative are evaluated by
// Euler-Maclaurin summation: N leading terms summed directly, then the
// integral term, the half term and a Bernoulli tail. The tail is asymptotic,
// so N is doubled and the evaluation retried whenever the Bernoulli terms
// start growing before the tolerance is met.

#include <gmpxx.h>

#include <cstdint>

#include "dirichlet/bigfloat.hpp"
#include "dirichlet/precision.hpp"

namespace dirichlet {

/// Rational argument num/den of the Hurwitz zeta and digamma functions.
struct Fraction {
  long num = 1;
  long den = 1;

  /// Lowest terms; throws DomainError unless 0 < num/den <= 1.
  Fraction reduced() const;
  friend auto operator<=>(const Fraction&, const Fraction&) = default;
};

int mobius(std::uint64_t n);

/// Exact Bernoulli number (B_1 = -1/2), cached process-wide.
mpq_class bernoulli(unsigned k);

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
mpq_class harmonic(unsigned n);

/// C(n, k), zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

BigReal hurwitz_zeta(long s, Fraction a, const PrecisionContext& ctx);
BigReal hurwitz_zeta(const BigReal& s, Fraction a, const PrecisionContext& ctx);

/// d/ds zeta(s, a).
BigReal hurwitz_zeta_ds(long s, Fraction a, const PrecisionContext& ctx);
BigReal hurwitz_zeta_ds(const BigReal& s, Fraction a, const PrecisionContext& ctx);

struct HurwitzPair {
  BigReal value;
  BigReal deriv;
};
/// Both zeta(s, a) and d/ds zeta(s, a) from one Euler-Maclaurin pass.
HurwitzPair hurwitz_zeta_with_ds(const BigReal& s, Fraction a, const PrecisionContext& ctx);

BigReal digamma(Fraction a, const PrecisionContext& ctx);

/// zeta(j) and zeta'(j) for integer j >= 2, memoized per working precision.
BigReal riemann_zeta(long j, const PrecisionContext& ctx);
BigReal riemann_zeta_ds(long j, const PrecisionContext& ctx);

/// Exact rational q rounded at the given precision.
BigReal to_big(const mpq_class& q, mpfr_prec_t prec);
BigReal to_big(const mpz_class& z, mpfr_prec_t prec);

}  // namespace dirichlet
