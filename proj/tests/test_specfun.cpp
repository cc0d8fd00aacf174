#include <doctest.h>

#include "dirichlet/errors.hpp"
#include "dirichlet/specfun.hpp"

using namespace dirichlet;

namespace {

PrecisionContext ctx;

// Independent values straight from MPFR.
BigReal mpfr_zeta_of(long s, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_zeta_ui(r.get(), static_cast<unsigned long>(s), MPFR_RNDN);
  return r;
}

BigReal mpfr_digamma_of(long p, long q, mpfr_prec_t bits) {
  BigReal x = ratio(p, q, bits);
  BigReal r(bits);
  mpfr_digamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

bool close(const BigReal& a, const BigReal& b, long digits) {
  BigReal scale = abs(b);
  if (scale < BigReal(1, scale.prec())) scale = BigReal(1, scale.prec());
  return abs(a - b) < pow10(-digits, a.prec()) * scale;
}

}  // namespace

TEST_CASE("mobius on small integers") {
  const int expect[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0};
  for (int n = 1; n <= 16; ++n) CHECK(mobius(static_cast<std::uint64_t>(n)) == expect[n - 1]);
  CHECK_THROWS_AS(mobius(0), DomainError);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK(bernoulli(20) == mpq_class(-174611, 330));
}

TEST_CASE("harmonic and binomial") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(4) == mpq_class(25, 12));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("riemann zeta matches mpfr") {
  for (long s = 2; s <= 12; ++s) {
    CAPTURE(s);
    CHECK(close(riemann_zeta(s, ctx), mpfr_zeta_of(s, ctx.bits()), 60));
  }
}

TEST_CASE("zeta(2) = pi^2/6") {
  BigReal p = pi(ctx.bits());
  CHECK(close(riemann_zeta(2, ctx), p * p / 6, 60));
}

TEST_CASE("hurwitz zeta at 1/2 and 1/4") {
  // zeta(s, 1/2) = (2^s - 1) zeta(s)
  for (long s = 2; s <= 8; ++s) {
    BigReal expect = mpfr_zeta_of(s, ctx.bits()) * (pow(BigReal(2, ctx.bits()), s) - 1);
    CHECK(close(hurwitz_zeta(s, {1, 2}, ctx), expect, 58));
  }
  // zeta(2,1/4) - zeta(2,3/4) = 16 G
  BigReal catalan(ctx.bits());
  mpfr_const_catalan(catalan.get(), MPFR_RNDN);
  BigReal diff = hurwitz_zeta(2, {1, 4}, ctx) - hurwitz_zeta(2, {3, 4}, ctx);
  CHECK(close(diff, catalan * 16, 58));
}

TEST_CASE("hurwitz derivative matches central difference") {
  PrecisionContext hi = ctx.with_digits(120, 15);
  BigReal s(3, hi.bits());
  BigReal h = pow10(-40, hi.bits());
  BigReal fd = (hurwitz_zeta(s + h, {2, 7}, hi) - hurwitz_zeta(s - h, {2, 7}, hi)) / (h * 2);
  CHECK(close(hurwitz_zeta_ds(3, {2, 7}, ctx), fd, 55));
  HurwitzPair both = hurwitz_zeta_with_ds(BigReal(3, ctx.bits()), {2, 7}, ctx);
  CHECK(close(both.value, hurwitz_zeta(3, {2, 7}, ctx), 60));
}

TEST_CASE("riemann zeta derivative: zeta'(2)") {
  // zeta'(2) = pi^2/6 (gamma + log 2pi - 12 log A); check against a difference quotient instead
  PrecisionContext hi = ctx.with_digits(120, 15);
  BigReal h = pow10(-40, hi.bits());
  BigReal two(2, hi.bits());
  BigReal fd = (hurwitz_zeta(two + h, {1, 1}, hi) - hurwitz_zeta(two - h, {1, 1}, hi)) / (h * 2);
  CHECK(close(riemann_zeta_ds(2, ctx), fd, 55));
}

TEST_CASE("hurwitz domain") {
  CHECK_THROWS_AS(hurwitz_zeta(1, {1, 2}, ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2, {0, 2}, ctx), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2, {3, 2}, ctx), DomainError);
}

TEST_CASE("digamma matches mpfr") {
  const std::pair<long, long> args[] = {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 7}, {5, 14}, {13, 14}};
  for (auto [p, q] : args) {
    CAPTURE(p);
    CAPTURE(q);
    CHECK(close(digamma({p, q}, ctx), mpfr_digamma_of(p, q, ctx.bits()), 60));
  }
}

TEST_CASE("fraction reduction") {
  Fraction f = Fraction{6, 14}.reduced();
  CHECK(f.num == 3);
  CHECK(f.den == 7);
}
