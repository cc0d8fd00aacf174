#include <doctest.h>

#include <random>

#include "dirichlet/engine.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/lseries.hpp"
#include "dirichlet/primes.hpp"
#include "test_support.hpp"

using namespace dirichlet;
using testing::dec;
using testing::near;

namespace {

Engine& engine() {
  static Engine e;
  return e;
}

const Character& chi(int m, int r) { return cached_character_table(m)[r]; }

// L(s, chi) at real s straight from Hurwitz values, for finite differences.
BigComplex l_at_real(const Character& c, const BigReal& s, const PrecisionContext& ctx) {
  BigComplex sum(ctx.bits());
  for (int n = 1; n <= c.modulus; ++n) {
    if (c(n).is_zero()) continue;
    sum += to_complex(c(n), ctx) * hurwitz_zeta(s, {n, c.modulus}, ctx);
  }
  return sum * exp(-s * log_ui(static_cast<unsigned long>(c.modulus), ctx.bits()));
}

}  // namespace

TEST_CASE("reference values") {
  Engine& e = engine();
  CHECK(near(e.l_value(chi(2, 1), 2).re, dec("1.23370055013616982735431137498451889191421242590510"), 49));
  CHECK(near(e.l_value(chi(4, 2), 1).re, dec("0.78539816339744830961566084581987572104929234984378"), 49));
  BigComplex v = e.l_value(chi(5, 2), 3);
  CHECK(near(v.re, dec("0.98819168162405719379"), 19));
  CHECK(near(v.im, dec("0.08910518834573959516"), 19));
  CHECK(near(e.l_deriv(chi(2, 1), 2).re, dec("-0.41811583807616962590828560617781139711923775611996"), 49));
  CHECK(near(e.l_deriv(chi(4, 2), 2).re, dec("0.08158073611659279510"), 19));
  CHECK(near(e.l_deriv_at_1(chi(3, 2)).re, dec("0.22266298696860150948666026276474436188657161605715"), 49));
  CHECK(near(e.l_deriv_at_1(chi(4, 2)).re, dec("0.19290131679691242936"), 19));
  BigComplex d = e.l_deriv_at_1(chi(5, 2));
  CHECK(near(d.re, dec("0.15455633174545896654"), 19));
  CHECK(near(d.im, dec("-0.04416511200957409045"), 19));
}

TEST_CASE("closed forms") {
  Engine& e = engine();
  const mpfr_prec_t bits = e.context().bits();
  BigReal p = pi(bits);
  CHECK(near(e.l_value(chi(2, 1), 2).re, p * p / 8, 55));
  CHECK(near(e.l_value(chi(4, 2), 1).re, p / 4, 55));
  BigReal sq5 = sqrt(BigReal(5, bits));
  BigReal golden = (sq5 + 1) / 2;
  CHECK(near(e.l_value(chi(5, 3), 1).re, log(golden) * 2 / sq5, 55));
  CHECK(near(e.l_value(chi(6, 1), 2).re, p * p / 9, 55));
  // L(2, chi_1 mod 2) and L(4, chi_1 mod 2) as rational multiples of pi^s
  CHECK(near(e.l_value(chi(2, 1), 4).re, pow(p, 4L) / 96, 55));
  const BigReal sq3 = sqrt(BigReal(3, bits));
  CHECK(near(e.l_value(chi(6, 2), 1).re, p / (sq3 * 2), 55));
  CHECK(near(e.l_value(chi(6, 2), 3).re, pow(p, 3L) / (sq3 * 18), 55));
  CHECK(near(e.l_value(chi(4, 2), 3).re, pow(p, 3L) / 32, 55));
  CHECK(near(e.l_value(chi(5, 1), 2).re, p * p * 4 / 25, 55));
  CHECK(near(e.l_value(chi(5, 3), 2).re, p * p * 4 / (sq5 * 25), 55));
  BigComplex v = e.l_value(chi(5, 2), 1);
  CHECK(near(v.re, p / 5 / sqrt(BigReal(5, bits) - sq5 * 2), 55));
  CHECK(near(v.im, p / 5 / sqrt(BigReal(5, bits) + sq5 * 2), 55));
}

TEST_CASE("pole and domain errors") {
  Engine& e = engine();
  CHECK_THROWS_AS(e.l_value(chi(5, 1), 1), PoleError);
  CHECK_THROWS_AS(e.l_deriv_at_1(chi(5, 1)), PoleError);
  CHECK_THROWS_AS(e.l_value(chi(5, 2), 0), DomainError);
  CHECK_THROWS_AS(tail_coefficients(chi(5, 1), 4), DomainError);
}

TEST_CASE("real characters give real values; conjugates give conjugate values") {
  Engine& e = engine();
  for (int m = 3; m <= 14; ++m) {
    const CharacterTable& t = cached_character_table(m);
    for (const Character& c : t.rows()) {
      for (long s = c.is_principal() ? 2 : 1; s <= 4; ++s) {
        BigComplex v = e.l_value(c, s);
        if (c.is_real()) CHECK(v.im.is_zero());
        BigComplex w = e.l_value(t.conjugate(c.index), s);
        CHECK(near(w, conj(v), 55));
      }
    }
  }
}

TEST_CASE("principal factorization through zeta") {
  Engine& e = engine();
  const mpfr_prec_t bits = e.context().bits();
  for (int m = 2; m <= 14; ++m) {
    for (long s = 2; s <= 10; ++s) {
      BigReal expect = riemann_zeta(s, e.context());
      for (auto [p, k] : factorize(static_cast<std::uint64_t>(m))) {
        expect *= BigReal(1, bits) - pow(BigReal(static_cast<long>(p), bits), -s);
      }
      CHECK(near(e.l_value(chi(m, 1), s).re, expect, 55));
    }
  }
}

TEST_CASE("induced characters differ by the Euler factors at p | m") {
  Engine& e = engine();
  const mpfr_prec_t bits = e.context().bits();
  for (int m = 4; m <= 14; ++m) {
    for (const Character& c : cached_character_table(m).rows()) {
      const int f = c.conductor;
      if (f == m || f == 1) continue;
      // primitive character mod f inducing c
      const CharacterTable& small = cached_character_table(f);
      const Character* prim = nullptr;
      for (const Character& q : small.rows()) {
        bool match = true;
        for (int n = 1; n < m && match; ++n) {
          if (c(n).is_zero()) continue;
          match = !q(n).is_zero() && q(n).exponent() * (c.order() / q.order()) == c(n).exponent();
        }
        if (match) prim = &q;
      }
      REQUIRE(prim != nullptr);
      for (long s = 1; s <= 5; ++s) {
        BigComplex expect = e.l_value(*prim, s);
        for (auto [p, k] : factorize(static_cast<std::uint64_t>(m))) {
          BigComplex factor{BigReal(1, bits), BigReal(bits)};
          factor -= to_complex((*prim)(static_cast<long>(p)), e.context()) *
                    pow(BigReal(static_cast<long>(p), bits), -s);
          expect *= factor;
        }
        CAPTURE(m);
        CAPTURE(c.index);
        CHECK(near(e.l_value(c, s), expect, 55));
      }
    }
  }
}

TEST_CASE("incomplete product round trip") {
  Engine& e = engine();
  const PrecisionContext& ctx = e.context();
  std::mt19937 rng(20240611);
  for (int k = 0; k < 20; ++k) {
    const int m = 2 + static_cast<int>(rng() % 13);
    const CharacterTable& t = cached_character_table(m);
    const Character& c = t[1 + static_cast<int>(rng() % static_cast<unsigned>(t.phi()))];
    const long s = (c.is_principal() ? 2 : 1) + static_cast<long>(rng() % 9);
    const std::uint64_t M = 2 + rng() % 99;
    BigComplex v = e.l_incomplete(M, c, s);
    for (std::uint64_t p : primes_up_to(M)) {
      BigComplex factor{BigReal(1, ctx.bits()), BigReal(ctx.bits())};
      factor -= to_complex(c(static_cast<long>(p % static_cast<std::uint64_t>(m))), ctx) *
                pow(BigReal(static_cast<long>(p), ctx.bits()), -s);
      v = v / factor;
    }
    CHECK(near(v, e.l_value(c, s), 55));
  }
  CHECK(near(e.l_incomplete(1, chi(3, 2), 2), e.l_value(chi(3, 2), 2), 60));
  CHECK(near(e.l_incomplete(2, chi(2, 1), 2), e.l_value(chi(2, 1), 2), 60));
}

TEST_CASE("L' for s >= 2 matches a central difference") {
  Engine& e = engine();
  const PrecisionContext hi = e.context().with_digits(130, 15);
  const BigReal h = pow10(-25, hi.bits());
  for (auto [m, r, s] : {std::tuple{3, 2, 2}, {5, 2, 3}, {7, 3, 2}, {12, 4, 5}, {13, 2, 10}}) {
    const Character& c = chi(m, r);
    BigReal sb(s, hi.bits());
    BigComplex fd = l_at_real(c, sb + h, hi) - l_at_real(c, sb - h, hi);
    fd /= h * 2;
    CAPTURE(m);
    CAPTURE(r);
    CHECK(near(e.l_deriv(c, s), fd, 46));
  }
}

TEST_CASE("L'(1) matches a one-sided Richardson difference") {
  Engine& e = engine();
  const PrecisionContext hi = e.context().with_digits(130, 15);
  Engine ehi(hi);
  const BigReal h = pow10(-30, hi.bits());
  const BigReal one(1, hi.bits());
  for (auto [m, r] : {std::pair{3, 2}, {5, 2}, {8, 2}, {11, 3}}) {
    const Character& c = chi(m, r);
    BigComplex f0 = ehi.l_value(c, 1);
    BigComplex f1 = l_at_real(c, one + h, hi);
    BigComplex f2 = l_at_real(c, one + h * 2, hi);
    BigComplex fd = f1 * BigReal(4, hi.bits()) - f0 * BigReal(3, hi.bits()) - f2;
    fd /= h * 2;
    CAPTURE(m);
    CAPTURE(r);
    CHECK(near(e.l_deriv_at_1(c), fd, 50));
  }
}

TEST_CASE("L'(1) does not depend on the direct block count") {
  Engine& e = engine();
  for (auto [m, r] : {std::pair{3, 2}, {7, 2}, {13, 5}}) {
    CHECK(near(e.l_deriv_at_1(chi(m, r), 10), e.l_deriv_at_1(chi(m, r), 40), 55));
    CHECK(near(e.l_deriv_at_1(chi(m, r), 80), e.l_deriv_at_1(chi(m, r), 40), 55));
  }
}

TEST_CASE("tail coefficients") {
  TailCoefficients tc = tail_coefficients(chi(3, 2), 6);
  const PrecisionContext ctx;
  CHECK(near(tc.beta[2].to_complex(ctx).re, BigReal(-2, ctx.bits()), 60));
  CHECK(near(tc.alpha[2].to_complex(ctx).re, BigReal(2, ctx.bits()), 60));
  // chi(-1) = -1: even orders vanish; chi(-1) = +1: odd orders vanish
  for (int m = 3; m <= 22; ++m) {
    for (const Character& c : cached_character_table(m).rows()) {
      if (c.is_principal()) continue;
      TailCoefficients t = tail_coefficients(c, 9);
      for (int j = 2; j <= 9; ++j) {
        const bool vanishes = (c.parity() == 1) == (j % 2 == 0);
        if (vanishes) {
          CHECK(t.beta[static_cast<std::size_t>(j)].is_zero());
          CHECK(t.alpha[static_cast<std::size_t>(j)].is_zero());
        }
      }
    }
  }
}

TEST_CASE("|L'(s)| shrinks with s") {
  Engine& e = engine();
  for (auto [m, r] : {std::pair{3, 2}, {5, 2}, {7, 1}}) {
    CHECK(abs(e.l_deriv(chi(m, r), 10)) < abs(e.l_deriv(chi(m, r), 5)));
  }
}
