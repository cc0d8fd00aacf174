#include <doctest.h>

#include <numeric>

#include "dirichlet/engine.hpp"
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

BigReal euler_factor(std::uint64_t p, long s, mpfr_prec_t bits) {
  BigReal one(1, bits);
  return one / (one - pow(BigReal(static_cast<long>(p), bits), -s));
}

}  // namespace

TEST_CASE("reference values") {
  Engine& e = engine();
  CHECK(near(e.zeta_mod(3, 1, 2), dec("1.03401487541434188053903064441304762857896542848910"), 49));
  CHECK(near(e.zeta_mod(4, 3, 2), dec("1.16807558541051428866969673706404040136467902145555"), 49));
  const mpfr_prec_t bits = e.context().bits();
  CHECK(near(e.zeta_mod(2, 2, 2), BigReal(4, bits) / 3, 60));
  for (long s = 2; s <= 10; ++s) CHECK(near(e.zeta_mod(2, 2, s), euler_factor(2, s, bits), 60));
}

TEST_CASE("product over classes recovers zeta") {
  Engine& e = engine();
  const mpfr_prec_t bits = e.context().bits();
  for (int m = 1; m <= 14; ++m) {
    for (long s = 2; s <= 10; ++s) {
      BigReal prod(1, bits);
      for (int n = 1; n <= m; ++n) {
        if (std::gcd(n, m) == 1) prod *= e.zeta_mod(m, n, s);
      }
      for (auto [p, k] : factorize(static_cast<std::uint64_t>(m))) prod *= euler_factor(p, s, bits);
      CAPTURE(m);
      CAPTURE(s);
      CHECK(near(prod, riemann_zeta(s, e.context()), 55));
    }
  }
}

TEST_CASE("refinements") {
  Engine& e = engine();
  const mpfr_prec_t bits = e.context().bits();
  for (long s = 2; s <= 8; ++s) {
    BigReal drop2 = BigReal(1, bits) - pow(BigReal(2, bits), -s);
    CHECK(near(e.zeta_mod(6, 1, s), e.zeta_mod(3, 1, s), 55));
    CHECK(near(e.zeta_mod(6, 5, s), drop2 * e.zeta_mod(3, 2, s), 55));
    CHECK(near(e.zeta_mod(8, 1, s) * e.zeta_mod(8, 5, s), e.zeta_mod(4, 1, s), 55));
    CHECK(near(e.zeta_mod(8, 3, s) * e.zeta_mod(8, 7, s), e.zeta_mod(4, 3, s), 55));
    CHECK(near(e.zeta_mod(14, 9, s), drop2 * e.zeta_mod(7, 2, s), 55));
  }
}

TEST_CASE("incomplete products") {
  Engine& e = engine();
  const mpfr_prec_t bits = e.context().bits();
  for (auto [m, n, M, s] : {std::tuple{3, 2, 100ULL, 2L}, {5, 1, 10ULL, 3L}, {11, 4, 500ULL, 2L}}) {
    BigReal v = e.zeta_mod_incomplete(m, n, M, s);
    CHECK(v > BigReal(1, bits));
    for (std::uint64_t p : primes_in_class({m, n}, M)) v *= euler_factor(p, s, bits);
    CHECK(near(v, e.zeta_mod(m, n, s), 55));
  }
  CHECK(near(e.zeta_mod_incomplete(3, 1, 100000, 12), BigReal(1, bits), 55));
}

TEST_CASE("empty classes give one") {
  Engine& e = engine();
  const mpfr_prec_t bits = e.context().bits();
  CHECK(e.zeta_mod(6, 4, 2) == BigReal(1, bits));
  CHECK(near(e.zeta_mod(6, 3, 2), euler_factor(3, 2, bits), 60));
}
