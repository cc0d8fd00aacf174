#include <doctest.h>

#include <numeric>

#include "dirichlet/errors.hpp"
#include "dirichlet/primes.hpp"

using namespace dirichlet;

namespace {
// trial division, nothing shared with the sieve
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("small prime lists") {
  CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  auto p30 = primes_up_to(30);
  CHECK(p30.size() == 10);
  CHECK(p30.back() == 29);
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("sieve agrees with trial division across segment borders") {
  auto ps = primes_up_to(200000);
  std::size_t k = 0;
  for (std::uint64_t n = 0; n <= 200000; ++n) {
    if (is_prime(n)) {
      REQUIRE(k < ps.size());
      CHECK(ps[k++] == n);
    }
  }
  CHECK(k == ps.size());
}

TEST_CASE("pi(10^6)") { CHECK(primes_up_to(1000000).size() == 78498); }

TEST_CASE("residue classes") {
  CHECK(primes_in_class({4, 1}, 30) == std::vector<std::uint64_t>{5, 13, 17, 29});
  CHECK(primes_in_class({4, 2}, 30) == std::vector<std::uint64_t>{2});
  CHECK(primes_in_class({3, 2}, 20) == std::vector<std::uint64_t>{2, 5, 11, 17});
  CHECK(primes_in_class({5, 5}, 100) == std::vector<std::uint64_t>{5});
  CHECK_THROWS_AS(primes_in_class({4, 0}, 30), DomainError);
  CHECK_THROWS_AS(primes_in_class({4, 5}, 30), DomainError);
}

TEST_CASE("classes partition the primes") {
  const std::uint64_t limit = 5000;
  const auto all = primes_up_to(limit);
  for (int m = 1; m <= 22; ++m) {
    std::size_t total = 0;
    for (int n = 1; n <= m; ++n) {
      auto cls = primes_in_class({m, n}, limit);
      total += cls.size();
      if (std::gcd(m, n) != 1) CHECK(cls.size() <= 1);
    }
    CHECK(total == all.size());
  }
}
