#pragma once

#include <cstdint>
#include <vector>

namespace dirichlet {

/// Primes p = n (mod m), 1 <= n <= m.
struct ResidueClass {
  int m = 1;
  int n = 1;

  /// Throws DomainError unless m >= 1 and 1 <= n <= m.
  void validate() const;
  bool contains(std::uint64_t p) const { return p % static_cast<std::uint64_t>(m) == static_cast<std::uint64_t>(n % m); }
  /// gcd(n, m) == 1
  bool coprime() const;
};

/// All primes <= limit, ascending (segmented sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

std::vector<std::uint64_t> primes_in_class(const ResidueClass& rc, std::uint64_t limit);

}  // namespace dirichlet
