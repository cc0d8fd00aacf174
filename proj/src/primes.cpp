#include "dirichlet/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dirichlet/errors.hpp"

namespace dirichlet {

namespace {
constexpr std::uint64_t kSegment = 1U << 16;

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}
}  // namespace

void ResidueClass::validate() const {
  if (m < 1 || n < 1 || n > m) {
    throw DomainError("invalid residue class " + std::to_string(n) + " mod " + std::to_string(m));
  }
}

bool ResidueClass::coprime() const { return std::gcd(m, n) == 1; }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit < 2) return {};
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;
  const std::vector<std::uint64_t> base = small_primes(root);

  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(1.3 * static_cast<double>(limit) / std::log(static_cast<double>(limit)) + 16));
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(lo + kSegment - 1, limit);
    std::fill(seg.begin(), seg.end(), 0);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 1;
    }
    for (std::uint64_t i = lo; i <= hi; ++i) {
      if (!seg[i - lo]) out.push_back(i);
    }
  }
  return out;
}

std::vector<std::uint64_t> primes_in_class(const ResidueClass& rc, std::uint64_t limit) {
  rc.validate();
  std::vector<std::uint64_t> all = primes_up_to(limit);
  std::vector<std::uint64_t> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&](std::uint64_t p) { return rc.contains(p); });
  return out;
}

}  // namespace dirichlet
