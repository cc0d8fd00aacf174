#pragma once

// Dirichlet characters mod m with exact values.
//
// Every non-zero value is a phi(m)-th root of unity and is stored as its
// exponent k, meaning exp(2 pi i k / phi(m)). Row order of a table:
//   * odd prime power q: chi_j(g^a) = exp(2 pi i j a / phi(q)), j = 0..phi(q)-1,
//     g the smallest primitive root of q;
//   * 2: principal only; 4: the two characters of (Z/4)^*;
//   * 2^e, e >= 3: n = (-1)^a h^b with h = 5^{-1} mod 2^e, the (-1) index
//     in the outer loop;
//   * composite m: products over the prime-power factors in ascending prime
//     order, the largest prime's index varying fastest.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dirichlet/bigfloat.hpp"
#include "dirichlet/precision.hpp"

namespace dirichlet {

/// Either zero or exp(2 pi i k / order) with k reduced mod order.
class UnitRoot {
 public:
  static UnitRoot zero(int order) { return UnitRoot(order, std::nullopt); }
  static UnitRoot power(int order, long k);

  bool is_zero() const { return !exponent_; }
  /// Exponent k in [0, order); only valid when !is_zero().
  int exponent() const { return *exponent_; }
  int order() const { return order_; }

  UnitRoot conj() const;
  UnitRoot operator*(const UnitRoot& o) const;
  UnitRoot pow(long t) const;

  /// +1 / -1 when the value is real and non-zero, 0 otherwise.
  int real_sign() const;

  /// Notation used by the character tables: 0, 1, -1, i, -i, u_k, ub_k.
  std::string symbol() const;
  /// Parses the notation produced by symbol().
  static UnitRoot parse(const std::string& text, int order);

  friend bool operator==(const UnitRoot&, const UnitRoot&) = default;

 private:
  UnitRoot(int order, std::optional<int> k) : order_(order), exponent_(k) {}
  int order_;
  std::optional<int> exponent_;
};

BigComplex to_complex(const UnitRoot& v, const PrecisionContext& ctx);

/// Ascending (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t m);
std::uint64_t totient(std::uint64_t m);
/// Smallest primitive root of an odd prime power, or of 2 and 4.
std::uint64_t primitive_root(std::uint64_t q);

struct Character {
  int modulus = 1;
  /// 1-based row index r in its table.
  int index = 1;
  /// values[n % m] for n = 0..m-1.
  std::vector<UnitRoot> values;
  int conductor = 1;

  int order() const { return values.front().order(); }
  const UnitRoot& operator()(long n) const;
  bool is_principal() const { return index == 1; }
  /// chi(m-1) = chi(-1) as +1 or -1.
  int parity() const;
  bool is_real() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.modulus == b.modulus && a.values == b.values;
  }
};

/// Smallest f | m with chi(a) = chi(b) whenever a = b (mod f), gcd(ab, m) = 1.
int conductor(const Character& chi);

/// Coefficient mu(n) chi(n) of 1/L(s, chi): a signed root of unity.
struct SignedRoot {
  int sign = 0;  // -1, 0, +1
  UnitRoot root;
};
SignedRoot dirichlet_inverse_coeff(const Character& chi, std::uint64_t n);

class CharacterTable {
 public:
  int modulus() const { return modulus_; }
  int phi() const { return static_cast<int>(rows_.size()); }
  const std::vector<Character>& rows() const { return rows_; }
  /// 1-based row access.
  const Character& operator[](int r) const { return rows_.at(static_cast<std::size_t>(r - 1)); }

  /// Row of chi_r^t.
  const Character& power(int r, long t) const;
  const Character& conjugate(int r) const;
  /// Row whose values equal `values`, or 0 when none does.
  int find(const std::vector<UnitRoot>& values) const;

  friend CharacterTable character_table(int m);

 private:
  int modulus_ = 1;
  std::vector<Character> rows_;
};

/// Full character group in table order. m = 1 yields the single all-ones
/// character; m < 1 throws DomainError.
CharacterTable character_table(int m);

/// Shared immutable table for m (built once per process).
const CharacterTable& cached_character_table(int m);

/// chi^t as a character of the same modulus, indexed within its table.
Character char_power(const Character& chi, long t);

}  // namespace dirichlet
