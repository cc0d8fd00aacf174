#include "dirichlet/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "dirichlet/errors.hpp"
#include "dirichlet/specfun.hpp"

namespace dirichlet {

namespace {

long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  b %= n;
  while (e) {
    if (e & 1U) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % n);
    b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % n);
    e >>= 1U;
  }
  return r;
}

// Characters of one prime-power factor, as exponent tables over residues
// mod q in units of 1/phi(q) of a full turn (-1 marks a zero value).
struct FactorCharacters {
  std::uint64_t q = 1;
  int phi = 1;
  std::vector<std::vector<int>> rows;
};

FactorCharacters odd_prime_power(std::uint64_t p, int e) {
  FactorCharacters out;
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  out.q = q;
  out.phi = static_cast<int>(totient(q));
  std::vector<int> dlog(q, -1);
  std::uint64_t g = primitive_root(q);
  std::uint64_t v = 1;
  for (int a = 0; a < out.phi; ++a) {
    dlog[v] = a;
    v = v * g % q;
  }
  for (int j = 0; j < out.phi; ++j) {
    std::vector<int> row(q, -1);
    for (std::uint64_t n = 0; n < q; ++n) {
      if (dlog[n] >= 0) row[n] = static_cast<int>((static_cast<long>(j) * dlog[n]) % out.phi);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

FactorCharacters two_power(int e) {
  FactorCharacters out;
  const std::uint64_t q = 1ULL << e;
  out.q = q;
  out.phi = static_cast<int>(q / 2);
  if (e == 1) {
    out.rows.push_back({-1, 0});
    return out;
  }
  // n = (-1)^a h^b, h = 5^{-1} mod q of order q/4 (for q = 4 only a survives).
  const std::uint64_t order_h = q / 4;
  const std::uint64_t h = powmod(5, order_h - 1, q);
  std::vector<int> sign_idx(q, -1);
  std::vector<int> h_idx(q, -1);
  std::uint64_t v = 1;
  for (std::uint64_t b = 0; b < order_h; ++b) {
    sign_idx[v] = 0;
    h_idx[v] = static_cast<int>(b);
    sign_idx[q - v] = 1;
    h_idx[q - v] = static_cast<int>(b);
    v = v * h % q;
  }
  for (int a = 0; a < 2; ++a) {
    for (std::uint64_t c = 0; c < order_h; ++c) {
      std::vector<int> row(q, -1);
      for (std::uint64_t n = 1; n < q; n += 2) {
        // a*sign/2 + c*b/order_h of a turn, in units of 1/phi = 1/(2 order_h)
        long k = static_cast<long>(a * sign_idx[n] * static_cast<int>(order_h)) +
                 static_cast<long>(2 * c * static_cast<std::uint64_t>(h_idx[n]));
        row[n] = static_cast<int>(k % out.phi);
      }
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace

UnitRoot UnitRoot::power(int order, long k) {
  if (order < 1) throw DomainError("root of unity order must be positive");
  return UnitRoot(order, static_cast<int>(mod_floor(k, order)));
}

UnitRoot UnitRoot::conj() const {
  if (is_zero()) return *this;
  return power(order_, -static_cast<long>(*exponent_));
}

UnitRoot UnitRoot::operator*(const UnitRoot& o) const {
  if (o.order_ != order_) throw DomainError("roots of unity of different orders");
  if (is_zero() || o.is_zero()) return zero(order_);
  return power(order_, static_cast<long>(*exponent_) + *o.exponent_);
}

UnitRoot UnitRoot::pow(long t) const {
  if (is_zero()) return *this;
  return power(order_, mod_floor(static_cast<long>(*exponent_) * mod_floor(t, order_), order_));
}

int UnitRoot::real_sign() const {
  if (is_zero()) return 0;
  if (*exponent_ == 0) return 1;
  if (2 * *exponent_ == order_) return -1;
  return 0;
}

std::string UnitRoot::symbol() const {
  if (is_zero()) return "0";
  const int k = *exponent_;
  if (k == 0) return "1";
  if (2 * k == order_) return "-1";
  if (4 * k == order_) return "i";
  if (4 * k == 3 * order_) return "-i";
  if (2 * k < order_) return "u" + std::to_string(k);
  return "ub" + std::to_string(order_ - k);
}

UnitRoot UnitRoot::parse(const std::string& text, int order) {
  auto need_quarter = [&] {
    if (order % 4 != 0) throw DomainError("'" + text + "' needs phi divisible by 4");
  };
  if (text == "0") return zero(order);
  if (text == "1") return power(order, 0);
  if (text == "-1") {
    if (order % 2 != 0) throw DomainError("-1 is not a root of odd order");
    return power(order, order / 2);
  }
  if (text == "i") {
    need_quarter();
    return power(order, order / 4);
  }
  if (text == "-i") {
    need_quarter();
    return power(order, 3 * order / 4);
  }
  if (text.rfind("ub", 0) == 0) return power(order, -std::stol(text.substr(2)));
  if (text.rfind("u", 0) == 0) return power(order, std::stol(text.substr(1)));
  throw DomainError("unknown root-of-unity symbol '" + text + "'");
}

BigComplex to_complex(const UnitRoot& v, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  if (v.is_zero()) return BigComplex(bits);
  const int k = v.exponent();
  const int n = v.order();
  if (k == 0) return {BigReal(1, bits), BigReal(bits)};
  if (2 * k == n) return {BigReal(-1, bits), BigReal(bits)};
  if (4 * k == n) return {BigReal(bits), BigReal(1, bits)};
  if (4 * k == 3 * n) return {BigReal(bits), BigReal(-1, bits)};
  BigReal angle = pi(bits + 16) * (2L * k);
  angle /= n;
  BigReal c = cos(angle);
  BigReal s = sin(angle);
  BigComplex out(bits);
  mpfr_set(out.re.get(), c.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), s.get(), MPFR_RNDN);
  return out;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t m) {
  if (m == 0) throw DomainError("factorize(0)");
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::uint64_t totient(std::uint64_t m) {
  std::uint64_t phi = m;
  for (auto [p, e] : factorize(m)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t primitive_root(std::uint64_t q) {
  if (q == 2) return 1;
  if (q == 4) return 3;
  const std::uint64_t phi = totient(q);
  auto fs = factorize(phi);
  for (std::uint64_t g = 2; g < q; ++g) {
    if (std::gcd(g, q) != 1) continue;
    bool ok = std::all_of(fs.begin(), fs.end(), [&](auto pe) { return powmod(g, phi / pe.first, q) != 1; });
    if (ok) return g;
  }
  throw DomainError("no primitive root mod " + std::to_string(q));
}

const UnitRoot& Character::operator()(long n) const {
  return values[static_cast<std::size_t>(mod_floor(n, modulus))];
}

int Character::parity() const {
  if (modulus <= 2) return 1;
  return (*this)(-1).real_sign();
}

bool Character::is_real() const {
  return std::all_of(values.begin(), values.end(), [](const UnitRoot& v) { return v.is_zero() || v.real_sign() != 0; });
}

int conductor(const Character& chi) {
  const int m = chi.modulus;
  for (int f = 1; f <= m; ++f) {
    if (m % f != 0) continue;
    bool induced = true;
    std::vector<std::optional<UnitRoot>> seen(static_cast<std::size_t>(f));
    for (int n = 1; n < m && induced; ++n) {
      if (std::gcd(n, m) != 1) continue;
      auto& slot = seen[static_cast<std::size_t>(n % f)];
      if (!slot) {
        slot = chi(n);
      } else if (!(*slot == chi(n))) {
        induced = false;
      }
    }
    if (induced) return f;
  }
  return m;
}

SignedRoot dirichlet_inverse_coeff(const Character& chi, std::uint64_t n) {
  const int mu = mobius(n);
  const UnitRoot& v = chi(static_cast<long>(n % static_cast<std::uint64_t>(chi.modulus)));
  if (mu == 0 || v.is_zero()) return {0, UnitRoot::zero(chi.order())};
  return {mu, v};
}

CharacterTable character_table(int m) {
  if (m < 1) throw DomainError("modulus must be positive");
  CharacterTable table;
  table.modulus_ = m;
  const auto um = static_cast<std::uint64_t>(m);
  const int phi = static_cast<int>(totient(um));

  std::vector<FactorCharacters> factors;
  for (auto [p, e] : factorize(um)) factors.push_back(p == 2 ? two_power(e) : odd_prime_power(p, e));

  std::vector<std::size_t> idx(factors.size(), 0);
  for (int r = 1; r <= phi; ++r) {
    Character chi;
    chi.modulus = m;
    chi.index = r;
    chi.values.assign(static_cast<std::size_t>(m), UnitRoot::zero(phi));
    for (int n = 0; n < m; ++n) {
      if (std::gcd(n, m) != 1) continue;
      long k = 0;
      for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto& fc = factors[f];
        int e = fc.rows[idx[f]][static_cast<std::size_t>(static_cast<std::uint64_t>(n) % fc.q)];
        k += static_cast<long>(e) * (phi / fc.phi);
      }
      chi.values[static_cast<std::size_t>(n)] = UnitRoot::power(phi, k);
    }
    if (m == 1) chi.values[0] = UnitRoot::power(1, 0);
    chi.conductor = conductor(chi);
    table.rows_.push_back(std::move(chi));
    // odometer, last factor fastest
    for (std::size_t f = factors.size(); f-- > 0;) {
      if (++idx[f] < factors[f].rows.size()) break;
      idx[f] = 0;
    }
  }
  return table;
}

int CharacterTable::find(const std::vector<UnitRoot>& values) const {
  for (const auto& chi : rows_) {
    if (chi.values == values) return chi.index;
  }
  return 0;
}

const Character& CharacterTable::power(int r, long t) const {
  const Character& chi = (*this)[r];
  std::vector<UnitRoot> v;
  v.reserve(chi.values.size());
  for (const auto& x : chi.values) v.push_back(x.pow(t));
  return (*this)[find(v)];
}

const Character& CharacterTable::conjugate(int r) const {
  const Character& chi = (*this)[r];
  std::vector<UnitRoot> v;
  v.reserve(chi.values.size());
  for (const auto& x : chi.values) v.push_back(x.conj());
  return (*this)[find(v)];
}

const CharacterTable& cached_character_table(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[m];
  if (!slot) slot = std::make_unique<CharacterTable>(character_table(m));
  return *slot;
}

Character char_power(const Character& chi, long t) {
  return cached_character_table(chi.modulus).power(chi.index, t);
}

}  // namespace dirichlet
