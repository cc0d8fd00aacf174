#include "dirichlet/constants.hpp"

#include <cctype>
#include <numeric>

#include "dirichlet/engine.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/primes.hpp"

namespace dirichlet {

char constant_letter(ConstantKind k) {
  switch (k) {
    case ConstantKind::Artin:
      return 'A';
    case ConstantKind::Quadratic:
      return 'Q';
    case ConstantKind::FellerTornier:
      return 'F';
    case ConstantKind::HardyLittlewood:
      return 'C';
  }
  return '?';
}

std::optional<ConstantKind> parse_constant_kind(const std::string& s) {
  if (s.size() != 1) return std::nullopt;
  switch (std::tolower(static_cast<unsigned char>(s[0]))) {
    case 'a':
      return ConstantKind::Artin;
    case 'q':
      return ConstantKind::Quadratic;
    case 'f':
      return ConstantKind::FellerTornier;
    case 'c':
      return ConstantKind::HardyLittlewood;
    default:
      return std::nullopt;
  }
}

long constant_min_order(ConstantKind k) {
  return (k == ConstantKind::Artin || k == ConstantKind::Quadratic) ? 1 : 2;
}

namespace {

// sum_{j=1}^{t/(1+s)} sign_j/j C(t - s j - 1, j - 1)
mpq_class binomial_weight(long t, long s, bool alternating) {
  mpq_class w = 0;
  for (long j = 1; j * (s + 1) <= t; ++j) {
    mpq_class term(binomial(t - s * j - 1, j - 1), mpz_class(j));
    if (alternating && ((t - (s + 1) * j) & 1L)) term = -term;
    w += term;
  }
  w.canonicalize();
  return w;
}

// Euler factor of one prime p for the given family.
BigReal single_prime_factor(ConstantKind kind, std::uint64_t p, long s, mpfr_prec_t bits) {
  const BigReal one(1, bits);
  const BigReal pb(static_cast<long>(p), bits);
  const BigReal ps = pow(pb, s);
  switch (kind) {
    case ConstantKind::Artin:
      return one - one / (ps * (pb - 1));
    case ConstantKind::Quadratic:
      return one - one / (ps * (pb + 1));
    case ConstantKind::FellerTornier:
      return one - BigReal(2, bits) / ps;
    case ConstantKind::HardyLittlewood:
      // p^{s-1} (p - s) / (p - 1)^s
      return pow(pb, s - 1) * (pb - s) / pow(pb - 1, s);
  }
  return one;
}

bool factor_applies(ConstantKind kind, std::uint64_t p, long s) {
  return kind != ConstantKind::HardyLittlewood || p > static_cast<std::uint64_t>(s);
}

}  // namespace

BigReal Engine::constant(ConstantKind kind, int m, int n, long s) {
  ResidueClass{m, n}.validate();
  check_modulus(m);
  if (s < constant_min_order(kind)) {
    throw DomainError(std::string(1, constant_letter(kind)) + " constants need s >= " +
                      std::to_string(constant_min_order(kind)));
  }
  const std::uint64_t M = ctx_.cutoff;
  if (kind == ConstantKind::HardyLittlewood && M <= static_cast<std::uint64_t>(s)) {
    throw DomainError("Hardy-Littlewood series diverges unless the cutoff exceeds s");
  }
  const mpfr_prec_t bits = ctx_.bits();

  BigReal log_tail(bits);
  switch (kind) {
    case ConstantKind::Artin:
    case ConstantKind::Quadratic: {
      const bool alt = kind == ConstantKind::Quadratic;
      log_tail = weighted_p_series(m, n, M, s + 1, 1, [&](long t) { return binomial_weight(t, s, alt); });
      break;
    }
    case ConstantKind::FellerTornier:
      log_tail = weighted_p_series(m, n, M, 1, s, [](long t) {
        mpz_class two_t;
        mpz_ui_pow_ui(two_t.get_mpz_t(), 2, static_cast<unsigned long>(t));
        return mpq_class(two_t, mpz_class(t));
      });
      break;
    case ConstantKind::HardyLittlewood:
      log_tail = weighted_p_series(m, n, M, 2, 1, [&](long t) {
        mpz_class st;
        mpz_ui_pow_ui(st.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(t));
        return mpq_class(st - s, mpz_class(t));
      });
      break;
  }
  BigReal out = exp(-log_tail);

  auto primes = primes_to(M);
  const ResidueClass rc{m, n};
  for (std::uint64_t p : *primes) {
    if (p > M) break;
    if (!rc.contains(p) || !factor_applies(kind, p, s)) continue;
    out *= single_prime_factor(kind, p, s, bits);
  }
  return out;
}

BigReal Engine::star_row(ConstantKind kind, int m, long s) {
  check_modulus(m);
  const mpfr_prec_t bits = ctx_.bits();
  BigReal out(1, bits);
  for (int n = 1; n <= m; ++n) {
    if (std::gcd(n, m) == 1) out *= constant(kind, m, n, s);
  }
  // primes dividing m live alone in their trench class
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(m))) {
    if (factor_applies(kind, p, s)) out *= single_prime_factor(kind, p, s, bits);
  }
  return out;
}

}  // namespace dirichlet
