#include "dirichlet/specfun.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <vector>

#include "dirichlet/errors.hpp"

namespace dirichlet {

namespace {

constexpr long kMaxEulerMaclaurinTerms = 1L << 15;

struct BernoulliCache {
  std::mutex mu;
  std::vector<mpq_class> values{mpq_class(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

// B_{2j} / (2j)! as an exact rational.
mpq_class bernoulli_over_factorial(unsigned two_j) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), two_j);
  mpq_class q = bernoulli(two_j) / mpq_class(fact);
  q.canonicalize();
  return q;
}

}  // namespace

Fraction Fraction::reduced() const {
  if (den <= 0 || num <= 0 || num > den) {
    throw DomainError("Hurwitz/digamma argument must lie in (0,1], got " + std::to_string(num) + "/" +
                      std::to_string(den));
  }
  long g = std::gcd(num, den);
  return {num / g, den / g};
}

int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("mobius(0) is undefined");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

mpq_class bernoulli(unsigned k) {
  auto& cache = bernoulli_cache();
  std::lock_guard lock(cache.mu);
  auto& b = cache.values;
  while (b.size() <= k) {
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    const unsigned n = static_cast<unsigned>(b.size());
    mpq_class acc = 0;
    mpz_class c;
    for (unsigned j = 0; j < n; ++j) {
      if (j > 1 && (j & 1U)) continue;
      mpz_bin_uiui(c.get_mpz_t(), n + 1, j);
      acc += mpq_class(c) * b[j];
    }
    mpq_class next = -acc / mpq_class(n + 1);
    next.canonicalize();
    b.push_back(next);
  }
  return b[k];
}

mpq_class harmonic(unsigned n) {
  mpq_class h = 0;
  for (unsigned u = 1; u <= n; ++u) h += mpq_class(1, u);
  h.canonicalize();
  return h;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

BigReal to_big(const mpq_class& q, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigReal to_big(const mpz_class& z, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_set_z(r.get(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

namespace {

// One Euler-Maclaurin pass with a fixed number of direct terms. Returns false
// when the Bernoulli tail diverges before reaching the tolerance.
bool euler_maclaurin(const BigReal& s, Fraction a, long n_direct, const PrecisionContext& ctx,
                     bool want_deriv, HurwitzPair& out) {
  const mpfr_prec_t bits = ctx.bits();
  const BigReal tol = ctx.eval_tol();
  BigReal neg_s = -s;

  // (k + p/q)^{-s} = q^s (kq + p)^{-s}
  BigReal direct(bits);
  BigReal direct_log(bits);
  for (long k = 0; k < n_direct; ++k) {
    BigReal base(k * a.den + a.num, bits);
    BigReal term = pow(base, neg_s);
    if (want_deriv) direct_log += log(base) * term;
    direct += term;
  }
  BigReal log_q = log_ui(static_cast<unsigned long>(a.den), bits);
  BigReal q_pow_s = exp(s * log_q);
  direct *= q_pow_s;
  if (want_deriv) {
    // -sum log(k+a) (k+a)^{-s} = -q^s sum (log(kq+p) - log q)(kq+p)^{-s}
    direct_log *= q_pow_s;
    direct_log = direct * log_q - direct_log;
  }

  BigReal x = ratio(n_direct * a.den + a.num, a.den, bits);
  BigReal log_x = log(x);
  BigReal x_pow_neg_s = exp(neg_s * log_x);
  BigReal s_minus_1 = s - 1;

  BigReal value = direct;
  BigReal integral = x_pow_neg_s * x / s_minus_1;
  BigReal half = x_pow_neg_s / 2;
  value += integral;
  value += half;

  BigReal deriv(bits);
  if (want_deriv) {
    deriv = direct_log;
    deriv -= log_x * integral;
    deriv -= integral / s_minus_1;
    deriv -= log_x * half;
  }

  // T_j = B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
  BigReal poch = s;
  BigReal inv_sum = BigReal(1, bits) / s;
  BigReal xpow = x_pow_neg_s / x;
  BigReal x2 = x * x;
  BigReal prev_mag(bits);
  for (unsigned j = 1;; ++j) {
    BigReal term = to_big(bernoulli_over_factorial(2 * j), bits) * poch * xpow;
    BigReal dterm(bits);
    if (want_deriv) dterm = term * (inv_sum - log_x);
    BigReal mag = abs(term);
    if (want_deriv) mag += abs(dterm);
    if (j > 2 && mag > prev_mag) return false;
    value += term;
    if (want_deriv) deriv += dterm;
    BigReal ref = abs(value);
    if (want_deriv) ref += abs(deriv);
    if (mag < tol * ref) break;
    prev_mag = mag;
    BigReal a1 = s + static_cast<long>(2 * j - 1);
    BigReal a2 = s + static_cast<long>(2 * j);
    poch *= a1;
    poch *= a2;
    if (want_deriv) {
      inv_sum += BigReal(1, bits) / a1;
      inv_sum += BigReal(1, bits) / a2;
    }
    xpow /= x2;
  }
  out.value = std::move(value);
  out.deriv = std::move(deriv);
  return true;
}

HurwitzPair hurwitz_impl(const BigReal& s, Fraction a, const PrecisionContext& ctx, bool want_deriv) {
  if (!(s > BigReal(1, s.prec()))) throw DomainError("Hurwitz zeta requires s > 1");
  a = a.reduced();
  HurwitzPair out{BigReal(ctx.bits()), BigReal(ctx.bits())};
  for (long n = 2L * ctx.working_digits(); n <= kMaxEulerMaclaurinTerms; n *= 2) {
    if (euler_maclaurin(s, a, n, ctx, want_deriv, out)) return out;
  }
  throw PrecisionUnreachable("Hurwitz zeta: Bernoulli tail did not reach tolerance");
}

struct ZetaMemo {
  std::mutex mu;
  std::map<std::tuple<mpfr_prec_t, long, bool>, BigReal> values;
};

ZetaMemo& zeta_memo() {
  static ZetaMemo memo;
  return memo;
}

BigReal memo_zeta(long j, const PrecisionContext& ctx, bool deriv) {
  if (j < 2) throw DomainError("riemann_zeta requires integer j >= 2");
  auto key = std::make_tuple(ctx.bits(), j, deriv);
  auto& memo = zeta_memo();
  {
    std::lock_guard lock(memo.mu);
    if (auto it = memo.values.find(key); it != memo.values.end()) return it->second;
  }
  HurwitzPair both = hurwitz_impl(BigReal(j, ctx.bits()), {1, 1}, ctx, true);
  std::lock_guard lock(memo.mu);
  memo.values.insert_or_assign(std::make_tuple(ctx.bits(), j, false), both.value);
  memo.values.insert_or_assign(std::make_tuple(ctx.bits(), j, true), both.deriv);
  return deriv ? both.deriv : both.value;
}

}  // namespace

BigReal hurwitz_zeta(const BigReal& s, Fraction a, const PrecisionContext& ctx) {
  return hurwitz_impl(s, a, ctx, false).value;
}

BigReal hurwitz_zeta(long s, Fraction a, const PrecisionContext& ctx) {
  return hurwitz_zeta(BigReal(s, ctx.bits()), a, ctx);
}

BigReal hurwitz_zeta_ds(const BigReal& s, Fraction a, const PrecisionContext& ctx) {
  return hurwitz_impl(s, a, ctx, true).deriv;
}

BigReal hurwitz_zeta_ds(long s, Fraction a, const PrecisionContext& ctx) {
  return hurwitz_zeta_ds(BigReal(s, ctx.bits()), a, ctx);
}

HurwitzPair hurwitz_zeta_with_ds(const BigReal& s, Fraction a, const PrecisionContext& ctx) {
  return hurwitz_impl(s, a, ctx, true);
}

BigReal digamma(Fraction a, const PrecisionContext& ctx) {
  a = a.reduced();
  const mpfr_prec_t bits = ctx.bits();
  const BigReal tol = ctx.eval_tol();
  const long shift = 2L * ctx.working_digits();

  // psi(a) = psi(a + N) - sum_{k<N} q/(kq + p)
  BigReal recur(bits);
  for (long k = 0; k < shift; ++k) recur += ratio(a.den, k * a.den + a.num, bits);

  BigReal x = ratio(shift * a.den + a.num, a.den, bits);
  BigReal result = log(x) - BigReal(1, bits) / (x * 2);
  BigReal x2 = x * x;
  BigReal xpow = BigReal(1, bits) / x2;
  BigReal prev(bits);
  for (unsigned k = 1;; ++k) {
    // B_{2k} / (2k x^{2k})
    BigReal term = to_big(bernoulli(2 * k) / mpq_class(2 * k), bits) * xpow;
    BigReal mag = abs(term);
    if (k > 2 && mag > prev) throw PrecisionUnreachable("digamma asymptotic series diverged");
    result -= term;
    if (mag < tol) break;
    prev = mag;
    xpow /= x2;
  }
  return result - recur;
}

BigReal riemann_zeta(long j, const PrecisionContext& ctx) { return memo_zeta(j, ctx, false); }

BigReal riemann_zeta_ds(long j, const PrecisionContext& ctx) { return memo_zeta(j, ctx, true); }

}  // namespace dirichlet
