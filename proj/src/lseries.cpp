#include "dirichlet/lseries.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "dirichlet/engine.hpp"
#include "dirichlet/errors.hpp"

namespace dirichlet {

namespace {

constexpr int kMaxTailOrder = 2000;

double log10_q(const mpq_class& q) {
  if (q == 0) return -HUGE_VAL;
  mpq_class a = abs(q);
  long e_num = 0;
  long e_den = 0;
  double n = mpz_get_d_2exp(&e_num, a.get_num_mpz_t());
  double d = mpz_get_d_2exp(&e_den, a.get_den_mpz_t());
  return std::log10(n / d) + static_cast<double>(e_num - e_den) * std::log10(2.0);
}

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_poly(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<mpz_class> p(static_cast<std::size_t>(n + 1));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<mpz_class> q = cyclotomic_poly(d);
    const std::size_t dq = q.size() - 1;
    std::vector<mpz_class> quot(p.size() - dq);
    // exact division by a monic divisor
    for (std::size_t k = p.size() - 1; k + 1 > dq; --k) {
      const mpz_class c = p[k];
      quot[k - dq] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dq; ++i) p[k - dq + i] -= c * q[i];
    }
    p = std::move(quot);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

Cyclotomic beta_of(const Character& chi, int j) {
  const int h = (chi.modulus - 1) / 2;
  Cyclotomic out(chi.order());
  for (int e = -h; e <= h; ++e) {
    const UnitRoot& v = chi(e);
    if (v.is_zero()) continue;
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), mpz_class(-e).get_mpz_t(), static_cast<unsigned long>(j - 1));
    out.add(v, mpq_class(p));
  }
  out.reduce();
  return out;
}

BigComplex char_value(const Character& chi, long n, const PrecisionContext& ctx) {
  return to_complex(chi(n), ctx);
}

}  // namespace

void Cyclotomic::reduce() {
  const std::vector<mpz_class> phi = cyclotomic_poly(order);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = coeff.size(); k-- > deg;) {
    const mpq_class c = coeff[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) coeff[k - deg + i] -= c * phi[i];
  }
}

bool Cyclotomic::is_zero() const {
  Cyclotomic r = *this;
  r.reduce();
  for (const auto& c : r.coeff) {
    if (c != 0) return false;
  }
  return true;
}

void Cyclotomic::add(const UnitRoot& u, const mpq_class& c) {
  if (u.is_zero()) return;
  coeff[static_cast<std::size_t>(u.exponent())] += c;
}

Cyclotomic Cyclotomic::scaled(const mpq_class& c) const {
  Cyclotomic out = *this;
  for (auto& x : out.coeff) x *= c;
  return out;
}

BigComplex Cyclotomic::to_complex(const PrecisionContext& ctx) const {
  BigComplex out(ctx.bits());
  for (int k = 0; k < order; ++k) {
    const mpq_class& c = coeff[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    out += dirichlet::to_complex(UnitRoot::power(order, k), ctx) * to_big(c, ctx.bits());
  }
  return out;
}

mpq_class Cyclotomic::l1_norm() const {
  mpq_class s = 0;
  for (const auto& c : coeff) s += abs(c);
  return s;
}

TailCoefficients tail_coefficients(const Character& chi, int j_max) {
  if (chi.is_principal()) throw DomainError("tail coefficients need a non-principal character");
  if (j_max < 2) throw DomainError("j_max must be at least 2");
  TailCoefficients tc;
  tc.alpha.assign(static_cast<std::size_t>(j_max + 1), Cyclotomic(chi.order()));
  tc.beta.assign(static_cast<std::size_t>(j_max + 1), Cyclotomic(chi.order()));
  for (int j = 2; j <= j_max; ++j) {
    tc.beta[static_cast<std::size_t>(j)] = beta_of(chi, j);
    tc.alpha[static_cast<std::size_t>(j)] =
        tc.beta[static_cast<std::size_t>(j)].scaled(-harmonic(static_cast<unsigned>(j - 1)));
  }
  return tc;
}

BigComplex Engine::l_value(const Character& chi, long s) {
  check_modulus(chi.modulus);
  if (s < 1) throw DomainError("L(s, chi) is only provided for integer s >= 1");
  const int m = chi.modulus;
  const mpfr_prec_t bits = ctx_.bits();
  BigComplex sum(bits);
  if (s == 1) {
    if (chi.is_principal()) throw PoleError("L(s, chi) has a pole at s = 1 for the principal character");
    // pole parts cancel because sum chi(n) = 0, leaving -1/m sum chi(n) psi(n/m)
    for (int n = 1; n <= m; ++n) {
      if (chi(n).is_zero()) continue;
      sum += char_value(chi, n, ctx_) * digamma({n, m}, ctx_);
    }
    sum /= BigReal(-m, bits);
    return sum;
  }
  for (int n = 1; n <= m; ++n) {
    if (chi(n).is_zero()) continue;
    sum += char_value(chi, n, ctx_) * hurwitz(s, {n, m});
  }
  sum *= pow(BigReal(m, bits), -s);
  return sum;
}

BigComplex Engine::prime_product(std::uint64_t M, const Character& chi, long sigma) {
  const mpfr_prec_t bits = ctx_.bits();
  BigComplex prod{BigReal(1, bits), BigReal(bits)};
  if (M < 2) return prod;
  const int m = chi.modulus;
  auto primes = primes_to(M);
  auto powers = inv_powers(M, sigma);
  std::vector<BigComplex> roots;
  roots.reserve(static_cast<std::size_t>(m));
  for (int n = 0; n < m; ++n) roots.push_back(char_value(chi, n, ctx_));
  const bool real = chi.is_real();
  for (std::size_t i = 0; i < powers->size(); ++i) {
    const auto r = static_cast<std::size_t>((*primes)[i] % static_cast<std::uint64_t>(m));
    if (chi(static_cast<long>(r)).is_zero()) continue;
    if (real) {
      // prod *= 1 -/+ x
      BigReal d = prod.re * (*powers)[i];
      if (roots[r].re.sign() > 0) {
        prod.re -= d;
      } else {
        prod.re += d;
      }
      continue;
    }
    BigComplex d = prod * roots[r];
    d *= (*powers)[i];
    prod -= d;
  }
  return prod;
}

BigComplex Engine::l_incomplete(std::uint64_t M, const Character& chi, long s) {
  return l_value(chi, s) * prime_product(M, chi, s);
}

BigComplex Engine::l_deriv(const Character& chi, long s) {
  check_modulus(chi.modulus);
  if (s == 1) return l_deriv_at_1(chi);
  if (s < 1) throw DomainError("L'(s, chi) is only provided for integer s >= 1");
  const int m = chi.modulus;
  const mpfr_prec_t bits = ctx_.bits();
  BigComplex zsum(bits);
  BigComplex dsum(bits);
  const BigReal sb(s, bits);
  for (int n = 1; n <= m; ++n) {
    if (chi(n).is_zero()) continue;
    HurwitzPair hp = hurwitz_zeta_with_ds(sb, {n, m}, ctx_);
    BigComplex c = char_value(chi, n, ctx_);
    zsum += c * hp.value;
    dsum += c * hp.deriv;
  }
  BigComplex out = dsum - zsum * log_ui(static_cast<unsigned long>(m), bits);
  out *= pow(BigReal(m, bits), -s);
  return out;
}

BigComplex Engine::l_deriv_at_1(const Character& chi, int m_direct) {
  check_modulus(chi.modulus);
  if (chi.is_principal()) throw PoleError("L'(1, chi) needs a non-principal character");
  if (m_direct < 1) throw DomainError("M_direct must be positive");
  const int m = chi.modulus;
  const int h = (m - 1) / 2;
  const mpfr_prec_t bits = ctx_.bits();

  // -sum_{n=2}^{M m + h} chi(n) log n / n
  BigComplex direct(bits);
  const long n_max = static_cast<long>(m_direct) * m + h;
  for (long n = 2; n <= n_max; ++n) {
    if (chi(n).is_zero()) continue;
    BigReal w = log_ui(static_cast<unsigned long>(n), bits) / BigReal(n, bits);
    direct += char_value(chi, n, ctx_) * w;
  }

  const BigReal log_m = log_ui(static_cast<unsigned long>(m), bits);
  std::vector<BigReal> log_k;
  for (long k = 1; k <= m_direct; ++k) log_k.push_back(log_ui(static_cast<unsigned long>(k), bits));
  const double log10_mm = std::log10(static_cast<double>(m) * m_direct);
  const double log_mm = std::log(static_cast<double>(m) * m_direct);
  const double tol_log10 = ctx_.tail_tol_log10();

  BigComplex tail(bits);
  int quiet = 0;
  for (int j = 2;; ++j) {
    if (j > kMaxTailOrder) throw PrecisionUnreachable("L'(1) tail did not converge");
    Cyclotomic beta = beta_of(chi, j);
    if (beta.is_zero()) continue;
    Cyclotomic alpha = beta.scaled(-harmonic(static_cast<unsigned>(j - 1)));

    // sum_{k>M} (km)^{-j} (alpha + beta log km) <= 2 (|alpha| + |beta| (log Mm + 1)) m^-j M^{1-j}/(j-1)
    const double la = log10_q(alpha.l1_norm());
    const double lb = log10_q(beta.l1_norm()) + std::log10(log_mm + 1);
    const double lab = std::max(la, lb) + std::log10(2.0);
    const double bound = std::log10(2.0) + lab - j * log10_mm + std::log10(static_cast<double>(m_direct)) -
                         std::log10(static_cast<double>(j - 1));
    if (bound < tol_log10) {
      if (++quiet >= 2) break;
      continue;
    }
    quiet = 0;

    BigReal pow_tail = riemann_zeta(j, ctx_);
    BigReal log_tail = -riemann_zeta_ds(j, ctx_);
    for (long k = 1; k <= m_direct; ++k) {
      BigReal kj = pow(BigReal(k, bits), -static_cast<long>(j));
      pow_tail -= kj;
      log_tail -= log_k[static_cast<std::size_t>(k - 1)] * kj;
    }
    // m^-j [alpha T + beta (log m T + Tlog)]
    BigComplex term = alpha.to_complex(ctx_) * pow_tail;
    term += beta.to_complex(ctx_) * (log_m * pow_tail + log_tail);
    term *= pow(BigReal(m, bits), -static_cast<long>(j));
    tail += term;
  }
  BigComplex out = -(direct + tail);
  return out;
}

}  // namespace dirichlet
