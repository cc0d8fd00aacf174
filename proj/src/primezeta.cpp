#include <cmath>
#include <numeric>

#include "dirichlet/engine.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/primes.hpp"

namespace dirichlet {

BigComplex Engine::log_l_incomplete(std::uint64_t M, const Character& chi, long sigma) {
  return log_l_.get(Key4{chi.modulus, chi.index, M, sigma}, [&] {
    BigComplex lm = l_incomplete(M, chi, sigma);
    BigComplex dev = lm;
    dev.re -= 1;
    if (abs(dev) >= BigReal(1, 8) / 2L) {
      throw BranchRiskError("|L(M, s, chi) - 1| >= 1/2 at m=" + std::to_string(chi.modulus) + " r=" +
                            std::to_string(chi.index) + " s=" + std::to_string(sigma) + "; raise the cutoff");
    }
    return log(lm);
  });
}

BigComplex Engine::prime_l_incomplete(std::uint64_t M, const Character& chi, long s) {
  check_modulus(chi.modulus);
  if (s < 1) throw DomainError("S(s, chi) is only provided for integer s >= 1");
  if (s == 1 && chi.is_principal()) throw PoleError("S(1, chi) diverges for the principal character");
  if (M < 2) throw DomainError("cutoff M must be at least 2");
  return s_inc_.get(Key4{chi.modulus, chi.index, M, s}, [&] { return prime_tail_series(M, chi, s); });
}

BigComplex Engine::prime_tail_series(std::uint64_t M, const Character& chi, long s) {
  const mpfr_prec_t bits = ctx_.bits();
  const double tol_log10 = ctx_.tail_tol_log10();
  const double log10_m = std::log10(static_cast<double>(M));
  const CharacterTable& table = cached_character_table(chi.modulus);

  // sum_t mu(t)/t log L(M, s t, chi^t)
  BigComplex sum(bits);
  int quiet = 0;
  for (long t = 1;; ++t) {
    const long sigma = s * t;
    if (sigma >= 2) {
      const double bound = std::log10(2.0) + static_cast<double>(1 - sigma) * log10_m -
                           std::log10(static_cast<double>(sigma - 1)) - std::log10(static_cast<double>(t));
      if (bound < tol_log10) {
        if (++quiet >= 3) break;
        continue;
      }
    }
    quiet = 0;
    const int mu = mobius(static_cast<std::uint64_t>(t));
    if (mu == 0) continue;
    const Character& chi_t = table.power(chi.index, t);
    BigComplex term = log_l_incomplete(M, chi_t, sigma);
    term /= BigReal(mu * t, bits);
    sum += term;
  }
  return sum;
}

BigComplex Engine::prime_l_series(const Character& chi, long s) {
  const std::uint64_t M = ctx_.cutoff;
  BigComplex out = prime_l_incomplete(M, chi, s);
  auto sums = class_sums(chi.modulus, M, s);
  for (int n = 0; n < chi.modulus; ++n) {
    if (chi(n).is_zero()) continue;
    out += to_complex(chi(n), ctx_) * (*sums)[static_cast<std::size_t>(n)];
  }
  return out;
}

BigReal Engine::p_incomplete_cached(int m, int n, std::uint64_t M, long sigma) {
  return p_inc_.get(Key4{m, n, M, sigma}, [&] { return p_by_orthogonality(m, n, M, sigma); });
}

BigReal Engine::p_by_orthogonality(int m, int n, std::uint64_t M, long sigma) {
  const mpfr_prec_t bits = ctx_.bits();
  BigReal out(bits);
  if (std::gcd(m, n) == 1) {
    // orthogonality: (1/phi) sum_r conj(chi_r(n)) S(M, sigma, chi_r)
    const CharacterTable& table = cached_character_table(m);
    BigComplex acc(bits);
    for (const Character& chi : table.rows()) {
      acc += to_complex(chi(n).conj(), ctx_) * prime_l_incomplete(M, chi, sigma);
    }
    acc /= BigReal(table.phi(), bits);
    if (abs(acc.im) > pow10(-(ctx_.target_digits - 3), bits)) {
      throw ImaginaryResidueError("P_{" + std::to_string(m) + "," + std::to_string(n) +
                                  "} kept an imaginary part " + acc.im.to_sci(3));
    }
    out = acc.re;
  }
  return out;
}

BigReal Engine::p_mod_incomplete(int m, int n, std::uint64_t M, long s) {
  ResidueClass{m, n}.validate();
  check_modulus(m);
  if (s < 2) throw DomainError("P_{m,n}(s) needs s >= 2");
  if (M < 2) throw DomainError("cutoff M must be at least 2");
  return p_incomplete_cached(m, n, M, s);
}

BigReal Engine::p_mod(int m, int n, long s) {
  const std::uint64_t M = ctx_.cutoff;
  BigReal out = p_mod_incomplete(m, n, M, s);
  out += class_direct(m, n, M, s);
  return out;
}

BigReal Engine::prime_zeta(long s) {
  if (s < 2) throw DomainError("P(s) needs s >= 2");
  const Character& chi1 = cached_character_table(2)[1];
  BigReal out = prime_l_series(chi1, s).re;
  out += pow(BigReal(2, ctx_.bits()), -s);
  return out;
}

}  // namespace dirichlet
