#include <algorithm>
#include <cmath>

#include "dirichlet/engine.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/primes.hpp"

namespace dirichlet {

namespace {
constexpr long kMaxSeriesTerms = 4000;
}

Engine::Engine(PrecisionContext ctx) : ctx_(ctx) { ctx_.validate(1); }

void Engine::check_modulus(int m) const { ctx_.validate(m); }

std::shared_ptr<const std::vector<std::uint64_t>> Engine::primes_to(std::uint64_t M) {
  std::lock_guard lock(mu_);
  if (primes_ && primes_limit_ >= M) return primes_;
  const std::uint64_t limit = std::max<std::uint64_t>(M, ctx_.cutoff);
  primes_ = std::make_shared<const std::vector<std::uint64_t>>(primes_up_to(limit));
  primes_limit_ = limit;
  return primes_;
}

std::shared_ptr<const std::vector<BigReal>> Engine::inv_powers(std::uint64_t M, long sigma) {
  return inv_powers_.get(std::make_pair(M, sigma), [&]() -> RealsPtr {
    auto primes = primes_to(M);
    const mpfr_prec_t bits = ctx_.bits();
    const BigReal negligible = pow10(-(ctx_.working_digits() + 10), bits);
    auto out = std::make_shared<std::vector<BigReal>>();
    for (std::uint64_t p : *primes) {
      if (p > M) break;
      BigReal x = pow(BigReal(static_cast<long>(p), bits), -sigma);
      if (x < negligible) break;
      out->push_back(std::move(x));
    }
    return out;
  });
}

std::shared_ptr<const std::vector<BigReal>> Engine::class_sums(int m, std::uint64_t M, long sigma) {
  return class_sums_.get(std::make_tuple(m, M, sigma), [&]() -> RealsPtr {
    auto primes = primes_to(M);
    auto powers = inv_powers(M, sigma);
    auto out = std::make_shared<std::vector<BigReal>>(static_cast<std::size_t>(m), BigReal(ctx_.bits()));
    for (std::size_t i = 0; i < powers->size(); ++i) {
      (*out)[(*primes)[i] % static_cast<std::uint64_t>(m)] += (*powers)[i];
    }
    return out;
  });
}

BigReal Engine::class_direct(int m, int n, std::uint64_t M, long sigma) {
  return (*class_sums(m, M, sigma))[static_cast<std::size_t>(n % m)];
}

BigReal Engine::hurwitz(long sigma, Fraction a) {
  a = a.reduced();
  return hurwitz_.get(std::make_tuple(sigma, a.num, a.den), [&] { return hurwitz_zeta(sigma, a, ctx_); });
}

BigReal Engine::weighted_p_series(int m, int n, std::uint64_t M, long t0, long step,
                                  const std::function<mpq_class(long)>& weight) {
  const mpfr_prec_t bits = ctx_.bits();
  const double tol_log10 = ctx_.tail_tol_log10();
  const double log10_m = std::log10(static_cast<double>(M));
  auto bound_log10 = [&](long t, const mpq_class& w) {
    if (w == 0) return -HUGE_VAL;
    const long sigma = t * step;
    mpq_class aw = abs(w);
    double lw = std::log10(aw.get_num().get_d()) - std::log10(aw.get_den().get_d());
    return lw + static_cast<double>(1 - sigma) * log10_m - std::log10(static_cast<double>(sigma - 1));
  };

  BigReal sum(bits);
  int quiet = 0;
  for (long t = t0;; ++t) {
    if (t - t0 > kMaxSeriesTerms) throw PrecisionUnreachable("P-series did not reach tolerance; raise the cutoff");
    const mpq_class w = weight(t);
    const double b = bound_log10(t, w);
    if (b < tol_log10) {
      // the remaining terms decay geometrically once three in a row are negligible
      if (++quiet >= 3) break;
      continue;
    }
    quiet = 0;
    sum += to_big(w, bits) * p_incomplete_cached(m, n, M, t * step);
  }
  return sum;
}

}  // namespace dirichlet
