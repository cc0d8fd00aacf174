#pragma once

// Evaluation engine: owns a PrecisionContext and the caches shared by the
// L-series, prime-series, Euler-product and constant evaluations. All public
// methods are safe to call from several threads; cached values are
// deterministic so concurrent fills are harmless.
//
// Incomplete quantities carry the cutoff M explicitly:
//   L(M, s, chi)      = L(s, chi) prod_{p<=M} (1 - chi(p) p^-s)
//   S(M, s, chi)      = sum_{p>M} chi(p) p^-s
//   P_{m,n}(M, s)     = sum_{p>M, p=n (m)} p^-s
//   zeta_{m,n}(M, s)  = prod_{p>M, p=n (m)} (1 - p^-s)^-1

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "dirichlet/bigfloat.hpp"
#include "dirichlet/characters.hpp"
#include "dirichlet/constants.hpp"
#include "dirichlet/precision.hpp"
#include "dirichlet/specfun.hpp"

namespace dirichlet {

// Memo table where each key is computed once; concurrent callers for the
// same key wait on the first one. Errors are cached like values.
template <class K, class V>
class OnceMap {
 public:
  template <class Make>
  V get(const K& key, Make&& make) {
    std::promise<V> promise;
    std::shared_future<V> future;
    bool owner = false;
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it == map_.end()) {
        future = promise.get_future().share();
        map_.emplace(key, future);
        owner = true;
      } else {
        future = it->second;
      }
    }
    if (owner) {
      try {
        promise.set_value(make());
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return future.get();
  }

 private:
  std::mutex mu_;
  std::map<K, std::shared_future<V>> map_;
};

class Engine {
 public:
  explicit Engine(PrecisionContext ctx = {});

  const PrecisionContext& context() const { return ctx_; }

  // L-series
  BigComplex l_value(const Character& chi, long s);
  BigComplex l_incomplete(std::uint64_t M, const Character& chi, long s);
  BigComplex l_deriv(const Character& chi, long s);
  BigComplex l_deriv_at_1(const Character& chi, int m_direct = 40);

  // prime L-series and prime zeta modulo functions
  BigComplex prime_l_series(const Character& chi, long s);
  BigComplex prime_l_incomplete(std::uint64_t M, const Character& chi, long s);
  BigReal p_mod(int m, int n, long s);
  BigReal p_mod_incomplete(int m, int n, std::uint64_t M, long s);
  BigReal prime_zeta(long s);

  // Euler modulo products
  BigReal zeta_mod(int m, int n, long s);
  BigReal zeta_mod_incomplete(int m, int n, std::uint64_t M, long s);

  // residue-class constants
  BigReal constant(ConstantKind kind, int m, int n, long s);
  BigReal star_row(ConstantKind kind, int m, long s);

 private:
  using Key3 = std::tuple<int, int, long>;
  using Key4 = std::tuple<int, int, std::uint64_t, long>;

  // primes <= M, shared and immutable
  std::shared_ptr<const std::vector<std::uint64_t>> primes_to(std::uint64_t M);
  // p^-sigma for the primes <= M; may stop early where the values drop
  // below working precision
  std::shared_ptr<const std::vector<BigReal>> inv_powers(std::uint64_t M, long sigma);
  // sum_{p<=M, p=n (m)} p^-sigma for n = 0..m-1
  std::shared_ptr<const std::vector<BigReal>> class_sums(int m, std::uint64_t M, long sigma);

  BigReal hurwitz(long sigma, Fraction a);
  BigComplex prime_product(std::uint64_t M, const Character& chi, long sigma);
  BigComplex log_l_incomplete(std::uint64_t M, const Character& chi, long sigma);
  BigReal p_incomplete_cached(int m, int n, std::uint64_t M, long sigma);
  BigReal p_by_orthogonality(int m, int n, std::uint64_t M, long sigma);
  BigComplex prime_tail_series(std::uint64_t M, const Character& chi, long s);
  BigReal class_direct(int m, int n, std::uint64_t M, long sigma);

  // Truncated sum_{t>=t0} weight(t) P_{m,n}(M, t*step) using the bound
  // P(M, sigma) <= M^{1-sigma}/(sigma-1). Zero weights are skipped.
  BigReal weighted_p_series(int m, int n, std::uint64_t M, long t0, long step,
                            const std::function<mpq_class(long)>& weight);

  void check_modulus(int m) const;

  PrecisionContext ctx_;

  std::mutex mu_;
  std::shared_ptr<const std::vector<std::uint64_t>> primes_;
  std::uint64_t primes_limit_ = 0;
  using RealsPtr = std::shared_ptr<const std::vector<BigReal>>;
  OnceMap<std::pair<std::uint64_t, long>, RealsPtr> inv_powers_;
  OnceMap<std::tuple<int, std::uint64_t, long>, RealsPtr> class_sums_;
  OnceMap<std::tuple<long, long, long>, BigReal> hurwitz_;
  OnceMap<Key4, BigComplex> log_l_;
  OnceMap<Key4, BigComplex> s_inc_;
  OnceMap<Key4, BigReal> p_inc_;
};

}  // namespace dirichlet
