#include "dirichlet/engine.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/primes.hpp"

namespace dirichlet {

BigReal Engine::zeta_mod_incomplete(int m, int n, std::uint64_t M, long s) {
  ResidueClass{m, n}.validate();
  check_modulus(m);
  if (s < 2) throw DomainError("zeta_{m,n}(s) needs s >= 2");
  if (M < 2) throw DomainError("cutoff M must be at least 2");
  // log zeta_{m,n}(M, s) = sum_t P_{m,n}(M, s t) / t
  BigReal log_z = weighted_p_series(m, n, M, 1, s, [](long t) { return mpq_class(1, static_cast<unsigned long>(t)); });
  return exp(log_z);
}

BigReal Engine::zeta_mod(int m, int n, long s) {
  const std::uint64_t M = ctx_.cutoff;
  BigReal out = zeta_mod_incomplete(m, n, M, s);
  const mpfr_prec_t bits = ctx_.bits();
  auto primes = primes_to(M);
  auto powers = inv_powers(M, s);
  const ResidueClass rc{m, n};
  BigReal prod(1, bits);
  for (std::size_t i = 0; i < powers->size(); ++i) {
    if (!rc.contains((*primes)[i])) continue;
    prod *= BigReal(1, bits) - (*powers)[i];
  }
  return out / prod;
}

}  // namespace dirichlet
