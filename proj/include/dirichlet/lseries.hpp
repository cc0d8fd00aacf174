#pragma once

// Exact tail coefficients for L'(1, chi).
//
// With h = floor((m-1)/2) and blocks n = km + e, |e| <= h,
//   sum_e chi(e) log(km+e)/(km+e) = sum_{j>=2} (alpha_j + beta_j log(km)) / (km)^j
// where beta_j = sum_e chi(e) (-e)^{j-1} and alpha_j = -H_{j-1} beta_j.
// Both are elements of Q(zeta_phi), kept as rational coefficient vectors over
// the powers of zeta_phi = exp(2 pi i / phi(m)).

#include <gmpxx.h>

#include <vector>

#include "dirichlet/bigfloat.hpp"
#include "dirichlet/characters.hpp"
#include "dirichlet/precision.hpp"

namespace dirichlet {

struct Cyclotomic {
  int order = 1;
  /// coeff[k] multiplies zeta_order^k.
  std::vector<mpq_class> coeff;

  explicit Cyclotomic(int ord = 1) : order(ord), coeff(static_cast<std::size_t>(ord)) {}
  /// Exact zero test (the powers of zeta_order are not linearly independent).
  bool is_zero() const;
  /// Rewrites the coefficients modulo the order-th cyclotomic polynomial,
  /// which makes the representation unique.
  void reduce();
  void add(const UnitRoot& u, const mpq_class& c);
  Cyclotomic scaled(const mpq_class& c) const;
  BigComplex to_complex(const PrecisionContext& ctx) const;
  /// Sum of |coeff|, an upper bound on the modulus.
  mpq_class l1_norm() const;
};

struct TailCoefficients {
  /// alpha[j], beta[j] for j = 0..j_max (entries below 2 unused and zero).
  std::vector<Cyclotomic> alpha;
  std::vector<Cyclotomic> beta;
};

/// Throws DomainError for principal chi or j_max < 2.
TailCoefficients tail_coefficients(const Character& chi, int j_max);

}  // namespace dirichlet
