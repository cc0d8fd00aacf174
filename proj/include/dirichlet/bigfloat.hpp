#pragma once

// Thin RAII layer over MPFR: a real with an explicit binary precision and a
// complex pair of such reals. Binary operations produce a result carrying the
// larger of the operand precisions; every operation rounds to nearest.

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace dirichlet {

class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec);
  BigReal(long value, mpfr_prec_t prec);
  BigReal(std::string_view decimal, mpfr_prec_t prec);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Fixed-point decimal string rounded to nearest at `decimals` places.
  /// A value that rounds to zero prints without a sign.
  std::string to_fixed(int decimals) const;
  /// Scientific notation with `digits` significant digits (diagnostics).
  std::string to_sci(int digits) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator+=(long o);
  BigReal& operator-=(long o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);

  BigReal operator-() const;

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator+(BigReal a, long b) { return a += b; }
  friend BigReal operator-(BigReal a, long b) { return a -= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  void grow_to(mpfr_prec_t p);
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal log_ui(unsigned long n, mpfr_prec_t prec);
BigReal pi(mpfr_prec_t prec);
/// 10^e at the given precision.
BigReal pow10(long e, mpfr_prec_t prec);
/// Exact rational num/den rounded once.
BigReal ratio(long num, long den, mpfr_prec_t prec);

struct BigComplex {
  BigReal re;
  BigReal im;

  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(BigReal r) : re(r), im(r.prec()) {}

  mpfr_prec_t prec() const { return re.prec(); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const BigReal& o);
  BigComplex& operator/=(const BigReal& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }
  BigComplex operator-() const { return {-re, -im}; }
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
/// Principal branch logarithm.
BigComplex log(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex operator/(const BigComplex& a, const BigComplex& b);

/// Bits needed to carry `digits` decimal digits plus a few spare bits.
mpfr_prec_t digits_to_bits(int digits);

}  // namespace dirichlet
