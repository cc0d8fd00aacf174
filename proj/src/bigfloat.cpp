#include "dirichlet/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace dirichlet {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

struct MpfrStringDeleter {
  void operator()(char* p) const { mpfr_free_str(p); }
};
}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

BigReal::BigReal(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, kRnd);
}

BigReal::BigReal(std::string_view decimal, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  std::string s(decimal);
  char* end = nullptr;
  mpfr_strtofr(v_, s.c_str(), &end, 10, kRnd);
  if (end == s.c_str() || *end != '\0' || !mpfr_number_p(v_)) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + s);
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Steal the limbs and leave `other` as a valid 2-bit zero.
  *v_ = *other.v_;
  mpfr_init2(other.v_, MPFR_PREC_MIN);
  mpfr_set_zero(other.v_, 1);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    if (prec() != other.prec()) mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

void BigReal::grow_to(mpfr_prec_t p) {
  if (p > prec()) mpfr_prec_round(v_, p, kRnd);
}

std::string BigReal::to_fixed(int decimals) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*RNf", decimals, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::unique_ptr<char, MpfrStringDeleter> guard(raw);
  std::string out(raw);
  if (!out.empty() && out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string BigReal::to_sci(int digits) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*RNe", std::max(digits - 1, 0), v_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::unique_ptr<char, MpfrStringDeleter> guard(raw);
  return std::string(raw);
}

BigReal& BigReal::operator+=(const BigReal& o) {
  grow_to(o.prec());
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  grow_to(o.prec());
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  grow_to(o.prec());
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  grow_to(o.prec());
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}
BigReal& BigReal::operator+=(long o) {
  mpfr_add_si(v_, v_, o, kRnd);
  return *this;
}
BigReal& BigReal::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, kRnd);
  return *this;
}
BigReal& BigReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}
BigReal& BigReal::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(prec());
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define DIRICHLET_UNARY(name, fn)         \
  BigReal name(const BigReal& x) {        \
    BigReal r(x.prec());                  \
    fn(r.get(), x.get(), kRnd);           \
    return r;                             \
  }
DIRICHLET_UNARY(abs, mpfr_abs)
DIRICHLET_UNARY(sqrt, mpfr_sqrt)
DIRICHLET_UNARY(log, mpfr_log)
DIRICHLET_UNARY(exp, mpfr_exp)
DIRICHLET_UNARY(cos, mpfr_cos)
DIRICHLET_UNARY(sin, mpfr_sin)
#undef DIRICHLET_UNARY

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

BigReal log_ui(unsigned long n, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_log_ui(r.get(), n, kRnd);
  return r;
}

BigReal pi(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

BigReal pow10(long e, mpfr_prec_t prec) {
  BigReal r(prec);
  BigReal ten(10, prec);
  mpfr_pow_si(r.get(), ten.get(), e, kRnd);
  return r;
}

BigReal ratio(long num, long den, mpfr_prec_t prec) {
  BigReal r(num, prec + 64);
  r /= den;
  BigReal out(prec);
  mpfr_set(out.get(), r.get(), kRnd);
  return out;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigReal r = re * o.re;
  r -= im * o.im;
  BigReal i = re * o.im;
  i += im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& o) {
  re *= o;
  im *= o;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& o) {
  re /= o;
  im /= o;
  return *this;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal abs(const BigComplex& z) {
  BigReal r(z.prec());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), kRnd);
  return r;
}

BigComplex log(const BigComplex& z) {
  return {log(abs(z)), atan2(z.im, z.re)};
}

BigComplex exp(const BigComplex& z) {
  BigReal mod = exp(z.re);
  return {mod * cos(z.im), mod * sin(z.im)};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal den = b.re * b.re;
  den += b.im * b.im;
  BigComplex out = a * conj(b);
  out /= den;
  return out;
}

}  // namespace dirichlet
