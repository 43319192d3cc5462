#include "polybern/bigfloat.hpp"

#include <algorithm>
#include <climits>

namespace polybern {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::rounded(mpfr_prec_t precision) const {
  BigFloat out(precision);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

long BigFloat::exponent2() const {
  if (mpfr_zero_p(v_)) return LONG_MIN;
  return mpfr_get_exp(v_);
}

std::string BigFloat::to_scientific(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* buffer = nullptr;
  if (mpfr_asprintf(&buffer, "%.*Re", digits - 1, v_) < 0) return "nan";
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

template <class Op>
BigFloat unary(const BigFloat& x, Op op) {
  BigFloat out(x.precision());
  op(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
BigFloat operator-(const BigFloat& a) { return unary(a, mpfr_neg); }

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat expm1(const BigFloat& x) { return unary(x, mpfr_expm1); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log1p(const BigFloat& x) { return unary(x, mpfr_log1p); }
BigFloat sinh(const BigFloat& x) { return unary(x, mpfr_sinh); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }
BigFloat gamma(const BigFloat& x) { return unary(x, mpfr_gamma); }
BigFloat zeta(const BigFloat& x) { return unary(x, mpfr_zeta); }

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat out(wider(x, y));
  mpfr_pow(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return out;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat out(x.precision());
  mpfr_mul_2si(out.raw(), x.raw(), e, MPFR_RNDN);
  return out;
}

BigFloat const_pi(mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

BigFloat pow2(long e, mpfr_prec_t precision) {
  BigFloat out(1, precision);
  mpfr_mul_2si(out.raw(), out.raw(), e, MPFR_RNDN);
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace polybern
