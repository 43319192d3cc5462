#pragma once

#include <mpfr.h>

#include <string>

#include "polybern/rational.hpp"

namespace polybern {

/// Owning wrapper around an mpfr_t with an explicit binary precision.
///
/// Binary operators return a value at the larger operand precision, rounded
/// to nearest. Assignment copies the source precision along with the value;
/// compound assignment rounds into the target's precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 64);
  BigFloat(long value, mpfr_prec_t precision);
  BigFloat(const Rat& value, mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// A copy of *this rounded to the given precision.
  BigFloat rounded(mpfr_prec_t precision) const;

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-2 exponent e with 2^{e-1} <= |x| < 2^e; LONG_MIN for zero.
  long exponent2() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Scientific notation with `digits` significant decimal digits,
  /// e.g. "1.644934066848226e+00".
  std::string to_scientific(int digits) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
/// x^y for x > 0.
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat gamma(const BigFloat& x);
/// Riemann zeta at any real argument other than 1.
BigFloat zeta(const BigFloat& x);
/// x * 2^e.
BigFloat ldexp(const BigFloat& x, long e);
BigFloat const_pi(mpfr_prec_t precision);
/// 2^e at the given precision.
BigFloat pow2(long e, mpfr_prec_t precision);
BigFloat max(const BigFloat& a, const BigFloat& b);

}  // namespace polybern
