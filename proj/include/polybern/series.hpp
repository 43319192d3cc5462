#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polybern/params.hpp"
#include "polybern/poly.hpp"
#include "polybern/rational.hpp"

namespace polybern {

/// Truncated formal power series sum_{i<=N} c_i t^i with an explicit order N.
///
/// Binary operations on operands of different order truncate to the smaller
/// one. T is the coefficient ring (Rat, or Poly1 / Poly2 when a formal
/// variable such as x is carried symbolically).
template <class T>
class Series {
 public:
  explicit Series(std::size_t order) : c_(order + 1) {}
  explicit Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("Series needs at least one coefficient");
  }

  std::size_t order() const { return c_.size() - 1; }
  T& operator[](std::size_t i) { return c_.at(i); }
  const T& operator[](std::size_t i) const { return c_.at(i); }
  const std::vector<T>& coeffs() const { return c_; }

  Series truncate(std::size_t order) const {
    return Series(std::vector<T>(c_.begin(), c_.begin() + std::min(order, this->order()) + 1));
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<T> c_;
};

template <class T>
Series<T> operator+(const Series<T>& a, const Series<T>& b) {
  Series<T> out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

template <class T>
Series<T> operator-(const Series<T>& a, const Series<T>& b) {
  Series<T> out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// Truncated Cauchy product; the coefficient type follows the left operand.
template <class T, class U>
Series<T> mul(const Series<T>& a, const Series<U>& b) {
  Series<T> out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    for (std::size_t j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
  return mul(a, b);
}

using Series1 = Series<Rat>;

/// Truncated bivariate series sum_{i<=N, j<=M} c_ij t^i u^j (rectangular
/// truncation).
template <class T>
class Series2 {
 public:
  Series2(std::size_t order_t, std::size_t order_u)
      : n_(order_t), m_(order_u), c_((order_t + 1) * (order_u + 1)) {}

  std::size_t order_t() const { return n_; }
  std::size_t order_u() const { return m_; }
  T& operator()(std::size_t i, std::size_t j) { return c_.at(index(i, j)); }
  const T& operator()(std::size_t i, std::size_t j) const { return c_.at(index(i, j)); }

  /// f(t) g(u) as a bivariate series.
  template <class U>
  static Series2 outer(const Series<T>& f, const Series<U>& g) {
    Series2 out(f.order(), g.order());
    for (std::size_t i = 0; i <= f.order(); ++i) {
      for (std::size_t j = 0; j <= g.order(); ++j) out(i, j) = f[i] * g[j];
    }
    return out;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > n_ || j > m_) throw std::out_of_range("Series2 index past truncation order");
    return i * (m_ + 1) + j;
  }

  std::size_t n_, m_;
  std::vector<T> c_;
};

template <class T>
Series2<T> operator+(const Series2<T>& a, const Series2<T>& b) {
  Series2<T> out(std::min(a.order_t(), b.order_t()), std::min(a.order_u(), b.order_u()));
  for (std::size_t i = 0; i <= out.order_t(); ++i) {
    for (std::size_t j = 0; j <= out.order_u(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

template <class T, class U>
Series2<T> mul(const Series2<T>& a, const Series2<U>& b) {
  Series2<T> out(std::min(a.order_t(), b.order_t()), std::min(a.order_u(), b.order_u()));
  const std::size_t n = out.order_t(), m = out.order_u();
  for (std::size_t i1 = 0; i1 <= n; ++i1) {
    for (std::size_t j1 = 0; j1 <= m; ++j1) {
      for (std::size_t i2 = 0; i1 + i2 <= n; ++i2) {
        for (std::size_t j2 = 0; j1 + j2 <= m; ++j2) out(i1 + i2, j1 + j2) += a(i1, j1) * b(i2, j2);
      }
    }
  }
  return out;
}

template <class T>
Series2<T> operator*(const Series2<T>& a, const Series2<T>& b) {
  return mul(a, b);
}

using Series2Rat = Series2<Rat>;

/// e^{ct} to order N: coefficients c^n / n!.
Series1 ps_exp(const Rat& c, std::size_t order);

/// Index of the first nonzero coefficient, or order + 1 for the zero series.
std::size_t valuation(const Series1& s);

/// a / b. When b(0) = 0, the common factor t^v (v = valuation of b) is
/// cancelled first, so the result has order min(order a, order b) - v.
/// Throws SeriesError if b vanishes to its truncation order or if a has
/// smaller valuation than b.
Series1 ps_div(const Series1& a, const Series1& b);

/// outer(inner(t)); requires inner(0) = 0 (SeriesError otherwise).
Series1 ps_compose(const Series1& outer, const Series1& inner);

/// Li_k(z) = sum_{n>=1} z^n / n^k as a formal series, any integer k.
Series1 polylog_series(long k, std::size_t order);

/// Which power of x multiplies the Eulerian number <r, j> in the numerator
/// of the rational form of Li_{-r}(x).
enum class EulerianExponent {
  kAscentsPlusOne,  ///< <r, j> x^{j+1}
  kRMinusJ,         ///< <r, j> x^{r-j}
};

/// Expands (sum_j <r, j> x^e(j)) / (1 - x)^{r+1} to order N.
Series1 polylog_neg_rational(unsigned r, std::size_t order,
                             EulerianExponent exponent = EulerianExponent::kAscentsPlusOne);

/// integral_0^z f(t)/t dt; requires f(0) = 0 (SeriesError otherwise).
Series1 ps_integrate_over_t(const Series1& f);

/// Li_k(1 - (ab)^{-t}) e^{xt} / (b^t - a^{-t}) truncated to order N. The
/// n-th coefficient times n! is B_n^{(k)}(x; a, b).
Series1 gf_kernel(long k, const Params& params, const Rat& x, std::size_t order);

/// For a series A(t), the polynomial P_n(x) = n! [t^n] A(t) e^{xt}.
/// Requires n <= order of A.
Poly1 appell_polynomial(const Series1& a, std::size_t n);

}  // namespace polybern
