#include "polybern/series.hpp"

#include "polybern/combinatorics.hpp"
#include "polybern/errors.hpp"

namespace polybern {

Series1 ps_exp(const Rat& c, std::size_t order) {
  Series1 out(order);
  Rat term = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = term;
    term = term * c / static_cast<long>(n + 1);
  }
  return out;
}

std::size_t valuation(const Series1& s) {
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (s[i] != 0) return i;
  }
  return s.order() + 1;
}

Series1 ps_div(const Series1& a, const Series1& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const std::size_t v = valuation(b.truncate(order));
  if (v > order) throw SeriesError("division by a series that vanishes to its truncation order");
  for (std::size_t i = 0; i < v; ++i) {
    if (a[i] != 0) throw SeriesError("numerator valuation is less than denominator valuation");
  }
  const std::size_t out_order = order - v;
  Series1 q(out_order);
  const Rat& lead = b[v];
  for (std::size_t n = 0; n <= out_order; ++n) {
    Rat acc = a[n + v];
    for (std::size_t i = 1; i <= n; ++i) acc -= b[v + i] * q[n - i];
    q[n] = acc / lead;
  }
  return q;
}

Series1 ps_compose(const Series1& outer, const Series1& inner) {
  if (inner[0] != 0) throw SeriesError("composition needs an inner series with zero constant term");
  const std::size_t order = std::min(outer.order(), inner.order());
  Series1 acc(order);
  for (std::size_t i = outer.order() + 1; i-- > 0;) {
    // Terms of degree > order contribute nothing once inner(0) = 0.
    if (i > order) continue;
    acc = acc * inner.truncate(order);
    acc[0] += outer[i];
  }
  return acc;
}

Series1 polylog_series(long k, std::size_t order) {
  Series1 out(order);
  for (std::size_t n = 1; n <= order; ++n) out[n] = pow(Rat(static_cast<long>(n)), -k);
  return out;
}

Series1 polylog_neg_rational(unsigned r, std::size_t order, EulerianExponent exponent) {
  Series1 numerator(order);
  const long top = r == 0 ? 0 : static_cast<long>(r) - 1;
  for (long j = 0; j <= top; ++j) {
    const long e = exponent == EulerianExponent::kAscentsPlusOne ? j + 1 : static_cast<long>(r) - j;
    if (e >= 0 && static_cast<std::size_t>(e) <= order) numerator[e] += Rat(eulerian(r, j));
  }
  // (1 - x)^{-(r+1)} = sum_n C(n + r, r) x^n
  Series1 inverse(order);
  for (std::size_t n = 0; n <= order; ++n) inverse[n] = Rat(binomial(static_cast<long>(n + r), r));
  return numerator * inverse;
}

Series1 ps_integrate_over_t(const Series1& f) {
  if (f[0] != 0) throw SeriesError("integrand f(t)/t needs f(0) = 0");
  Series1 out(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) out[n] = f[n] / static_cast<long>(n);
  return out;
}

Series1 gf_kernel(long k, const Params& params, const Rat& x, std::size_t order) {
  const Rat l = params.log_ab();
  // z(t) = 1 - e^{-(alpha + beta) t} has valuation 1; one extra order is
  // consumed when the common factor t is cancelled.
  const std::size_t work = order + 1;
  Series1 z = ps_exp(0, work) - ps_exp(-l, work);
  Series1 numerator = ps_compose(polylog_series(k, work), z);
  Series1 denominator = ps_exp(params.beta(), work) * z;
  Series1 kernel = ps_div(numerator, denominator);
  return kernel * ps_exp(x, order);
}

Poly1 appell_polynomial(const Series1& a, std::size_t n) {
  if (n > a.order()) throw SeriesError("appell_polynomial: n exceeds series order");
  std::vector<Rat> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    // n!/i! * a_{n-i}
    Int ratio = factorial(n) / factorial(i);
    coeffs[i] = Rat(ratio) * a[n - i];
  }
  return Poly1(std::move(coeffs));
}

}  // namespace polybern
