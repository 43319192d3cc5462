#include "polybern/symmetrized.hpp"

#include <algorithm>

#include "polybern/combinatorics.hpp"
#include "polybern/errors.hpp"
#include "polybern/generalized.hpp"

namespace polybern {

namespace {

Rat checked_log_ab(const Params& params) {
  const Rat l = params.log_ab();
  if (l == 0) throw ParamError("ln a + ln b must be nonzero");
  return l;
}

// sum_p C(n, p) S(p, j) (v + shift)^{n-p} as a polynomial in v.
Poly1 stirling_factor(unsigned n, unsigned j, const Rat& shift) {
  Poly1 out;
  for (unsigned p = j; p <= n; ++p) {
    out += Rat(binomial(n, p) * stirling2(p, j)) * Poly1::binomial_power(shift, n - p);
  }
  return out;
}

}  // namespace

Poly2 sym_def(unsigned n, unsigned m, const Params& params, SymReading reading) {
  const Rat l = checked_log_ab(params);
  const Rat x_scale = reading == SymReading::kScaledX ? l : Rat(1);
  const Rat y_shift = -params.beta() / l;
  Poly2 out;
  for (unsigned k = 0; k <= m; ++k) {
    const Poly1 bx = gpb_explicit(n, -static_cast<long>(k), params).poly.compose_affine(x_scale, 0);
    out += Rat(binomial(m, k)) *
           (Poly2::from_x(bx) * Poly2::from_y(Poly1::binomial_power(y_shift, m - k)));
  }
  return pow(l, -static_cast<long>(n)) * out;
}

Poly2 sym_closed(unsigned n, unsigned m, const Params& params, ClosedSecondFactor second) {
  const Rat shift = params.alpha() / checked_log_ab(params);
  Poly2 out;
  for (unsigned j = 0; j <= std::min(n, m); ++j) {
    const Rat weight = Rat(factorial(j) * factorial(j));
    const Poly2 first = Poly2::from_x(stirling_factor(n, j, shift));
    const Poly1 tail = stirling_factor(m, j, shift);
    const Poly2 other = second == ClosedSecondFactor::kY ? Poly2::from_y(tail) : Poly2::from_x(tail);
    out += weight * (first * other);
  }
  return out;
}

Series2<Poly2> sym_gf_oracle(const Params& params, std::size_t order_t, std::size_t order_u) {
  const Rat shift = params.alpha() / checked_log_ab(params);

  // sum_j (e^t - 1)^j (e^u - 1)^j; (e^t - 1)^j has valuation j.
  const std::size_t top = std::min(order_t, order_u);
  Series1 et = ps_exp(1, order_t) - ps_exp(0, order_t);
  Series1 eu = ps_exp(1, order_u) - ps_exp(0, order_u);
  Series1 pt = ps_exp(0, order_t), pu = ps_exp(0, order_u);
  Series2Rat denominator_inverse(order_t, order_u);
  for (std::size_t j = 0; j <= top; ++j) {
    denominator_inverse = denominator_inverse + Series2Rat::outer(pt, pu);
    pt = pt * et;
    pu = pu * eu;
  }

  // e^{(x + shift) t}: coefficient of t^i is (x + shift)^i / i!.
  Series<Poly2> ex(order_t), ey(order_u);
  for (std::size_t i = 0; i <= order_t; ++i) {
    ex[i] = Poly2::from_x(Poly1::binomial_power(shift, i)) * make_rat(1, factorial(i));
  }
  for (std::size_t i = 0; i <= order_u; ++i) {
    ey[i] = Poly2::from_y(Poly1::binomial_power(shift, i)) * make_rat(1, factorial(i));
  }
  return mul(Series2<Poly2>::outer(ex, ey), denominator_inverse);
}

DualityReport duality_check(unsigned n, unsigned m, const Params& params) {
  Poly2 lhs = sym_def(n, m, params);
  Poly2 rhs = sym_def(m, n, params).swap_xy();
  const bool holds = lhs == rhs;
  return {n, m, holds, std::move(lhs), std::move(rhs)};
}

}  // namespace polybern
