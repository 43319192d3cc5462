#include "polybern/generalized.hpp"

#include <stdexcept>

#include "polybern/combinatorics.hpp"
#include "polybern/errors.hpp"

namespace polybern {

GPBPoly gpb_explicit(unsigned n, long k, const Params& params) {
  return {{n, k}, params, detail::explicit_sum(n, k, 1, params.alpha(), params.beta())};
}

GPBPoly gpb_explicit_c(unsigned n, long k, const Params& params) {
  return {{n, k}, params, detail::explicit_sum(n, k, params.gamma(), params.alpha(), params.beta())};
}

GPBPoly scale_from_classical(unsigned n, long k, const Params& params) {
  const Rat l = params.log_ab();
  if (l == 0) throw ParamError("ln a + ln b must be nonzero");
  Poly1 p = pow(l, static_cast<long>(n)) * pb_poly(n, k).compose_affine(1 / l, -params.beta() / l);
  return {{n, k}, params, std::move(p)};
}

Poly1 gen_bernoulli_poly(unsigned n, const Rat& ln_a, const Rat& ln_b) {
  const Rat d = ln_b - ln_a;
  if (d == 0) throw ParamError("generalized Bernoulli polynomial needs ln a != ln b");
  return pow(d, static_cast<long>(n) - 1) * bernoulli_poly(n).compose_affine(1 / d, -ln_a / d);
}

Poly1 gen_bernoulli_poly_c(unsigned n, const Rat& ln_a, const Rat& ln_b, const Rat& ln_c) {
  return gen_bernoulli_poly(n, ln_a, ln_b).compose_affine(ln_c, 0);
}

Series1 gen_bernoulli_series(const Rat& ln_a, const Rat& ln_b, std::size_t order) {
  if (ln_a == ln_b) throw ParamError("generalized Bernoulli kernel needs ln a != ln b");
  Series1 t(order + 1);
  t[1] = 1;
  return ps_div(t, ps_exp(ln_b, order + 1) - ps_exp(ln_a, order + 1));
}

namespace detail {

Poly1 recurrence_I_sum(unsigned n, long k, const Params& params, RecurrenceIExponent exponent) {
  const Rat& alpha = params.alpha();
  std::vector<Rat> lower(n + 1);  // B_i^{(k-1)}(a, b)
  std::vector<Poly1> inner(n + 1);  // B_l(x; a^{-1}, b)
  for (unsigned i = 0; i <= n; ++i) {
    lower[i] = gpb_explicit(i, k - 1, params).poly.coeff(0);
    inner[i] = gen_bernoulli_poly(i, -alpha, params.beta());
  }
  Poly1 total;
  for (unsigned m = 0; m <= n; ++m) {
    Poly1 acc;
    for (unsigned l = 0; l <= m; ++l) {
      const long e = exponent == RecurrenceIExponent::kMMinusL ? static_cast<long>(m - l)
                                                              : static_cast<long>(m + l);
      Rat w = pow(Rat(-alpha), e) * Rat(binomial(m, l)) / static_cast<long>(n - l + 1);
      acc += w * inner[l];
    }
    total += Rat(binomial(n, m)) * lower[n - m] * acc;
  }
  return params.log_ab() * total;
}

}  // namespace detail

GPBPoly recurrence_I(unsigned n, long k, const Params& params) {
  return {{n, k}, params, detail::recurrence_I_sum(n, k, params, RecurrenceIExponent::kMMinusL)};
}

GPBPoly recurrence_II(unsigned n, long k, const Params& params, RecurrenceIIStart start) {
  const Rat l = params.log_ab();
  const Poly1 x_minus_beta{-params.beta(), 1};
  if (n == 0) return {{n, k}, params, Poly1::constant(1)};
  const Poly1 previous_k = gpb_explicit(n, k - 1, params).poly;
  if (n == 1) {
    Poly1 tail = start == RecurrenceIIStart::kScaled ? x_minus_beta : x_minus_beta * (1 / l);
    return {{n, k}, params, Rat(1, 2) * (previous_k + tail)};
  }
  Poly1 acc = previous_k + pow(l, static_cast<long>(n) - 1) * x_minus_beta;
  Poly1 mixed;
  for (unsigned m = 1; m + 1 <= n; ++m) {
    const Poly1 bm = gpb_explicit(m, k, params).poly;
    mixed += pow(l, static_cast<long>(n - m) - 1) * Rat(binomial(n, m)) * bm;
    acc -= pow(l, static_cast<long>(n - m)) * Rat(binomial(n, m - 1)) * bm;
  }
  acc += x_minus_beta * mixed;
  return {{n, k}, params, Rat(1, static_cast<long>(n) + 1) * acc};
}

GPBPoly appell_derivative(unsigned n, long k, const Params& params) {
  if (n == 0) throw std::invalid_argument("appell_derivative needs n >= 1");
  return {{n - 1, k}, params, gpb_explicit(n, k, params).poly.derivative()};
}

Poly1 addition_formula(unsigned n, long k, const Params& params, const Rat& y) {
  Poly1 out;
  for (unsigned m = 0; m <= n; ++m) {
    out += Rat(binomial(n, m)) * pow(y, static_cast<long>(n - m)) * gpb_explicit(m, k, params).poly;
  }
  return out;
}

Poly1 multiplication_theorem(unsigned n, long k, const Params& params, unsigned long mult) {
  if (mult < 1) throw std::invalid_argument("multiplication theorem needs m >= 1");
  const Rat step = Rat(static_cast<long>(mult)) - 1;
  Poly1 out;
  for (unsigned i = 0; i <= n; ++i) {
    Poly1 scaled = Poly1::monomial(pow(step, static_cast<long>(n - i)), n - i);
    out += Rat(binomial(n, i)) * (gpb_explicit(i, k, params).poly * scaled);
  }
  return out;
}

Rat power_sum_identity_rhs(unsigned long m_top, unsigned n, const Rat& ln_b) {
  if (ln_b == 0) throw ParamError("power sum identity needs ln b != 0");
  const Poly1 b = gen_bernoulli_poly_c(n + 1, 0, ln_b, ln_b);
  const Rat top = Rat(static_cast<long>(m_top)) + 1;
  return (b(top) - b(0)) / (pow(ln_b, static_cast<long>(n)) * static_cast<long>(n + 1));
}

Rat power_sum(unsigned long m_top, unsigned n, const Rat& ln_b) {
  const Rat zero_term = n == 0 ? 1 : 0;
  return power_sum_identity_rhs(m_top, n, ln_b) - zero_term;
}

}  // namespace polybern
