#pragma once

#include "polybern/params.hpp"
#include "polybern/polybernoulli.hpp"
#include "polybern/series.hpp"

namespace polybern {

/// B_n^{(k)}(x; a, b) or B_n^{(k)}(x; a, b, c) together with its index and
/// parameters.
///
/// Invariant: poly has degree n with leading coefficient gamma^n for the
/// three-parameter family and 1 for the two-parameter family.
struct GPBPoly {
  PBIndex index;
  Params params;
  Poly1 poly;
};

/// B_n^{(k)}(x; a, b) = sum_{m=0}^{n} (m+1)^{-k} sum_{j=0}^{m} (-1)^j C(m, j) (x - j alpha - (j+1) beta)^n.
/// This is the normative definition; every other construction in this header
/// is checked against it.
GPBPoly gpb_explicit(unsigned n, long k, const Params& params);

/// B_n^{(k)}(x; a, b, c): the same sum with x replaced by gamma x.
GPBPoly gpb_explicit_c(unsigned n, long k, const Params& params);

/// L^n B_n^{(k)}((x - beta) / L) with L = alpha + beta, built from pb_poly.
GPBPoly scale_from_classical(unsigned n, long k, const Params& params);

/// Generalized Bernoulli polynomial with t e^{xt} / (b^t - a^t) as generating
/// function: (ln b - ln a)^{n-1} B_n((x - ln a) / (ln b - ln a)).
/// B_0(x; a, b) = 1 / (ln b - ln a). Throws ParamError if ln a = ln b.
Poly1 gen_bernoulli_poly(unsigned n, const Rat& ln_a, const Rat& ln_b);

/// Three-parameter form with kernel t c^{xt} / (b^t - a^t), i.e.
/// gen_bernoulli_poly at gamma x.
Poly1 gen_bernoulli_poly_c(unsigned n, const Rat& ln_a, const Rat& ln_b, const Rat& ln_c);

/// t / (b^t - a^t) as a truncated series. appell_polynomial on this series
/// gives gen_bernoulli_poly independently of the scaling relation.
Series1 gen_bernoulli_series(const Rat& ln_a, const Rat& ln_b, std::size_t order);

/// Power of (-alpha) attached to the (m, l) term of the first recurrence.
enum class RecurrenceIExponent {
  kMMinusL,  ///< (-alpha)^{m-l}; agrees with gpb_explicit
  kMPlusL,   ///< (-alpha)^{m+l}; agrees only when alpha = +-1
};

/// First recurrence, any integer k:
///   B_n^{(k)}(x; a, b) = L sum_m C(n, m) B_{n-m}^{(k-1)}(a, b)
///                        sum_{l<=m} (-alpha)^{m-l} C(m, l) / (n - l + 1) B_l(x; a^{-1}, b)
/// with L = alpha + beta and B_l(x; a^{-1}, b) = gen_bernoulli_poly(l, -alpha, beta).
GPBPoly recurrence_I(unsigned n, long k, const Params& params);

namespace detail {
Poly1 recurrence_I_sum(unsigned n, long k, const Params& params, RecurrenceIExponent exponent);
}  // namespace detail

/// Form of the n = 1 step in the second recurrence.
enum class RecurrenceIIStart {
  kScaled,  ///< (1/2) [B_1^{(k-1)}(x; a, b) + (x - beta)]
  kUnscaled,  ///< (1/2) [B_1^{(k-1)}(x; a, b) + (x - beta) / L]; agrees only when L = 1
};

/// Second recurrence in n, any integer k, with lower-index values taken from
/// gpb_explicit:
///   n = 0:  1
///   n = 1:  (1/2) [B_1^{(k-1)} + (x - beta)]
///   n >= 2: (1/(n+1)) [B_n^{(k-1)} + (x - beta) L^{n-1}
///            + (x - beta) sum_{m=1}^{n-1} L^{n-m-1} C(n, m) B_m^{(k)}
///            - sum_{m=1}^{n-1} L^{n-m} C(n, m-1) B_m^{(k)}]
GPBPoly recurrence_II(unsigned n, long k, const Params& params,
                      RecurrenceIIStart start = RecurrenceIIStart::kScaled);

/// d/dx B_n^{(k)}(x; a, b). Equals n B_{n-1}^{(k)}(x; a, b). Throws
/// std::invalid_argument for n = 0.
GPBPoly appell_derivative(unsigned n, long k, const Params& params);

/// sum_{m=0}^{n} C(n, m) B_m^{(k)}(x; a, b) y^{n-m}, equal to B_n^{(k)}(x + y; a, b).
Poly1 addition_formula(unsigned n, long k, const Params& params, const Rat& y);

/// sum_{i=0}^{n} C(n, i) B_i^{(k)}(x; a, b) ((mult - 1) x)^{n-i}, equal to
/// B_n^{(k)}(mult x; a, b). Throws std::invalid_argument for mult < 1.
Poly1 multiplication_theorem(unsigned n, long k, const Params& params, unsigned long mult);

/// [B_{n+1}(m+1; 1, b, b) - B_{n+1}(0; 1, b, b)] / ((n+1) (ln b)^n), which
/// counts the j = 0 term 0^n and so equals sum_{j=0}^{m} j^n.
Rat power_sum_identity_rhs(unsigned long m_top, unsigned n, const Rat& ln_b);

/// sum_{j=1}^{m} j^n through the generalized Bernoulli identity: the right
/// side above minus the j = 0 term. Throws ParamError if ln b = 0.
Rat power_sum(unsigned long m_top, unsigned n, const Rat& ln_b);

}  // namespace polybern
