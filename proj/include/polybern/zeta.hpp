#pragma once

#include <cstddef>
#include <string>

#include "polybern/bigfloat.hpp"
#include "polybern/params.hpp"
#include "polybern/rational.hpp"

namespace polybern {

/// Largest accepted target precision in bits.
inline constexpr mpfr_prec_t kMaxPrecisionBits = 4096;

/// A numeric evaluation request for xi_k(s, x; a, b).
///
/// Inputs are exact rationals; they are rounded once, far below the target
/// precision. Numeric mode needs s > 0, x > 0, alpha > 0, beta > 0, and for
/// k <= 0 also (x + beta)/(alpha + beta) > |k| + 1.
struct ZetaQuery {
  long k = 1;
  Rat s = 2;
  Rat x = 1;
  Params params = Params::classical();
  mpfr_prec_t precision = 64;
  std::size_t max_terms = 2000;
};

/// A numeric result with an absolute error estimate.
struct ZetaValue {
  BigFloat value;
  BigFloat error;
  /// Outer series terms summed, or quadrature nodes evaluated.
  std::size_t work = 0;
  mpfr_prec_t precision = 64;

  /// floor(p log10 2) significant digits in scientific notation.
  std::string decimal() const;
};

/// Throws ParamError unless q satisfies the numeric-mode domain, and
/// SizeLimitError if the precision exceeds kMaxPrecisionBits.
void check_numeric_query(const ZetaQuery& q);

/// xi_k(s, x; a, b) = sum_n (n+1)^{-k} sum_{j<=n} (-1)^j C(n, j) (x + j alpha + (j+1) beta)^{-s}.
///
/// Sums until three consecutive outer terms fall below 2^{-p-8}. The inner
/// alternating sums are the forward differences of g(j) = (x + beta + j L)^{-s},
/// kept as one running diagonal of the difference table, so outer term n
/// costs O(n) operations. Working precision grows with the number of terms to
/// absorb cancellation. Throws ConvergenceError after max_terms outer terms.
ZetaValue xi_series(const ZetaQuery& q);

/// (1/Gamma(s)) int_0^inf t^{s-1} e^{-(x+beta) t} Li_k(z)/z dt with z = 1 - e^{-L t},
/// by tanh-sinh on [0, 1] and exp-sinh on [1, inf). The error estimate is
/// the change between the last two refinement levels. Accepts the same
/// parameter range as xi_reduced. Throws ConvergenceError if the level cap is
/// reached first.
ZetaValue xi_quadrature(const ZetaQuery& q);

/// L^{-s} xi_k(s, (x + beta)/L) with the classical series (alpha = 1, beta = 0)
/// at the reduced argument. Accepts alpha >= 0 and beta >= 0 as long as
/// L > 0 and x + beta > 0.
ZetaValue xi_reduced(const ZetaQuery& q);

/// xi_k(-n, x; a, b): the series at s = -n, which stops at outer index n.
Rat xi_exact_neg(long k, unsigned n, const Params& params, const Rat& x);

struct ExactPair {
  Rat lhs;
  Rat rhs;
};

struct NumericPair {
  ZetaValue lhs;
  ZetaValue rhs;
};

/// xi_k(-n, x + L) - xi_k(-n, x) against
/// sum_{m<n} (m+1)^{-k} sum_{j<=m+1} (-1)^{j+1} C(m+1, j) (x + j alpha + (j+1) beta)^n.
ExactPair difference_exact(long k, unsigned n, const Params& params, const Rat& x);

/// xi_series(x + L) - xi_series(x) against
/// sum_m (m+1)^{-k} sum_{j<=m+1} (-1)^{j+1} C(m+1, j) (x + j alpha + (j+1) beta)^{-s}.
NumericPair difference_numeric(const ZetaQuery& q);

/// int_0^L xi_k(s, x + w) dw (tanh-sinh over w of xi_series) against
/// (s-1)^{-1} sum_m (m+1)^{-k} sum_{j<=m+1} (-1)^j C(m+1, j) (x + j alpha + (j+1) beta)^{1-s}.
/// Needs s > 1.
NumericPair raabe_numeric(const ZetaQuery& q);

/// int_0^L B_n^{(k)}(x - w; a, b) dw against
/// (n+1)^{-1} sum_{m<=n} (m+1)^{-k} sum_{j<=m+1} (-1)^j C(m+1, j) (x - j alpha - (j+1) beta)^{n+1}.
ExactPair raabe_poly(unsigned n, long k, const Params& params, const Rat& x);

/// Li_k(z) for any integer k and 0 <= z < 1, at the precision of z.
BigFloat polylog(long k, const BigFloat& z);

}  // namespace polybern
