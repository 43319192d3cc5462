#pragma once

#include "polybern/params.hpp"
#include "polybern/poly.hpp"
#include "polybern/series.hpp"

namespace polybern {

/// How the x argument of B_n^{(-k)} enters the symmetrized polynomial.
enum class SymReading {
  /// L^{-n} sum_k C(m, k) B_n^{(-k)}(L x; a, b) (y - beta/L)^{m-k}.
  /// Consistent with the generating function, duality and the closed formula.
  kScaledX,
  /// L^{-n} sum_k C(m, k) B_n^{(-k)}(x; a, b) (y - beta/L)^{m-k}.
  /// Agrees with kScaledX only when L = 1.
  kLiteral,
};

/// Symmetrized polynomial C_n^{(-m)}(x, y; a, b) with L = alpha + beta.
///
/// Under kScaledX this is the classical symmetrized polynomial
/// sum_k C(m, k) B_n^{(-k)}(x) y^{m-k} with both arguments shifted by -beta/L.
Poly2 sym_def(unsigned n, unsigned m, const Params& params,
              SymReading reading = SymReading::kScaledX);

/// Variable carried by the second factor of the Stirling closed formula.
enum class ClosedSecondFactor {
  kY,  ///< agrees with sym_def
  kX,  ///< makes the result independent of y
};

/// sum_{j<=min(n,m)} (j!)^2 [sum_p C(n, p) S(p, j) (x + alpha/L)^{n-p}]
///                          [sum_l C(m, l) S(l, j) (y + alpha/L)^{m-l}]
Poly2 sym_closed(unsigned n, unsigned m, const Params& params,
                 ClosedSecondFactor second = ClosedSecondFactor::kY);

/// e^{(x + alpha/L) t} e^{(y + alpha/L) u} / (e^t + e^u - e^{t+u}) with x, y
/// symbolic, expanded through 1/(1 - (e^t - 1)(e^u - 1)) = sum_j (e^t - 1)^j (e^u - 1)^j.
/// n! m! times the (n, m) coefficient is C_n^{(-m)}(x, y; a, b).
Series2<Poly2> sym_gf_oracle(const Params& params, std::size_t order_t, std::size_t order_u);

struct DualityReport {
  unsigned n;
  unsigned m;
  bool holds;
  Poly2 lhs;  ///< C_n^{(-m)}(x, y)
  Poly2 rhs;  ///< C_m^{(-n)}(y, x)
};

/// Compares C_n^{(-m)}(x, y; a, b) with C_m^{(-n)}(y, x; a, b). Never throws
/// on a mismatch; the report carries both sides.
DualityReport duality_check(unsigned n, unsigned m, const Params& params);

}  // namespace polybern
