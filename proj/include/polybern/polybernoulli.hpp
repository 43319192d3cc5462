#pragma once

#include <cstdint>

#include "polybern/poly.hpp"
#include "polybern/rational.hpp"

namespace polybern {

/// (n, k) index of B_n^{(k)}: n >= 0, k any integer.
struct PBIndex {
  unsigned n;
  long k;
  friend bool operator==(const PBIndex&, const PBIndex&) = default;
};

namespace detail {

/// sum_{m=0}^{n} (m+1)^{-k} sum_{j=0}^{m} (-1)^j C(m, j) (x_scale x - j shift_a - (j+1) shift_b)^n
///
/// The single finite sum behind every explicit formula in the library. It is
/// evaluated through the moments P_e = sum_j c_j s_j^e with
/// c_j = (-1)^j sum_{m>=j} (m+1)^{-k} C(m, j), s_j = j shift_a + (j+1) shift_b,
/// so the cost is O(n^2) rational operations.
Poly1 explicit_sum(unsigned n, long k, const Rat& x_scale, const Rat& shift_a, const Rat& shift_b);

}  // namespace detail

/// Poly-Bernoulli polynomial B_n^{(k)}(x) from the finite double sum
/// sum_m (m+1)^{-k} sum_j (-1)^j C(m, j) (x - j)^n. Valid for every integer k.
Poly1 pb_poly(unsigned n, long k);

/// Poly-Bernoulli number B_n^{(k)} = B_n^{(k)}(0).
Rat pb_number(unsigned n, long k);

/// B_n^{(-k)} = sum_{j=0}^{min(n,k)} (j!)^2 S(n+1, j+1) S(k+1, j+1).
Int pb_number_neg_closed(unsigned n, unsigned k);

/// B_n^{(k)} through the recurrence
///   B_n^{(k)} = (B_n^{(k-1)} - sum_{m=1}^{n-1} C(n, m-1) B_m^{(k)}) / (n + 1),
/// anchored on the all-ones row k = 0 (Li_0(z)/z = 1/(1-z) makes the kernel
/// e^t). Rows with k > 0 are built upward; rows with k < 0 come from solving
/// the same relation for B_n^{(k-1)}.
Rat kaneko_recurrence(unsigned n, long k);

/// Classical Bernoulli polynomial B_n(x) = sum_m 1/(m+1) sum_j (-1)^j C(m, j) (x + j)^n.
Poly1 bernoulli_poly(unsigned n);

/// Classical Bernoulli number B_n (B_1 = -1/2).
Rat bernoulli_number(unsigned n);

/// Largest rows * cols accepted by the lonesum brute force.
inline constexpr unsigned kLonesumCellLimit = 20;

/// Number of rows x cols (0,1)-matrices uniquely determined by their row and
/// column sums. Decided per matrix by the absence of a 2x2 submatrix equal to
/// [[1,0],[0,1]] or [[0,1],[1,0]]. Throws SizeLimitError past the cell limit.
Int lonesum_count(unsigned rows, unsigned cols);

/// Same count by full enumeration: group all matrices by their
/// (row sums, column sums) signature and count singleton classes.
Int lonesum_count_by_signature(unsigned rows, unsigned cols);

}  // namespace polybern
