#pragma once

#include <mutex>
#include <vector>

#include "polybern/rational.hpp"

namespace polybern {

/// C(n, k); zero for k < 0 or k > n.
Int binomial(long n, long k);

/// Stirling number of the second kind via the alternating sum
///   S(n, m) = ((-1)^m / m!) * sum_{l=0}^{m} (-1)^l C(m, l) l^n.
/// Throws InternalError if the sum is not divisible by m!.
Int stirling2_alternating(unsigned n, unsigned m);

/// Eulerian number <r, j>, the count of permutations of {1..r} with j ascents,
/// via sum_{l=0}^{j+1} (-1)^l C(r+1, l) (j - l + 1)^r. Zero outside
/// 0 <= j <= max(r - 1, 0); <0, 0> = 1.
Int eulerian_alternating(unsigned r, long j);

/// Lazily grown, monotone tables of Stirling and Eulerian numbers.
///
/// Growth happens under a mutex; entries never change once written, so a
/// returned value is always final. Every Stirling row added to the table is
/// cross-checked against the triangle recurrence
/// S(n, m) = m S(n-1, m) + S(n-1, m-1).
class CombCache {
 public:
  static CombCache& global();

  Int stirling2(unsigned n, unsigned m);
  Int eulerian(unsigned r, long j);

  std::size_t stirling_rows() const;

 private:
  void grow_stirling(unsigned n);
  void grow_eulerian(unsigned r);

  mutable std::mutex mutex_;
  std::vector<std::vector<Int>> stirling_;
  std::vector<std::vector<Int>> eulerian_;
};

inline Int stirling2(unsigned n, unsigned m) { return CombCache::global().stirling2(n, m); }
inline Int eulerian(unsigned r, long j) { return CombCache::global().eulerian(r, j); }

}  // namespace polybern
