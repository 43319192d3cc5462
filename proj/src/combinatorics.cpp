#include "polybern/combinatorics.hpp"

#include <string>

#include "polybern/errors.hpp"

namespace polybern {

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Int stirling2_alternating(unsigned n, unsigned m) {
  if (m > n) return 0;
  Int sum = 0;
  for (unsigned l = 0; l <= m; ++l) {
    Int term = binomial(m, l) * pow(Int(l), n);
    if (l % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (m % 2 == 1) sum = -sum;
  Int fact = factorial(m);
  if (!mpz_divisible_p(sum.get_mpz_t(), fact.get_mpz_t())) {
    throw InternalError("stirling2(" + std::to_string(n) + ", " + std::to_string(m) +
                        "): alternating sum not divisible by m!");
  }
  Int out;
  mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), fact.get_mpz_t());
  return out;
}

Int eulerian_alternating(unsigned r, long j) {
  if (r == 0) return j == 0 ? 1 : 0;
  if (j < 0 || j >= static_cast<long>(r)) return 0;
  Int sum = 0;
  for (long l = 0; l <= j + 1; ++l) {
    Int term = binomial(r + 1, l) * pow(Int(j - l + 1), r);
    if (l % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

CombCache& CombCache::global() {
  static CombCache cache;
  return cache;
}

void CombCache::grow_stirling(unsigned n) {
  while (stirling_.size() <= n) {
    const unsigned row = static_cast<unsigned>(stirling_.size());
    std::vector<Int> values(row + 1);
    for (unsigned m = 0; m <= row; ++m) values[m] = stirling2_alternating(row, m);
    if (row > 0) {
      const auto& prev = stirling_[row - 1];
      for (unsigned m = 0; m <= row; ++m) {
        Int expected = (m < row ? Int(m * prev[m]) : Int(0)) + (m > 0 ? prev[m - 1] : Int(0));
        if (expected != values[m]) {
          throw InternalError("stirling2 table disagrees with the triangle recurrence at (" +
                              std::to_string(row) + ", " + std::to_string(m) + ")");
        }
      }
    }
    stirling_.push_back(std::move(values));
  }
}

void CombCache::grow_eulerian(unsigned r) {
  while (eulerian_.size() <= r) {
    const unsigned row = static_cast<unsigned>(eulerian_.size());
    std::vector<Int> values(row == 0 ? 1 : row);
    for (unsigned j = 0; j < values.size(); ++j) values[j] = eulerian_alternating(row, j);
    eulerian_.push_back(std::move(values));
  }
}

Int CombCache::stirling2(unsigned n, unsigned m) {
  if (m > n) return 0;
  std::lock_guard lock(mutex_);
  grow_stirling(n);
  return stirling_[n][m];
}

Int CombCache::eulerian(unsigned r, long j) {
  std::lock_guard lock(mutex_);
  grow_eulerian(r);
  const auto& row = eulerian_[r];
  if (j < 0 || j >= static_cast<long>(row.size())) return 0;
  return row[static_cast<std::size_t>(j)];
}

std::size_t CombCache::stirling_rows() const {
  std::lock_guard lock(mutex_);
  return stirling_.size();
}

}  // namespace polybern
