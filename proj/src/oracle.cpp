#include "polybern/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace polybern::oracle {

Int binomial_pascal(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Int> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

namespace {

// Restricted growth strings a_0 = 0, a_i <= 1 + max(a_0..a_{i-1}) encode set
// partitions; the number of blocks is 1 + max.
void count_rgs(unsigned pos, unsigned n, unsigned blocks, unsigned m, Int& count) {
  if (blocks > m) return;
  if (pos == n) {
    if (blocks == m) ++count;
    return;
  }
  for (unsigned b = 0; b <= blocks; ++b) count_rgs(pos + 1, n, std::max(blocks, b + 1), m, count);
}

}  // namespace

Int stirling2_by_partitions(unsigned n, unsigned m) {
  if (n == 0) return m == 0 ? 1 : 0;
  Int count = 0;
  count_rgs(1, n, 1, m, count);
  return count;
}

Int stirling2_triangle(unsigned n, unsigned m) {
  std::vector<Int> row{1};  // n = 0
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1, 0);
    for (unsigned j = 1; j <= i; ++j) {
      next[j] = (j < row.size() ? Int(j * row[j]) : Int(0)) + row[j - 1];
    }
    row = std::move(next);
  }
  return m < row.size() ? row[m] : Int(0);
}

Int eulerian_by_permutations(unsigned r, unsigned j) {
  std::vector<unsigned> perm(r);
  std::iota(perm.begin(), perm.end(), 1u);
  Int count = 0;
  do {
    unsigned ascents = 0;
    for (unsigned i = 0; i + 1 < r; ++i) ascents += perm[i] < perm[i + 1];
    if (ascents == j) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<Rat> bernoulli_akiyama_tanigawa(unsigned n) {
  std::vector<Rat> out(n + 1);
  std::vector<Rat> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rat(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rat(j) * (a[j - 1] - a[j]);
    out[m] = a[0];
  }
  return out;
}

Int power_sum_direct(unsigned long m, unsigned n) {
  Int sum = 0;
  for (unsigned long j = 1; j <= m; ++j) sum += pow(Int(j), n);
  return sum;
}

BigFloat hurwitz_zeta(const Rat& s, const Rat& q, mpfr_prec_t precision) {
  const mpfr_prec_t w = precision + 64;
  return hurwitz_zeta(BigFloat(s, w), BigFloat(q, w), precision);
}

BigFloat hurwitz_zeta(const BigFloat& s_in, const BigFloat& q_in, mpfr_prec_t precision) {
  const mpfr_prec_t w = precision + 64;
  const BigFloat s = s_in.rounded(w), q = q_in.rounded(w);
  // zeta(s, q) = sum_{n<N} (q+n)^{-s} + (q+N)^{1-s}/(s-1) + (q+N)^{-s}/2
  //            + sum_{j=1}^{J} B_{2j}/(2j)! s(s+1)...(s+2j-2) (q+N)^{-s-2j+1} + R
  // With q + N > p and J = p/4 the remainder is far below 2^{-p}.
  const unsigned long terms = static_cast<unsigned long>(precision) + 16;
  const unsigned corrections = static_cast<unsigned>(precision / 4 + 4);
  const std::vector<Rat> bern = bernoulli_akiyama_tanigawa(2 * corrections);

  const BigFloat one(1L, w);
  BigFloat sum(w);
  for (unsigned long n = 0; n < terms; ++n) {
    sum += pow(q + BigFloat(static_cast<long>(n), w), -s);
  }
  const BigFloat big = q + BigFloat(static_cast<long>(terms), w);
  const BigFloat big_pow = pow(big, -s);
  sum += big * big_pow / (s - one);
  sum += ldexp(big_pow, -1);

  // rising holds s(s+1)...(s+2j-2) / (2j)! and power holds (q+N)^{-s-2j+1}.
  BigFloat rising = s / BigFloat(2L, w);
  BigFloat power = big_pow / big;
  const BigFloat inv_sq = one / (big * big);
  for (unsigned j = 1; j <= corrections; ++j) {
    if (j > 1) {
      const long a = 2 * static_cast<long>(j) - 3;
      rising *= (s + BigFloat(a, w)) * (s + BigFloat(a + 1, w));
      rising /= BigFloat(2L * j * (2L * j - 1), w);
      power *= inv_sq;
    }
    sum += BigFloat(bern[2 * j], w) * rising * power;
  }
  return sum.rounded(precision);
}

}  // namespace polybern::oracle
