#include "polybern/polybernoulli.hpp"

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "polybern/combinatorics.hpp"
#include "polybern/errors.hpp"

namespace polybern {

namespace detail {

Poly1 explicit_sum(unsigned n, long k, const Rat& x_scale, const Rat& shift_a, const Rat& shift_b) {
  // c_j = (-1)^j sum_{m=j}^{n} (m+1)^{-k} C(m, j)
  std::vector<Rat> weight(n + 1);
  for (unsigned m = 0; m <= n; ++m) weight[m] = pow(Rat(static_cast<long>(m) + 1), -k);
  std::vector<Rat> c(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    Rat acc = 0;
    for (unsigned m = j; m <= n; ++m) acc += weight[m] * Rat(binomial(m, j));
    c[j] = j % 2 == 0 ? acc : Rat(-acc);
  }

  // moments[e] = sum_j c_j s_j^e
  std::vector<Rat> moments(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    if (c[j] == 0) continue;
    const Rat s = shift_a * static_cast<long>(j) + shift_b * static_cast<long>(j + 1);
    Rat power = 1;
    for (unsigned e = 0; e <= n; ++e) {
      moments[e] += c[j] * power;
      power *= s;
    }
  }

  // (x_scale x - s)^n = sum_i C(n, i) x_scale^i x^i (-s)^{n-i}
  std::vector<Rat> coeffs(n + 1);
  Rat scale_pow = 1;
  for (unsigned i = 0; i <= n; ++i) {
    Rat term = Rat(binomial(n, i)) * scale_pow * moments[n - i];
    coeffs[i] = (n - i) % 2 == 0 ? term : Rat(-term);
    scale_pow *= x_scale;
  }
  return Poly1(std::move(coeffs));
}

}  // namespace detail

Poly1 pb_poly(unsigned n, long k) { return detail::explicit_sum(n, k, 1, 1, 0); }

Rat pb_number(unsigned n, long k) { return pb_poly(n, k).coeff(0); }

Int pb_number_neg_closed(unsigned n, unsigned k) {
  Int sum = 0;
  for (unsigned j = 0; j <= std::min(n, k); ++j) {
    Int f = factorial(j);
    sum += f * f * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1);
  }
  return sum;
}

Rat kaneko_recurrence(unsigned n, long k) {
  std::vector<Rat> row(n + 1, Rat(1));  // k = 0
  if (k > 0) {
    for (long level = 1; level <= k; ++level) {
      std::vector<Rat> next(n + 1);
      for (unsigned i = 0; i <= n; ++i) {
        Rat acc = row[i];
        for (unsigned m = 1; m + 1 <= i; ++m) acc -= Rat(binomial(i, m - 1)) * next[m];
        next[i] = acc / static_cast<long>(i + 1);
      }
      row = std::move(next);
    }
  } else {
    for (long level = 0; level > k; --level) {
      std::vector<Rat> prev(n + 1);
      for (unsigned i = 0; i <= n; ++i) {
        Rat acc = row[i] * static_cast<long>(i + 1);
        for (unsigned m = 1; m + 1 <= i; ++m) acc += Rat(binomial(i, m - 1)) * row[m];
        prev[i] = acc;
      }
      row = std::move(prev);
    }
  }
  return row[n];
}

Poly1 bernoulli_poly(unsigned n) { return detail::explicit_sum(n, 1, 1, -1, 0); }

Rat bernoulli_number(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rat> cache;
  std::lock_guard lock(mutex);
  while (cache.size() <= n) cache.push_back(bernoulli_poly(static_cast<unsigned>(cache.size())).coeff(0));
  return cache[n];
}

namespace {

void check_lonesum_size(unsigned rows, unsigned cols) {
  if (rows * cols > kLonesumCellLimit) {
    throw SizeLimitError("lonesum brute force limited to rows*cols <= " +
                         std::to_string(kLonesumCellLimit));
  }
}

}  // namespace

Int lonesum_count(unsigned rows, unsigned cols) {
  check_lonesum_size(rows, cols);
  if (rows == 0 || cols == 0) return 1;
  const std::uint32_t row_mask = (1u << cols) - 1;
  const std::uint64_t total = std::uint64_t{1} << (rows * cols);
  std::vector<std::uint32_t> r(rows);
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (unsigned i = 0; i < rows; ++i) r[i] = static_cast<std::uint32_t>(bits >> (i * cols)) & row_mask;
    bool ok = true;
    // A forbidden 2x2 exists iff two rows each have a 1 where the other has a 0.
    for (unsigned i = 0; i < rows && ok; ++i) {
      for (unsigned j = i + 1; j < rows; ++j) {
        if ((r[i] & ~r[j]) != 0 && (r[j] & ~r[i]) != 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  }
  return Int(static_cast<unsigned long>(count));
}

Int lonesum_count_by_signature(unsigned rows, unsigned cols) {
  check_lonesum_size(rows, cols);
  if (rows == 0 || cols == 0) return 1;
  const std::uint64_t total = std::uint64_t{1} << (rows * cols);
  std::unordered_map<std::uint64_t, std::uint32_t> classes;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    // Mixed-radix key: row sums in [0, cols], column sums in [0, rows].
    std::uint64_t key = 0;
    for (unsigned i = 0; i < rows; ++i) {
      unsigned s = 0;
      for (unsigned j = 0; j < cols; ++j) s += (bits >> (i * cols + j)) & 1u;
      key = key * (cols + 1) + s;
    }
    for (unsigned j = 0; j < cols; ++j) {
      unsigned s = 0;
      for (unsigned i = 0; i < rows; ++i) s += (bits >> (i * cols + j)) & 1u;
      key = key * (rows + 1) + s;
    }
    ++classes[key];
  }
  std::uint64_t singletons = 0;
  for (const auto& [key, size] : classes) {
    if (size == 1) ++singletons;
  }
  return Int(static_cast<unsigned long>(singletons));
}

}  // namespace polybern
