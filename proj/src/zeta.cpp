#include "polybern/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "polybern/combinatorics.hpp"
#include "polybern/errors.hpp"
#include "polybern/generalized.hpp"

namespace polybern {

namespace {

// Exact inputs are rounded this many bits past the target precision.
constexpr mpfr_prec_t kInputGuard = 256;
// Guard bits of the quadrature working precision.
constexpr mpfr_prec_t kQuadratureGuard = 32;
constexpr int kMaxQuadratureLevel = 12;
constexpr double kMaxAbscissa = 12.0;

void check_precision(mpfr_prec_t p) {
  if (p < 8) throw ParamError("precision must be at least 8 bits");
  if (p > kMaxPrecisionBits) {
    throw SizeLimitError("precision limited to " + std::to_string(kMaxPrecisionBits) + " bits");
  }
}

void check_reduced_query(const ZetaQuery& q) {
  check_precision(q.precision);
  if (q.s <= 0) throw ParamError("numeric evaluation needs s > 0");
  if (q.x <= 0) throw ParamError("numeric evaluation needs x > 0");
  if (q.params.alpha() < 0 || q.params.beta() < 0 || q.params.log_ab() <= 0) {
    throw ParamError("reduced evaluation needs ln a, ln b >= 0 with ln a + ln b > 0");
  }
  if (q.k <= 0 && (q.x + q.params.beta()) / q.params.log_ab() <= 1 - q.k) {
    throw ParamError("numeric evaluation with k <= 0 needs (x + ln b) / (ln a + ln b) > |k| + 1");
  }
}

double to_double_clamped(const BigFloat& v) {
  const double d = v.to_double();
  return std::isfinite(d) ? d : HUGE_VAL;
}

// sum_{n>=0} (n+1)^{-k} D_{n+offset}, where
// D_N = sum_{j<=N} (-1)^j C(N, j) g(j) and g(j) = (c + j step)^{-exponent}.
//
// diag holds the last diagonal h_i(N - i), i = 0..N, of the difference table
// h_0 = g, h_i(j) = h_{i-1}(j) - h_{i-1}(j+1); D_N = h_N(0). Rounding error in
// D_N is bounded by 2^{N - w} times the largest table entry, so the guard
// band tracks N and the sum restarts at doubled guard when N outgrows it.
ZetaValue diagonal_series(const BigFloat& c, const BigFloat& step, long k, const BigFloat& exponent,
                          unsigned offset, mpfr_prec_t p, std::size_t max_terms) {
  const double sigma = static_cast<double>(k) + (c / step).to_double();
  long guard = 128;
  for (;;) {
    const mpfr_prec_t w = p + 72 + guard;
    const BigFloat cw = c.rounded(w), stepw = step.rounded(w), neg_e = -exponent.rounded(w);
    const BigFloat threshold = pow2(-(p + 8), w);
    std::vector<BigFloat> diag;
    diag.reserve(static_cast<std::size_t>(guard));
    BigFloat sum(w), carry(w), fresh(w), weight(w), term(w), g0(w);
    std::vector<BigFloat> recent(3, BigFloat(w));
    int below = 0;
    bool restart = false;
    for (std::size_t big_n = 0;; ++big_n) {
      if (static_cast<long>(big_n) + 8 > guard) {
        guard *= 2;
        restart = true;
        break;
      }
      mpfr_mul_ui(fresh.raw(), stepw.raw(), big_n, MPFR_RNDN);
      mpfr_add(fresh.raw(), fresh.raw(), cw.raw(), MPFR_RNDN);
      mpfr_pow(fresh.raw(), fresh.raw(), neg_e.raw(), MPFR_RNDN);
      if (big_n == 0) g0 = fresh;

      diag.emplace_back(w);
      mpfr_set(carry.raw(), diag[0].raw(), MPFR_RNDN);
      mpfr_set(diag[0].raw(), fresh.raw(), MPFR_RNDN);
      for (std::size_t i = 1; i <= big_n; ++i) {
        mpfr_sub(fresh.raw(), carry.raw(), diag[i - 1].raw(), MPFR_RNDN);
        mpfr_swap(fresh.raw(), diag[i].raw());
        mpfr_swap(carry.raw(), fresh.raw());
      }
      if (big_n < offset) continue;

      const std::size_t n = big_n - offset;
      if (n >= max_terms) {
        const BigFloat reached = max(recent[0], max(recent[1], recent[2]));
        throw ConvergenceError("zeta series did not converge within " + std::to_string(max_terms) + " terms",
                               to_double_clamped(reached) * static_cast<double>(n + 1) / (sigma - 1));
      }
      mpfr_set_ui(weight.raw(), n + 1, MPFR_RNDN);
      mpfr_pow_si(weight.raw(), weight.raw(), -k, MPFR_RNDN);
      mpfr_mul(term.raw(), diag[big_n].raw(), weight.raw(), MPFR_RNDN);
      sum += term;
      std::rotate(recent.begin(), recent.begin() + 1, recent.end());
      mpfr_abs(recent[2].raw(), term.raw(), MPFR_RNDN);
      below = recent[2] < threshold ? below + 1 : 0;
      if (below == 3) {
        const BigFloat largest = max(recent[0], max(recent[1], recent[2]));
        BigFloat tail = largest * BigFloat(Rat(2 * static_cast<long>(n + 1)), w);
        tail /= BigFloat(Rat(sigma - 1), w);
        BigFloat rounding = ldexp(abs(sum) + abs(g0), static_cast<long>(big_n) + 8 - static_cast<long>(w));
        ZetaValue out;
        out.value = sum.rounded(p + 32);
        out.error = (tail + rounding).rounded(64);
        out.work = n + 1;
        out.precision = p;
        return out;
      }
    }
    if (!restart) break;
  }
  throw InternalError("diagonal_series left its refinement loop");
}

struct Quadrature {
  BigFloat value;
  BigFloat error;
  std::size_t nodes = 0;
};

// Trapezoidal sums of g over the real line at steps 2^{-level}, with the
// abscissa range fixed at level 0 by two consecutive negligible samples in
// each direction. Stops once two successive levels differ by at most
// rel_tol |T| + abs_tol(); that difference is the reported error.
Quadrature de_integrate(const std::function<BigFloat(const BigFloat&)>& g, mpfr_prec_t w,
                        const BigFloat& rel_tol, const std::function<BigFloat()>& abs_tol, const char* what) {
  const BigFloat eps = pow2(-w, w);
  BigFloat raw = g(BigFloat(0L, w));
  std::size_t nodes = 1;
  long extent[2] = {0, 0};
  for (int side = 0; side < 2; ++side) {
    int small = 0;
    for (long j = 1; j <= static_cast<long>(kMaxAbscissa); ++j) {
      BigFloat v = g(BigFloat(side == 0 ? j : -j, w));
      raw += v;
      ++nodes;
      extent[side] = j;
      small = abs(v) <= eps * abs(raw) ? small + 1 : 0;
      if (small >= 2) break;
    }
  }
  BigFloat previous = raw;
  BigFloat diff(w);
  for (int level = 1; level <= kMaxQuadratureLevel; ++level) {
    const long scale = 1L << level;
    for (long i = -extent[1] * scale + 1; i < extent[0] * scale; i += 2) {
      raw += g(ldexp(BigFloat(i, w), -level));
      ++nodes;
    }
    BigFloat current = ldexp(raw, -level);
    diff = abs(current - previous);
    if (level >= 3 && diff <= rel_tol * abs(current) + abs_tol()) {
      return {current, diff, nodes};
    }
    previous = current;
  }
  throw ConvergenceError(std::string(what) + ": quadrature level cap reached",
                         to_double_clamped(diff / abs(previous)));
}

// Li_k on [0, 1) at a fixed working precision. For k >= 1: the defining
// series for z <= 1/2, and for z > 1/2 the expansion in mu = log z,
//   mu^{k-1}/(k-1)! (H_{k-1} - log(-mu)) + sum_{m != k-1} zeta(k-m) mu^m / m!.
// For k = -r <= 0: sum_j <r, j> z^{j+1} / (1 - z)^{r+1}.
class PolylogKernel {
 public:
  PolylogKernel(long k, mpfr_prec_t w) : k_(k), w_(w), eps_(pow2(-w, w)), half_(Rat(1, 2), w), harmonic_(w) {
    for (long i = 1; i < k; ++i) harmonic_ += BigFloat(Rat(1, i), w);
    if (k <= 0) {
      const auto r = static_cast<unsigned>(-k);
      for (long j = 0; j < std::max(1L, -k); ++j) eulerian_.emplace_back(Rat(eulerian(r, j)), w);
    }
  }

  BigFloat value(const BigFloat& z) {
    if (z.is_zero()) return BigFloat(w_);
    if (k_ <= 0) return z * eulerian_numerator(z) / pow(BigFloat(1L, w_) - z, BigFloat(1 - k_, w_));
    if (z <= half_) return z * direct_over_z(z);
    if (k_ == 1) return -log1p(-z);
    return log_series(log(z));
  }

  /// Li_k(z)/z at z = 1 - e^{-y}, y > 0, without forming 1 - z.
  BigFloat over_z_at(const BigFloat& y) {
    const BigFloat z = -expm1(-y);
    if (k_ <= 0) return eulerian_numerator(z) * exp(y * BigFloat(1 - k_, w_));
    if (z <= half_) return direct_over_z(z);
    if (k_ == 1) return y / z;
    return log_series(log1p(-exp(-y))) / z;
  }

 private:
  // sum_j <r, j> z^j by Horner's rule.
  BigFloat eulerian_numerator(const BigFloat& z) const {
    BigFloat acc(w_);
    for (auto it = eulerian_.rbegin(); it != eulerian_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  BigFloat direct_over_z(const BigFloat& z) const {
    BigFloat sum(1L, w_), power(1L, w_), term(w_), denom(w_);
    for (unsigned long n = 2;; ++n) {
      power *= z;
      mpfr_ui_pow_ui(denom.raw(), n, static_cast<unsigned long>(k_), MPFR_RNDN);
      mpfr_div(term.raw(), power.raw(), denom.raw(), MPFR_RNDN);
      sum += term;
      if (term <= eps_ * sum) return sum;
    }
  }

  BigFloat log_series(const BigFloat& mu) {
    BigFloat sum(w_), power(1L, w_), term(w_);
    int small = 0;
    for (long m = 0;; ++m) {
      if (m > 0) {
        power *= mu;
        mpfr_div_si(power.raw(), power.raw(), m, MPFR_RNDN);
      }
      if (m == k_ - 1) {
        sum += power * (harmonic_ - log(-mu));
        continue;
      }
      term = zeta_at(m) * power;
      sum += term;
      if (m > k_ + 1) {
        small = abs(term) <= eps_ * abs(sum) ? small + 1 : 0;
        if (small >= 2) return sum;
      }
    }
  }

  // zeta(k - m), m != k - 1
  const BigFloat& zeta_at(long m) {
    while (static_cast<long>(zetas_.size()) <= m) {
      const long arg = k_ - static_cast<long>(zetas_.size());
      zetas_.push_back(arg == 1 ? BigFloat(w_) : zeta(BigFloat(arg, w_)));
    }
    return zetas_[static_cast<std::size_t>(m)];
  }

  long k_;
  mpfr_prec_t w_;
  BigFloat eps_;
  BigFloat half_;
  BigFloat harmonic_;
  std::vector<BigFloat> zetas_;
  std::vector<BigFloat> eulerian_;
};

BigFloat input(const Rat& r, mpfr_prec_t p) { return BigFloat(r, p + kInputGuard); }

ZetaValue scaled(ZetaValue v, const BigFloat& factor) {
  v.value = v.value * factor;
  v.error = (v.error * abs(factor)).rounded(64);
  return v;
}

// sum_{j<=m} (-1)^j C(m, j) (x + j alpha + (j+1) beta)^e, exact.
Rat alternating_power_sum(unsigned m, const Rat& x, const Params& params, unsigned long e) {
  Rat acc = 0;
  for (unsigned j = 0; j <= m; ++j) {
    const Rat base = x + params.alpha() * static_cast<long>(j) + params.beta() * static_cast<long>(j + 1);
    const Rat term = Rat(binomial(m, j)) * pow(base, static_cast<long>(e));
    acc += j % 2 == 0 ? term : Rat(-term);
  }
  return acc;
}

}  // namespace

std::string ZetaValue::decimal() const {
  const int digits = std::max(1, static_cast<int>(std::floor(static_cast<double>(precision) * 0.30102999566398120)));
  return value.to_scientific(digits);
}

void check_numeric_query(const ZetaQuery& q) {
  check_reduced_query(q);
  if (q.params.alpha() <= 0 || q.params.beta() <= 0) {
    throw ParamError("numeric evaluation needs ln a > 0 and ln b > 0");
  }
}

ZetaValue xi_series(const ZetaQuery& q) {
  check_numeric_query(q);
  const mpfr_prec_t p = q.precision;
  return diagonal_series(input(q.x + q.params.beta(), p), input(q.params.log_ab(), p), q.k, input(q.s, p), 0, p,
                         q.max_terms);
}

ZetaValue xi_reduced(const ZetaQuery& q) {
  check_reduced_query(q);
  const mpfr_prec_t p = q.precision;
  const Rat l = q.params.log_ab();
  const BigFloat s = input(q.s, p);
  ZetaValue classical =
      diagonal_series(input((q.x + q.params.beta()) / l, p), BigFloat(1L, p + kInputGuard), q.k, s, 0, p, q.max_terms);
  return scaled(std::move(classical), pow(input(l, p), -s));
}

ZetaValue xi_quadrature(const ZetaQuery& q) {
  check_reduced_query(q);
  const mpfr_prec_t p = q.precision;
  const mpfr_prec_t w = p + kQuadratureGuard;
  const BigFloat c(q.x + q.params.beta(), w), l(q.params.log_ab(), w), s(q.s, w);
  const BigFloat s_minus_1 = s - BigFloat(1L, w);
  const BigFloat pi = const_pi(w);
  const BigFloat half_pi = ldexp(pi, -1);
  PolylogKernel kernel(q.k, w);

  auto integrand = [&](const BigFloat& t) {
    return exp(s_minus_1 * log(t) - c * t) * kernel.over_z_at(l * t);
  };
  // t = 1 / (1 + e^{-pi sinh u}) on (0, 1).
  auto tanh_sinh = [&](const BigFloat& u) {
    const BigFloat e = exp(-(pi * sinh(u)));
    const BigFloat t = BigFloat(1L, w) / (BigFloat(1L, w) + e);
    const BigFloat one_minus_t = e * t;
    return integrand(t) * (pi * cosh(u) * t * one_minus_t);
  };
  // t = 1 + e^{(pi/2) sinh u} on (1, inf).
  auto exp_sinh = [&](const BigFloat& u) {
    const BigFloat e = exp(half_pi * sinh(u));
    return integrand(BigFloat(1L, w) + e) * (half_pi * cosh(u) * e);
  };

  const BigFloat rel_tol = pow2(-(p + 2), w);
  auto no_floor = [w] { return BigFloat(w); };
  Quadrature head = de_integrate(tanh_sinh, w, rel_tol, no_floor, "xi_quadrature on [0, 1]");
  Quadrature tail = de_integrate(exp_sinh, w, rel_tol, no_floor, "xi_quadrature on [1, inf)");
  const BigFloat g = gamma(s);
  ZetaValue out;
  out.value = ((head.value + tail.value) / g).rounded(p + 32);
  out.error = ((head.error + tail.error) / g).rounded(64);
  out.work = head.nodes + tail.nodes;
  out.precision = p;
  return out;
}

Rat xi_exact_neg(long k, unsigned n, const Params& params, const Rat& x) {
  Rat total = 0;
  for (unsigned m = 0; m <= n; ++m) {
    total += pow(Rat(static_cast<long>(m) + 1), -k) * alternating_power_sum(m, x, params, n);
  }
  return total;
}

ExactPair difference_exact(long k, unsigned n, const Params& params, const Rat& x) {
  const Poly1 b = gpb_explicit(n, k, params).poly;
  const Rat sign = n % 2 == 0 ? 1 : -1;
  Rat lhs = sign * (b(-x - params.log_ab()) - b(-x));
  Rat rhs = 0;
  for (unsigned m = 0; m + 1 <= n; ++m) {
    rhs -= pow(Rat(static_cast<long>(m) + 1), -k) * alternating_power_sum(m + 1, x, params, n);
  }
  return {std::move(lhs), std::move(rhs)};
}

NumericPair difference_numeric(const ZetaQuery& q) {
  check_numeric_query(q);
  ZetaQuery shifted = q;
  shifted.x = q.x + q.params.log_ab();
  const ZetaValue upper = xi_series(shifted);
  const ZetaValue lower = xi_series(q);
  ZetaValue lhs;
  lhs.value = upper.value - lower.value;
  lhs.error = (upper.error + lower.error).rounded(64);
  lhs.work = upper.work + lower.work;
  lhs.precision = q.precision;

  const mpfr_prec_t p = q.precision;
  ZetaValue rhs = diagonal_series(input(q.x + q.params.beta(), p), input(q.params.log_ab(), p), q.k, input(q.s, p), 1,
                                  p, q.max_terms);
  rhs.value = -rhs.value;
  return {std::move(lhs), std::move(rhs)};
}

NumericPair raabe_numeric(const ZetaQuery& q) {
  check_numeric_query(q);
  if (q.s <= 1) throw ParamError("Raabe formula needs s > 1");
  const mpfr_prec_t p = q.precision;
  const mpfr_prec_t w = p + kQuadratureGuard;
  const BigFloat l(q.params.log_ab(), w);
  const BigFloat base = input(q.x + q.params.beta(), p);
  const BigFloat step = input(q.params.log_ab(), p);
  const BigFloat s = input(q.s, p);
  const BigFloat pi = const_pi(w);

  BigFloat worst_node_error(64);
  // w = L / (1 + e^{-pi sinh u}) on (0, L).
  auto tanh_sinh = [&](const BigFloat& u) {
    const BigFloat e = exp(-(pi * sinh(u)));
    const BigFloat t = BigFloat(1L, w) / (BigFloat(1L, w) + e);
    const BigFloat weight = l * pi * cosh(u) * t * (e * t);
    const ZetaValue node = diagonal_series(base + l * t, step, q.k, s, 0, p, q.max_terms);
    worst_node_error = max(worst_node_error, node.error);
    return node.value * weight;
  };
  // Node errors enter the sum with total weight L.
  auto noise_floor = [&] { return ldexp(l * worst_node_error.rounded(w), 2); };
  Quadrature integral = de_integrate(tanh_sinh, w, pow2(-(p + 2), w), noise_floor, "raabe_numeric integral");
  ZetaValue lhs;
  lhs.value = integral.value.rounded(p + 32);
  lhs.error = (integral.error + l * worst_node_error).rounded(64);
  lhs.work = integral.nodes;
  lhs.precision = p;

  const BigFloat s_minus_1 = s - BigFloat(1L, s.precision());
  ZetaValue rhs = diagonal_series(base, step, q.k, s_minus_1, 1, p, q.max_terms);
  rhs = scaled(std::move(rhs), BigFloat(1L, s.precision()) / s_minus_1);
  return {std::move(lhs), std::move(rhs)};
}

ExactPair raabe_poly(unsigned n, long k, const Params& params, const Rat& x) {
  const Poly1 antiderivative = gpb_explicit(n, k, params).poly.integral();
  Rat lhs = antiderivative(x) - antiderivative(x - params.log_ab());
  Rat rhs = 0;
  const Params negated(-params.alpha(), -params.beta(), params.gamma());
  for (unsigned m = 0; m <= n; ++m) {
    rhs += pow(Rat(static_cast<long>(m) + 1), -k) * alternating_power_sum(m + 1, x, negated, n + 1);
  }
  rhs /= static_cast<long>(n + 1);
  return {std::move(lhs), std::move(rhs)};
}

BigFloat polylog(long k, const BigFloat& z) {
  if (z.sign() < 0 || z >= BigFloat(1L, z.precision())) throw ParamError("polylog evaluation needs 0 <= z < 1");
  PolylogKernel kernel(k, z.precision() + 16);
  return kernel.value(z.rounded(z.precision() + 16)).rounded(z.precision());
}

}  // namespace polybern
