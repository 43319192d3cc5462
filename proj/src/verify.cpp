#include "polybern/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "polybern/cli.hpp"
#include "polybern/combinatorics.hpp"
#include "polybern/errors.hpp"
#include "polybern/generalized.hpp"
#include "polybern/oracle.hpp"
#include "polybern/polybernoulli.hpp"
#include "polybern/series.hpp"
#include "polybern/symmetrized.hpp"
#include "polybern/zeta.hpp"

namespace polybern::verify {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rat random_rat(std::mt19937_64& rng, long max_num, long max_den) {
  const long num = uniform(rng, -max_num, max_num);
  const long den = uniform(rng, 1, max_den);
  return make_rat(num, den);
}

Params random_params(std::mt19937_64& rng) {
  for (;;) {
    Rat alpha = random_rat(rng, 9, 6);
    Rat beta = random_rat(rng, 9, 6);
    Rat gamma = random_rat(rng, 9, 6);
    if (alpha + beta != 0 && gamma != 0) return Params(alpha, beta, gamma);
  }
}

ZetaQuery random_zeta_query(std::mt19937_64& rng, mpfr_prec_t precision) {
  ZetaQuery q;
  q.k = uniform(rng, 1, 3);
  q.s = make_rat(uniform(rng, 4, 32), 8);
  const Rat alpha = make_rat(uniform(rng, 1, 12), 6);
  const Rat beta = make_rat(uniform(rng, 1, 12), 6);
  const Rat rho = make_rat(uniform(rng, 64, 112), 4);
  q.params = Params(alpha, beta);
  q.x = rho * (alpha + beta) - beta;
  q.precision = precision;
  return q;
}

SuiteRun::SuiteRun(std::string suite, std::vector<std::string> invariants, std::uint64_t seed) : rng_(seed) {
  report_.suite = std::move(suite);
  for (auto& id : invariants) report_.invariants.push_back({std::move(id), 0});
}

void SuiteRun::expect(const std::string& invariant, const std::string& inputs, bool ok, const std::string& lhs,
                      const std::string& rhs) {
  auto it = std::find_if(report_.invariants.begin(), report_.invariants.end(),
                         [&](const InvariantCount& c) { return c.id == invariant; });
  if (it == report_.invariants.end()) {
    throw InternalError("suite " + report_.suite + " has no invariant " + invariant);
  }
  ++it->cases;
  ++report_.cases;
  if (!ok) report_.failures.push_back({invariant, inputs, lhs, rhs});
}

SuiteReport SuiteRun::finish() {
  for (const auto& c : report_.invariants) {
    if (c.cases == 0) throw InternalError("invariant " + c.id + " ran no cases");
  }
  return std::move(report_);
}

namespace {

std::string describe(const Params& p) {
  return "alpha=" + to_string(p.alpha()) + " beta=" + to_string(p.beta()) + " gamma=" + to_string(p.gamma());
}

std::string describe(unsigned n, long k, const Params& p) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + describe(p);
}

std::string describe(const ZetaQuery& q) {
  return "k=" + std::to_string(q.k) + " s=" + to_string(q.s) + " x=" + to_string(q.x) + " " + describe(q.params) +
         " p=" + std::to_string(q.precision);
}

std::string count_note(const std::string& what, std::size_t failed, std::size_t total) {
  return what + ": failed on " + std::to_string(failed) + " of " + std::to_string(total) + " cases";
}

std::vector<Params> draw_params(SuiteRun& run, int count) {
  std::vector<Params> out;
  for (int i = 0; i < count; ++i) out.push_back(random_params(run.rng()));
  return out;
}

std::string sci(const BigFloat& v) { return v.to_scientific(20); }

// |a - b| <= tol, reported with both sides.
void expect_close(SuiteRun& run, const std::string& id, const std::string& inputs, const BigFloat& a,
                  const BigFloat& b, const BigFloat& tol) {
  run.expect(id, inputs, abs(a - b) <= tol, sci(a), sci(b));
}

void expect_relative(SuiteRun& run, const std::string& id, const std::string& inputs, const BigFloat& a,
                     const BigFloat& b, const Rat& rel) {
  const BigFloat tol = abs(b) * BigFloat(rel, 64);
  expect_close(run, id, inputs, a, b, tol);
}

// --- exact_arith -----------------------------------------------------------

void exact_arith_suite(SuiteRun& run) {
  for (unsigned r = 1; r <= 8; ++r) {
    Int sum = 0;
    for (long j = 0; j < static_cast<long>(r); ++j) sum += eulerian(r, j);
    run.expect_equal("eulerian_row_sum", "r=" + std::to_string(r), sum, factorial(r));
  }
  for (unsigned r = 1; r <= 7; ++r) {
    for (unsigned j = 0; j < r; ++j) {
      run.expect_equal("eulerian_row_sum", "permutations r=" + std::to_string(r) + " j=" + std::to_string(j),
                       eulerian(r, j), oracle::eulerian_by_permutations(r, j));
    }
  }
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      const std::string in = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      run.expect_equal("stirling_cross_check", in, stirling2_alternating(n, m), oracle::stirling2_triangle(n, m));
      if (n <= 9) run.expect_equal("stirling_cross_check", "partitions " + in, stirling2(n, m),
                                   oracle::stirling2_by_partitions(n, m));
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const Rat a = make_rat(uniform(run.rng(), -1000000, 1000000), uniform(run.rng(), 1, 1000000));
    Rat b = 0;
    while (b == 0) b = make_rat(uniform(run.rng(), -1000000, 1000000), uniform(run.rng(), 1, 1000000));
    const std::string in = "a=" + to_string(a) + " b=" + to_string(b);
    run.expect_equal("rat_field", in, Rat((a + b) - b), a);
    run.expect_equal("rat_field", in, Rat((a * b) / b), a);
  }
  for (long n = 0; n <= 30; ++n) {
    for (long k = 0; k <= n; ++k) {
      const std::string in = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      run.expect_equal("binomial_symmetry", in, binomial(n, k), binomial(n, n - k));
      run.expect_equal("binomial_symmetry", "pascal " + in, binomial(n, k),
                       oracle::binomial_pascal(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    }
  }
}

// --- polyseries ------------------------------------------------------------

void polyseries_suite(SuiteRun& run) {
  std::size_t other_failed = 0, other_total = 0;
  for (unsigned r = 0; r <= 6; ++r) {
    for (std::size_t order = 1; order <= 12; ++order) {
      const std::string in = "r=" + std::to_string(r) + " N=" + std::to_string(order);
      const Series1 series = polylog_series(-static_cast<long>(r), order);
      run.expect_equal("polylog_neg_rational", in, polylog_neg_rational(r, order) == series, true);
      ++other_total;
      other_failed += polylog_neg_rational(r, order, EulerianExponent::kRMinusJ) != series;
    }
  }
  run.note(count_note("polylog numerator <r,j> x^{r-j}", other_failed, other_total) +
           "; <r,j> x^{j+1} is used");

  for (long k = -3; k <= 3; ++k) {
    run.expect_equal("integrate_over_t", "k=" + std::to_string(k),
                     ps_integrate_over_t(polylog_series(k, 12)) == polylog_series(k + 1, 12), true);
  }

  constexpr unsigned kOrder = 8;
  for (int trial = 0; trial < 5; ++trial) {
    const Params params = random_params(run.rng());
    const Rat x = random_rat(run.rng(), 9, 6);
    for (long k = -3; k <= 3; ++k) {
      const Series1 g = gf_kernel(k, params, x, kOrder);
      for (unsigned n = 0; n <= kOrder; ++n) {
        run.expect_equal("gf_kernel_vs_explicit", describe(n, k, params) + " x=" + to_string(x),
                         Rat(g[n] * factorial(n)), gpb_explicit(n, k, params).poly(x));
      }
    }
  }

  // e^{t+u} sum_j (e^t - 1)^j (e^u - 1)^j, built from Rat series only.
  constexpr std::size_t kGrid = 8;
  Series1 et = ps_exp(1, kGrid);
  Series1 em1 = et;
  em1[0] = 0;
  Series2Rat denominator_inverse(kGrid, kGrid);
  Series1 power_t(kGrid);
  power_t[0] = 1;
  for (std::size_t j = 0; j <= kGrid; ++j) {
    denominator_inverse = denominator_inverse + Series2Rat::outer(power_t, power_t);
    power_t = power_t * em1;
  }
  const Series2Rat gf = Series2Rat::outer(et, et) * denominator_inverse;
  for (unsigned n = 0; n <= kGrid; ++n) {
    for (unsigned k = 0; n + k <= kGrid; ++k) {
      run.expect_equal("series2_geometric", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                       Rat(gf(n, k) * factorial(n) * factorial(k)), Rat(pb_number_neg_closed(n, k)));
    }
  }
}

// --- polybernoulli_core ----------------------------------------------------

void polybernoulli_suite(SuiteRun& run) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned k = 0; k <= 6; ++k) {
      run.expect_equal("explicit_vs_closed", "n=" + std::to_string(n) + " k=-" + std::to_string(k),
                       pb_number(n, -static_cast<long>(k)), Rat(pb_number_neg_closed(n, k)));
    }
  }
  for (unsigned n = 0; n <= 8; ++n) {
    for (long k = -3; k <= 4; ++k) {
      run.expect_equal("kaneko", "n=" + std::to_string(n) + " k=" + std::to_string(k), kaneko_recurrence(n, k),
                       pb_number(n, k));
    }
  }
  for (unsigned n = 0; n <= 10; ++n) {
    const Rat sign = n % 2 ? -1 : 1;
    run.expect_equal("classical_relation", "n=" + std::to_string(n), sign * pb_poly(n, 1).compose_affine(-1, 0),
                     bernoulli_poly(n));
  }
  constexpr unsigned kOrder = 8;
  for (long k = -2; k <= 3; ++k) {
    const Series1 g = gf_kernel(k, Params::classical(), 0, kOrder);
    for (unsigned n = 0; n <= kOrder; ++n) {
      run.expect_equal("gf_classical", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                       appell_polynomial(g, n), pb_poly(n, k));
    }
  }
}

void lonesum_suite(SuiteRun& run) {
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= 12; ++k) {
      if (n * k > 12) continue;
      const std::string in = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      const Int closed = pb_number_neg_closed(n, k);
      run.expect_equal("lonesum_vs_closed", in, lonesum_count(n, k), closed);
      run.expect_equal("lonesum_vs_closed", "signature " + in, lonesum_count_by_signature(n, k), closed);
    }
  }
  run.expect_equal("lonesum_vs_closed", "landmark n=1 k=1", pb_number_neg_closed(1, 1), Int(2));
  run.expect_equal("lonesum_vs_closed", "landmark n=2 k=2", pb_number_neg_closed(2, 2), Int(14));
}

// --- generalized_pb --------------------------------------------------------

void generalized_suite(SuiteRun& run) {
  for (const Params& params : draw_params(run, 5)) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (long k = -3; k <= 4; ++k) {
        const GPBPoly g = gpb_explicit(n, k, params);
        run.expect_equal("explicit_vs_scaling", describe(n, k, params), g.poly,
                         scale_from_classical(n, k, params).poly);
        run.expect("degree_leading", describe(n, k, params), g.poly.degree() == static_cast<long>(n) &&
                   g.poly.leading() == 1, describe_value(g.poly), "monic of degree n");
        const Poly1 c = gpb_explicit_c(n, k, params).poly;
        const Rat lead = pow(params.gamma(), static_cast<long>(n));
        run.expect("degree_leading", "c-form " + describe(n, k, params),
                   c.degree() == static_cast<long>(n) && c.leading() == lead, describe_value(c),
                   "leading " + to_string(lead));
      }
    }
    for (long k = -3; k <= 3; ++k) {
      const Series1 g = gf_kernel(k, params, 0, 8);
      for (unsigned n = 0; n <= 8; ++n) {
        run.expect_equal("gf_constant_term", describe(n, k, params), Rat(g[n] * factorial(n)),
                         gpb_explicit(n, k, params).poly.coeff(0));
      }
    }
  }
}

void recurrences_suite(SuiteRun& run) {
  std::size_t plus_failed = 0, unscaled_failed = 0, total = 0;
  for (const Params& params : draw_params(run, 5)) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (long k = -3; k <= 4; ++k) {
        const Poly1 expected = gpb_explicit(n, k, params).poly;
        run.expect_equal("recurrence_I", describe(n, k, params), recurrence_I(n, k, params).poly, expected);
        run.expect_equal("recurrence_II", describe(n, k, params), recurrence_II(n, k, params).poly, expected);
        ++total;
        plus_failed += detail::recurrence_I_sum(n, k, params, RecurrenceIExponent::kMPlusL) != expected;
        unscaled_failed += recurrence_II(n, k, params, RecurrenceIIStart::kUnscaled).poly != expected;
      }
    }
  }
  run.note("recurrence I holds with (-alpha)^{m-l}; " + count_note("variant (-alpha)^{m+l}", plus_failed, total));
  run.note("recurrence II holds with n=1 step (x - beta)/2; " +
           count_note("variant with (x - beta)/(alpha + beta)", unscaled_failed, total));

  // Classical specialization: the inner polynomial is B_l(x + 1), not B_l(x).
  std::size_t plain_failed = 0, plain_total = 0;
  for (unsigned n = 0; n <= 8; ++n) {
    for (long k = 1; k <= 4; ++k) {
      Poly1 shifted, plain;
      for (unsigned m = 0; m <= n; ++m) {
        const Rat outer = Rat(m % 2 ? -1 : 1) * Rat(binomial(n, m)) * pb_number(n - m, k - 1);
        for (unsigned l = 0; l <= m; ++l) {
          const Rat w = outer * Rat(l % 2 ? -1 : 1) * Rat(binomial(m, l)) / Rat(n - l + 1);
          shifted += w * bernoulli_poly(l).compose_affine(1, 1);
          plain += w * bernoulli_poly(l);
        }
      }
      const Poly1 expected = pb_poly(n, k);
      run.expect_equal("recurrence_I", "classical n=" + std::to_string(n) + " k=" + std::to_string(k), shifted,
                       expected);
      ++plain_total;
      plain_failed += plain != expected;
    }
  }
  run.note("classical recurrence I holds with B_l(x+1); " + count_note("variant with B_l(x)", plain_failed,
                                                                          plain_total));
}

void appell_suite(SuiteRun& run) {
  std::size_t same_index_failed = 0, same_index_total = 0;
  const std::vector<Params> params_list = draw_params(run, 2);
  for (const Params& params : params_list) {
    for (long k = -3; k <= 4; ++k) {
      for (unsigned n = 1; n <= 10; ++n) {
        const Poly1 d = appell_derivative(n, k, params).poly;
        run.expect_equal("appell_chain", describe(n, k, params), d,
                         Rat(n) * gpb_explicit(n - 1, k, params).poly);
        run.expect_equal("appell_chain", "direct " + describe(n, k, params), gpb_explicit(n, k, params).poly.derivative(),
                         d);
        ++same_index_total;
        same_index_failed += d != Rat(n) * gpb_explicit(n, k, params).poly;
      }
    }
  }
  run.note("derivative lowers the index by one; " +
           count_note("variant d/dx B_n = n B_n", same_index_failed, same_index_total));

  for (const Params& params : params_list) {
    const Rat y = random_rat(run.rng(), 9, 6);
    for (long k = -3; k <= 4; ++k) {
      for (unsigned n = 0; n <= 8; ++n) {
        const Poly1 g = gpb_explicit(n, k, params).poly;
        run.expect_equal("addition_formula", describe(n, k, params) + " y=" + to_string(y),
                         addition_formula(n, k, params, y), g.compose_affine(1, y));
        for (unsigned long mult = 1; mult <= 4; ++mult) {
          run.expect_equal("multiplication_theorem", describe(n, k, params) + " m=" + std::to_string(mult),
                           multiplication_theorem(n, k, params, mult), g.compose_affine(Rat(mult), 0));
        }
      }
    }
  }
}

void power_sum_suite(SuiteRun& run) {
  for (const Rat& ln_b : {Rat(1), Rat(1, 2), Rat(-2)}) {
    for (unsigned long m = 1; m <= 20; ++m) {
      for (unsigned n = 0; n <= 6; ++n) {
        run.expect_equal("power_sum",
                         "m=" + std::to_string(m) + " n=" + std::to_string(n) + " lnb=" + to_string(ln_b),
                         power_sum(m, n, ln_b), Rat(oracle::power_sum_direct(m, n)));
      }
    }
  }
}

// --- symmetrized -----------------------------------------------------------

void duality_suite(SuiteRun& run) {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 0; k <= 8; ++k) {
      run.expect_equal("neg_duality", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                       pb_number_neg_closed(n, k), pb_number_neg_closed(k, n));
    }
  }
  for (const Params& params : draw_params(run, 3)) {
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned m = 0; m <= 6; ++m) {
        const DualityReport r = duality_check(n, m, params);
        run.expect("sym_duality", "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + describe(params),
                   r.holds, r.holds ? "" : describe_value(r.lhs), r.holds ? "" : describe_value(r.rhs));
      }
    }
  }
}

void closed_formula_suite(SuiteRun& run) {
  std::size_t x_failed = 0, total = 0;
  for (const Params& params : draw_params(run, 2)) {
    for (unsigned n = 0; n <= 5; ++n) {
      for (unsigned m = 0; m <= 5; ++m) {
        const Poly2 def = sym_def(n, m, params);
        run.expect_equal("closed_formula",
                         "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + describe(params),
                         sym_closed(n, m, params, ClosedSecondFactor::kY), def);
        ++total;
        x_failed += sym_closed(n, m, params, ClosedSecondFactor::kX) != def;
      }
    }
  }
  run.note("closed formula holds with the second Stirling factor in y; " +
           count_note("reading with the second factor in x", x_failed, total));
}

void symmetrized_gf_suite(SuiteRun& run) {
  constexpr unsigned kOrder = 6;
  std::size_t literal_failed = 0, literal_total = 0;
  for (const Params& params : draw_params(run, 2)) {
    const Series2<Poly2> gf = sym_gf_oracle(params, kOrder, kOrder);
    for (unsigned n = 0; n <= kOrder; ++n) {
      for (unsigned m = 0; n + m <= kOrder; ++m) {
        const Poly2 def = sym_def(n, m, params);
        run.expect_equal("gf_oracle", "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + describe(params),
                         gf(n, m) * Rat(factorial(n) * factorial(m)), def);
        if (params.log_ab() != 1) {
          ++literal_total;
          literal_failed += sym_def(n, m, params, SymReading::kLiteral) != def;
        }
      }
    }
    for (unsigned n = 0; n <= 8; ++n) {
      const Rat l = params.log_ab();
      const Poly1 scaled = pow(l, -static_cast<long>(n)) * gpb_explicit(n, 0, params).poly.compose_affine(l, 0);
      run.expect_equal("reduction_k0", "n=" + std::to_string(n) + " " + describe(params), sym_def(n, 0, params),
                       Poly2::from_x(scaled));
    }
  }
  run.note("symmetrized polynomial uses B_n^{(-k)}((alpha + beta) x); " +
           count_note("reading with unscaled x", literal_failed, literal_total));

  const Series2<Poly2> classical = sym_gf_oracle(Params::classical(), 8, 8);
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 0; n + k <= 8; ++k) {
      run.expect_equal("series2_kaneko", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                       Rat(classical(n, k)(0, 0) * factorial(n) * factorial(k)), Rat(pb_number_neg_closed(n, k)));
    }
  }
}

// --- zeta ------------------------------------------------------------------

void interpolation_suite(SuiteRun& run) {
  for (int trial = 0; trial < 3; ++trial) {
    const Params params = random_params(run.rng());
    const Rat x = random_rat(run.rng(), 9, 6);
    for (unsigned n = 0; n <= 8; ++n) {
      for (long k = -3; k <= 4; ++k) {
        const Rat sign = n % 2 ? -1 : 1;
        run.expect_equal("interpolation", describe(n, k, params) + " x=" + to_string(x),
                         xi_exact_neg(k, n, params, x), Rat(sign * gpb_explicit(n, k, params).poly(-x)));
      }
    }
  }
}

void difference_suite(SuiteRun& run) {
  for (int trial = 0; trial < 3; ++trial) {
    const Params params = random_params(run.rng());
    const Rat x = random_rat(run.rng(), 9, 6);
    for (unsigned n = 0; n <= 6; ++n) {
      for (long k = -3; k <= 3; ++k) {
        const ExactPair p = difference_exact(k, n, params, x);
        run.expect_equal("difference_exact", describe(n, k, params) + " x=" + to_string(x), p.lhs, p.rhs);
      }
    }
  }
  const ZetaQuery q = random_zeta_query(run.rng(), 64);
  const NumericPair p = difference_numeric(q);
  expect_close(run, "difference_numeric", describe(q), p.lhs.value, p.rhs.value,
               BigFloat(4L, 64) * (p.lhs.error + p.rhs.error));
}

void raabe_suite(SuiteRun& run) {
  for (int trial = 0; trial < 3; ++trial) {
    const Params params = random_params(run.rng());
    const Rat x = random_rat(run.rng(), 9, 6);
    for (unsigned n = 0; n <= 6; ++n) {
      for (long k = -3; k <= 3; ++k) {
        const ExactPair p = raabe_poly(n, k, params, x);
        run.expect_equal("raabe_exact", describe(n, k, params) + " x=" + to_string(x), p.lhs, p.rhs);
      }
    }
  }
  ZetaQuery q = random_zeta_query(run.rng(), 64);
  q.s = make_rat(uniform(run.rng(), 9, 32), 8);
  const NumericPair p = raabe_numeric(q);
  expect_close(run, "raabe_numeric", describe(q), p.lhs.value, p.rhs.value,
               BigFloat(4L, 64) * (p.lhs.error + p.rhs.error));
}

const Rat kTriangleTolerance = make_rat(1, Int("10000000000"));
const Rat kHurwitzTolerance = make_rat(1, Int("1000000000000"));

void zeta_numeric_suite(SuiteRun& run) {
  for (int i = 0; i < 10; ++i) {
    const ZetaQuery q = random_zeta_query(run.rng(), 128);
    const ZetaValue series = xi_series(q);
    const ZetaValue reduced = xi_reduced(q);
    expect_close(run, "xi_reduction", describe(q), series.value, reduced.value,
                 BigFloat(4L, 64) * (series.error + reduced.error));
    const ZetaValue quad = xi_quadrature(q);
    expect_relative(run, "triangle", "series/quadrature " + describe(q), series.value, quad.value, kTriangleTolerance);
    expect_relative(run, "triangle", "reduced/quadrature " + describe(q), reduced.value, quad.value, kTriangleTolerance);
    expect_relative(run, "triangle", "series/reduced " + describe(q), series.value, reduced.value, kTriangleTolerance);
  }
  for (int i = 0; i < 3; ++i) {
    ZetaQuery q = random_zeta_query(run.rng(), 64);
    q.k = 1;
    // xi_1(s, x; a, b) = s L^{-s} zeta(s + 1, (x + beta) / L).
    const Rat l = q.params.log_ab();
    const mpfr_prec_t w = q.precision + 64;
    const BigFloat s(q.s, w);
    const BigFloat expected = s * pow(BigFloat(l, w), -s) *
                              oracle::hurwitz_zeta(Rat(q.s + 1), Rat((q.x + q.params.beta()) / l), q.precision);
    expect_relative(run, "hurwitz_k1", describe(q), xi_series(q).value, expected, kHurwitzTolerance);
  }
  for (int i = 0; i < 3; ++i) {
    ZetaQuery q = random_zeta_query(run.rng(), 64);
    const ZetaValue coarse = xi_series(q);
    q.precision = 128;
    const ZetaValue fine = xi_series(q);
    run.expect("monotone_precision", describe(q), fine.error <= coarse.error, sci(fine.error), sci(coarse.error));
  }
}

}  // namespace

const std::vector<SuiteInfo>& registry() {
  static const std::vector<SuiteInfo> suites = {
      {"exact_arith", {"eulerian_row_sum", "stirling_cross_check", "rat_field", "binomial_symmetry"}, exact_arith_suite},
      {"polyseries", {"polylog_neg_rational", "integrate_over_t", "gf_kernel_vs_explicit", "series2_geometric"},
       polyseries_suite},
      {"polybernoulli", {"explicit_vs_closed", "kaneko", "classical_relation", "gf_classical"}, polybernoulli_suite},
      {"lonesum", {"lonesum_vs_closed"}, lonesum_suite},
      {"generalized", {"explicit_vs_scaling", "gf_constant_term", "degree_leading"}, generalized_suite},
      {"recurrences", {"recurrence_I", "recurrence_II"}, recurrences_suite},
      {"appell", {"appell_chain", "addition_formula", "multiplication_theorem"}, appell_suite},
      {"power_sum", {"power_sum"}, power_sum_suite},
      {"duality", {"neg_duality", "sym_duality"}, duality_suite},
      {"closed_formula", {"closed_formula"}, closed_formula_suite},
      {"symmetrized_gf", {"gf_oracle", "series2_kaneko", "reduction_k0"}, symmetrized_gf_suite},
      {"interpolation", {"interpolation"}, interpolation_suite},
      {"difference", {"difference_exact", "difference_numeric"}, difference_suite},
      {"raabe", {"raabe_exact", "raabe_numeric"}, raabe_suite},
      {"zeta_numeric", {"xi_reduction", "triangle", "hurwitz_k1", "monotone_precision"}, zeta_numeric_suite},
      {"cli", {"determinism", "round_trip", "registry_coverage"}, cli::run_cli_suite},
  };
  return suites;
}

const std::vector<CatalogEntry>& invariant_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"exact_arith", "eulerian_row_sum", "sum_j <r, j> = r! for 1 <= r <= 8"},
      {"exact_arith", "stirling_cross_check", "alternating-sum S(n, m) equals the triangle for 0 <= m <= n <= 20"},
      {"exact_arith", "rat_field", "(a + b) - b = a and (a b) / b = a for 1000 random rationals"},
      {"exact_arith", "binomial_symmetry", "C(n, k) = C(n, n - k) for 0 <= k <= n <= 30"},
      {"polyseries", "polylog_neg_rational", "Eulerian rational form of Li_{-r} equals the series, r <= 6, N <= 12"},
      {"polyseries", "integrate_over_t", "integral of Li_k(t)/t is Li_{k+1}, -3 <= k <= 3"},
      {"polyseries", "gf_kernel_vs_explicit", "n! [t^n] gf_kernel = B_n^{(k)}(x; a, b), n <= 8, 5 random triples"},
      {"polyseries", "series2_geometric", "geometric inversion in Series2 gives B_n^{(-k)}, n + k <= 8"},
      {"polybernoulli_core", "neg_duality", "B_n^{(-k)} = B_k^{(-n)} for n, k <= 8"},
      {"polybernoulli_core", "explicit_vs_closed", "pb_number(n, -k) = closed Stirling form, n, k <= 6"},
      {"polybernoulli_core", "kaneko", "kaneko_recurrence = pb_number, n <= 8, -3 <= k <= 4"},
      {"polybernoulli_core", "classical_relation", "(-1)^n B_n^{(1)}(-x) = B_n(x), n <= 10"},
      {"polybernoulli_core", "lonesum_vs_closed", "lonesum matrix counts equal B_n^{(-k)} for n k <= 12"},
      {"polybernoulli_core", "gf_classical", "classical kernel coefficients give pb_poly, n <= 8, -2 <= k <= 3"},
      {"generalized_pb", "explicit_vs_scaling", "gpb_explicit = scale_from_classical, n <= 8, -3 <= k <= 4"},
      {"generalized_pb", "gf_constant_term", "n! [t^n] gf_kernel at x = 0 is the constant term, n <= 8"},
      {"generalized_pb", "recurrence_I", "first recurrence equals gpb_explicit on the same grid"},
      {"generalized_pb", "recurrence_II", "second recurrence equals gpb_explicit on the same grid"},
      {"generalized_pb", "appell_chain", "d/dx B_n^{(k)} = n B_{n-1}^{(k)}, 1 <= n <= 10"},
      {"generalized_pb", "addition_formula", "addition formula equals x -> x + y"},
      {"generalized_pb", "multiplication_theorem", "multiplication theorem equals x -> m x, m <= 4"},
      {"generalized_pb", "degree_leading", "monic of degree n; c-form has leading coefficient gamma^n"},
      {"generalized_pb", "power_sum", "power_sum equals direct summation, m <= 20, n <= 6"},
      {"symmetrized", "sym_duality", "C_n^{(-m)}(x, y) = C_m^{(-n)}(y, x), n, m <= 6, 3 random params"},
      {"symmetrized", "closed_formula", "sym_closed = sym_def, n, m <= 5"},
      {"symmetrized", "gf_oracle", "n! m! [t^n u^m] of the generating function = sym_def, n + m <= 6"},
      {"symmetrized", "series2_kaneko", "alpha = 1, beta = 0, x = y = 0 slice gives B_n^{(-k)}, n + k <= 8"},
      {"symmetrized", "reduction_k0", "sym_def(n, 0) = L^{-n} B_n^{(0)}(L x; a, b)"},
      {"zeta", "interpolation", "xi_k(-n, x) = (-1)^n B_n^{(k)}(-x; a, b), n <= 8, -3 <= k <= 4"},
      {"zeta", "xi_reduction", "|xi_series - xi_reduced| <= 4 x combined error, 10 queries"},
      {"zeta", "triangle", "series, quadrature and reduced agree pairwise"},
      {"zeta", "hurwitz_k1", "xi_1(s, x) = s L^{-s} zeta(s + 1, (x + beta) / L) to 1e-12"},
      {"zeta", "difference_exact", "difference formula as exact rationals, n <= 6"},
      {"zeta", "difference_numeric", "difference formula within error estimates for s > 0"},
      {"zeta", "raabe_exact", "Raabe identity as exact rationals, n <= 6, -3 <= k <= 3"},
      {"zeta", "raabe_numeric", "Raabe integral within error estimates for s > 1"},
      {"zeta", "monotone_precision", "doubling p does not increase the xi_series error estimate"},
      {"cli", "determinism", "identical invocations give byte-identical output"},
      {"cli", "round_trip", "emitted JSON tables re-parse and validate against the schema"},
      {"cli", "registry_coverage", "every catalog invariant is declared by a registered suite"},
  };
  return catalog;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  for (const SuiteInfo& info : registry()) {
    if (info.name != name) continue;
    SuiteRun run(info.name, info.invariants, seed);
    info.body(run);
    return run.finish();
  }
  throw std::out_of_range("unknown suite: " + name);
}

}  // namespace polybern::verify
