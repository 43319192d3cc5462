#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "polybern/combinatorics.hpp"
#include "polybern/errors.hpp"
#include "polybern/generalized.hpp"
#include "polybern/oracle.hpp"
#include "polybern/polybernoulli.hpp"
#include "polybern/verify.hpp"

namespace polybern {
namespace {

const Params kSample(make_rat(3, 7), make_rat(-2, 5), make_rat(5, 3));

std::vector<Params> sample_params(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Params> out;
  for (int i = 0; i < count; ++i) out.push_back(verify::random_params(rng));
  return out;
}

// x - beta + (alpha + beta) 2^{-k}
Poly1 first_index(long k, const Params& p, const Rat& gamma = 1) {
  return Poly1({p.log_ab() * pow(Rat(2), -k) - p.beta(), gamma});
}

TEST(Params, RejectsDegenerateSum) {
  EXPECT_THROW(Params(1, -1), ParamError);
  EXPECT_THROW(Params(make_rat(2, 3), make_rat(-4, 6)), ParamError);
  EXPECT_NO_THROW(Params(0, 1));
}

TEST(Explicit, Examples) {
  for (long k = -3; k <= 4; ++k) {
    EXPECT_EQ(gpb_explicit(0, k, kSample).poly, Poly1({1}));
    EXPECT_EQ(gpb_explicit(1, k, kSample).poly, first_index(k, kSample));
    EXPECT_EQ(gpb_explicit_c(1, k, kSample).poly, first_index(k, kSample, kSample.gamma()));
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(gpb_explicit(n, k, Params::classical()).poly, pb_poly(n, k));
  }
}

TEST(Explicit, CFormReductions) {
  const Params unit_gamma(kSample.alpha(), kSample.beta(), 1);
  for (unsigned n = 0; n <= 6; ++n) {
    for (long k = -2; k <= 3; ++k) {
      EXPECT_EQ(gpb_explicit_c(n, k, unit_gamma).poly, gpb_explicit(n, k, unit_gamma).poly);
      EXPECT_EQ(gpb_explicit_c(n, k, Params::classical()).poly, pb_poly(n, k));
      EXPECT_EQ(gpb_explicit_c(n, k, kSample).poly, gpb_explicit(n, k, kSample).poly.compose_affine(kSample.gamma(), 0));
    }
  }
}

TEST(Explicit, DegreeAndLeadingCoefficient) {
  for (unsigned n = 0; n <= 8; ++n) {
    for (long k = -3; k <= 4; ++k) {
      const Poly1 p = gpb_explicit(n, k, kSample).poly;
      EXPECT_EQ(p.degree(), static_cast<long>(n));
      EXPECT_EQ(p.leading(), 1);
      EXPECT_EQ(gpb_explicit_c(n, k, kSample).poly.leading(), pow(kSample.gamma(), static_cast<long>(n)));
    }
  }
}

TEST(Scaling, Examples) {
  for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(scale_from_classical(n, 2, Params::classical()).poly, pb_poly(n, 2));
  EXPECT_EQ(scale_from_classical(1, 1, Params(1, 1)).poly, Poly1({0, 1}));
}

TEST(Scaling, MatchesExplicitOnRandomParams) {
  for (const Params& p : sample_params(11, 5)) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (long k = -3; k <= 4; ++k) EXPECT_EQ(gpb_explicit(n, k, p).poly, scale_from_classical(n, k, p).poly);
    }
  }
}

TEST(GenBernoulli, Examples) {
  EXPECT_EQ(gen_bernoulli_poly(0, make_rat(1, 3), 2), Poly1({make_rat(3, 5)}));
  EXPECT_EQ(gen_bernoulli_poly(1, 0, 1), Poly1({Rat(-1, 2), 1}));
  EXPECT_THROW(gen_bernoulli_poly(2, 3, 3), ParamError);
}

TEST(GenBernoulli, MatchesSeriesOracle) {
  const Rat ln_a = make_rat(-7, 4), ln_b = make_rat(2, 9);
  const Series1 a = gen_bernoulli_series(ln_a, ln_b, 8);
  for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(gen_bernoulli_poly(n, ln_a, ln_b), appell_polynomial(a, n)) << n;
  const Rat ln_c = make_rat(5, 2);
  EXPECT_EQ(gen_bernoulli_poly_c(3, ln_a, ln_b, ln_c), gen_bernoulli_poly(3, ln_a, ln_b).compose_affine(ln_c, 0));
}

TEST(RecurrenceI, Examples) {
  for (long k = 1; k <= 4; ++k) EXPECT_EQ(recurrence_I(0, k, kSample).poly, Poly1({1}));
  EXPECT_EQ(recurrence_I(2, 2, Params(1, 1)).poly, gpb_explicit(2, 2, Params(1, 1)).poly);
}

TEST(RecurrenceI, MatchesExplicitForEveryIntegerK) {
  for (const Params& p : sample_params(12, 3)) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (long k = -3; k <= 4; ++k) EXPECT_EQ(recurrence_I(n, k, p).poly, gpb_explicit(n, k, p).poly);
    }
  }
}

TEST(RecurrenceI, PlusExponentFailsOffUnitAlpha) {
  EXPECT_NE(detail::recurrence_I_sum(2, 2, kSample, RecurrenceIExponent::kMPlusL), gpb_explicit(2, 2, kSample).poly);
  // With alpha = 1 the two exponents differ by an even power of -1.
  const Params unit_alpha(1, make_rat(3, 4));
  EXPECT_EQ(detail::recurrence_I_sum(4, 2, unit_alpha, RecurrenceIExponent::kMPlusL),
            gpb_explicit(4, 2, unit_alpha).poly);
}

// The classical specialization sum_m (-1)^m C(n, m) B_{n-m}^{(k-1)}
// sum_l (-1)^l C(m, l) / (n - l + 1) P_l with P_l = B_l(x + 1) or B_l(x).
Poly1 classical_recurrence(unsigned n, long k, bool shifted) {
  Poly1 total;
  for (unsigned m = 0; m <= n; ++m) {
    const Rat outer = Rat(m % 2 ? -1 : 1) * Rat(binomial(n, m)) * pb_number(n - m, k - 1);
    for (unsigned l = 0; l <= m; ++l) {
      const Rat w = outer * Rat(l % 2 ? -1 : 1) * Rat(binomial(m, l)) / Rat(n - l + 1);
      total += w * (shifted ? bernoulli_poly(l).compose_affine(1, 1) : bernoulli_poly(l));
    }
  }
  return total;
}

TEST(RecurrenceI, ClassicalInnerPolynomialIsShiftedBernoulli) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (long k = 1; k <= 3; ++k) {
      EXPECT_EQ(classical_recurrence(n, k, true), pb_poly(n, k));
      EXPECT_EQ(recurrence_I(n, k, Params::classical()).poly, pb_poly(n, k));
    }
  }
  EXPECT_EQ(gen_bernoulli_poly(3, -1, 0), bernoulli_poly(3).compose_affine(1, 1));
  EXPECT_NE(classical_recurrence(2, 1, false), pb_poly(2, 1));
}

TEST(RecurrenceII, Examples) {
  for (long k = -2; k <= 3; ++k) EXPECT_EQ(recurrence_II(0, k, kSample).poly, Poly1({1}));
  for (long k = -2; k <= 3; ++k) {
    const Poly1 expected = Rat(1, 2) * (pb_poly(1, k - 1) + Poly1({0, 1}));
    EXPECT_EQ(recurrence_II(1, k, Params::classical()).poly, expected);
    EXPECT_EQ(expected, Poly1({pow(Rat(2), -k), 1}));
  }
  EXPECT_EQ(recurrence_II(3, -1, kSample).poly, gpb_explicit(3, -1, kSample).poly);
}

TEST(RecurrenceII, MatchesExplicitOnGrid) {
  for (const Params& p : sample_params(13, 3)) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (long k = -3; k <= 4; ++k) EXPECT_EQ(recurrence_II(n, k, p).poly, gpb_explicit(n, k, p).poly);
    }
  }
}

TEST(RecurrenceII, UnscaledFirstStepNeedsUnitSum) {
  EXPECT_NE(recurrence_II(1, 2, kSample, RecurrenceIIStart::kUnscaled).poly, gpb_explicit(1, 2, kSample).poly);
  const Params unit_sum(make_rat(1, 3), make_rat(2, 3));
  for (unsigned n = 0; n <= 5; ++n) {
    EXPECT_EQ(recurrence_II(n, 2, unit_sum, RecurrenceIIStart::kUnscaled).poly, gpb_explicit(n, 2, unit_sum).poly);
  }
}

TEST(Appell, DerivativeChain) {
  for (long k = -3; k <= 4; ++k) {
    EXPECT_EQ(appell_derivative(1, k, kSample).poly, Poly1({1}));
    EXPECT_TRUE(gpb_explicit(0, k, kSample).poly.derivative().is_zero());
    for (unsigned n = 1; n <= 10; ++n) {
      EXPECT_EQ(appell_derivative(n, k, kSample).poly, Rat(n) * gpb_explicit(n - 1, k, kSample).poly);
    }
  }
  EXPECT_THROW(appell_derivative(0, 1, kSample), std::invalid_argument);
}

TEST(Appell, AdditionFormula) {
  for (long k = -3; k <= 4; ++k) {
    for (unsigned n = 0; n <= 8; ++n) {
      const Poly1 g = gpb_explicit(n, k, kSample).poly;
      EXPECT_EQ(addition_formula(n, k, kSample, 0), g);
      EXPECT_EQ(addition_formula(n, k, kSample, make_rat(-5, 6)), g.compose_affine(1, make_rat(-5, 6)));
      // Expansion about x = 0 in terms of the numbers B_m^{(k)}(a, b).
      Poly1 about_zero;
      for (unsigned m = 0; m <= n; ++m) {
        about_zero += Poly1::monomial(Rat(binomial(n, m)) * gpb_explicit(m, k, kSample).poly.coeff(0), n - m);
      }
      EXPECT_EQ(about_zero, g);
    }
  }
}

TEST(Appell, MultiplicationTheorem) {
  for (long k = -3; k <= 4; ++k) {
    EXPECT_EQ(multiplication_theorem(1, k, kSample, 2), first_index(k, kSample).compose_affine(2, 0));
    for (unsigned n = 0; n <= 8; ++n) {
      const Poly1 g = gpb_explicit(n, k, kSample).poly;
      EXPECT_EQ(multiplication_theorem(n, k, kSample, 1), g);
      for (unsigned long m = 2; m <= 4; ++m) EXPECT_EQ(multiplication_theorem(n, k, kSample, m), g.compose_affine(Rat(m), 0));
    }
  }
  EXPECT_THROW(multiplication_theorem(2, 1, kSample, 0), std::invalid_argument);
}

TEST(PowerSum, Examples) {
  EXPECT_EQ(power_sum(1, 0, 1), 1);
  EXPECT_EQ(power_sum(3, 2, 1), 14);
  EXPECT_EQ(power_sum(10, 3, Rat(1, 2)), 3025);
  EXPECT_THROW(power_sum(3, 2, 0), ParamError);
}

TEST(PowerSum, MatchesDirectSummation) {
  for (const Rat& ln_b : {Rat(1), Rat(1, 2), Rat(-2)}) {
    for (unsigned long m = 1; m <= 20; ++m) {
      for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(power_sum(m, n, ln_b), Rat(oracle::power_sum_direct(m, n)));
    }
  }
}

TEST(PowerSum, IdentityRightSideCountsZeroTerm) {
  EXPECT_EQ(power_sum_identity_rhs(5, 0, 1), 6);
  EXPECT_EQ(power_sum_identity_rhs(5, 4, -2), 979);
}

}  // namespace
}  // namespace polybern
