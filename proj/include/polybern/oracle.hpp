#pragma once

#include <vector>

#include "polybern/bigfloat.hpp"
#include "polybern/rational.hpp"

/// Brute-force and independently derived reference values.
///
/// Nothing here calls into the formula code it is used to check: counts come
/// from enumeration, Bernoulli numbers from the Akiyama-Tanigawa triangle,
/// and the Hurwitz zeta function from Euler-Maclaurin summation.
namespace polybern::oracle {

/// C(n, k) from Pascal's triangle.
Int binomial_pascal(unsigned n, unsigned k);

/// S(n, m) by enumerating restricted growth strings of length n.
Int stirling2_by_partitions(unsigned n, unsigned m);

/// S(n, m) from S(n, m) = m S(n-1, m) + S(n-1, m-1).
Int stirling2_triangle(unsigned n, unsigned m);

/// Number of permutations of {1..r} with exactly j ascents, by enumeration.
Int eulerian_by_permutations(unsigned r, unsigned j);

/// Bernoulli numbers B_0..B_n with B_1 = +1/2 (Akiyama-Tanigawa).
std::vector<Rat> bernoulli_akiyama_tanigawa(unsigned n);

/// sum_{j=1}^{m} j^n by direct summation.
Int power_sum_direct(unsigned long m, unsigned n);

/// Hurwitz zeta(s, q) for s > 1, q > 0 at the given precision, by
/// Euler-Maclaurin summation with Bernoulli numbers from the
/// Akiyama-Tanigawa triangle.
BigFloat hurwitz_zeta(const Rat& s, const Rat& q, mpfr_prec_t precision);

/// Same for a real argument s given as a BigFloat.
BigFloat hurwitz_zeta(const BigFloat& s, const BigFloat& q, mpfr_prec_t precision);

}  // namespace polybern::oracle
