// One PASS/FAIL line per acceptance criterion. Usage: acceptance <path to polybern>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "polybern/combinatorics.hpp"
#include "polybern/errors.hpp"
#include "polybern/generalized.hpp"
#include "polybern/oracle.hpp"
#include "polybern/polybernoulli.hpp"
#include "polybern/series.hpp"
#include "polybern/symmetrized.hpp"
#include "polybern/verify.hpp"
#include "polybern/zeta.hpp"

namespace {

using namespace polybern;

constexpr std::uint64_t kSeed = 42;

// Pinned tolerances for the numeric criterion.
const Rat kTriangleRelative = make_rat(1, Int("10000000000"));
const Rat kHurwitzRelative = make_rat(1, Int("1000000000000"));
constexpr mpfr_prec_t kTrianglePrecision = 128;

struct Tally {
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

struct Criterion {
  int number;
  std::string statement;
  double budget_seconds;
  std::function<void(Tally&)> body;
};

std::string tag(unsigned n, long k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

std::vector<Params> seeded_params(std::mt19937_64& rng, int count) {
  std::vector<Params> out;
  for (int i = 0; i < count; ++i) out.push_back(verify::random_params(rng));
  return out;
}

bool relative_ok(const BigFloat& a, const BigFloat& b, const Rat& rel) {
  return abs(a - b) <= abs(b) * BigFloat(rel, 64);
}

struct Captured {
  int code;
  std::string out;
};

Captured spawn(const std::string& exe, const std::string& args) {
  const std::string cmd = "'" + exe + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void explicit_vs_scaling(Tally& t) {
  std::mt19937_64 rng(kSeed);
  for (const Params& p : seeded_params(rng, 5)) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (long k = -3; k <= 4; ++k) t.check(gpb_explicit(n, k, p).poly == scale_from_classical(n, k, p).poly, tag(n, k));
    }
  }
}

void recurrences(Tally& t) {
  std::mt19937_64 rng(kSeed);
  for (const Params& p : seeded_params(rng, 5)) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (long k = -3; k <= 4; ++k) {
        const Poly1 g = gpb_explicit(n, k, p).poly;
        t.check(recurrence_I(n, k, p).poly == g, "I " + tag(n, k));
        t.check(recurrence_II(n, k, p).poly == g, "II " + tag(n, k));
      }
    }
  }
}

void negative_index(Tally& t) {
  t.check(pb_number_neg_closed(1, 1) == 2, "B_1^(-1) = 2");
  t.check(pb_number_neg_closed(2, 2) == 14, "B_2^(-2) = 14");
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= 12; ++k) {
      if (n * k > 12) continue;
      t.check(pb_number_neg_closed(n, k) == lonesum_count(n, k), tag(n, -static_cast<long>(k)));
    }
  }
}

void duality(Tally& t) {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 0; k <= 8; ++k) {
      t.check(pb_number_neg_closed(n, k) == pb_number_neg_closed(k, n), "closed " + tag(n, k));
      t.check(pb_number(n, -static_cast<long>(k)) == pb_number(k, -static_cast<long>(n)), "explicit " + tag(n, k));
    }
  }
  std::mt19937_64 rng(kSeed);
  for (const Params& p : seeded_params(rng, 3)) {
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned m = 0; m <= 6; ++m) {
        t.check(sym_def(n, m, p) == sym_def(m, n, p).swap_xy(), "C " + tag(n, m));
        t.check(duality_check(n, m, p).holds, "duality_check " + tag(n, m));
      }
    }
  }
}

void generating_functions(Tally& t) {
  std::mt19937_64 rng(kSeed);
  for (const Params& p : seeded_params(rng, 3)) {
    const Rat x = verify::random_rat(rng, 9, 6);
    for (long k = -3; k <= 4; ++k) {
      const Series1 g = gf_kernel(k, p, x, 8);
      for (unsigned n = 0; n <= 8; ++n) t.check(Rat(g[n] * factorial(n)) == gpb_explicit(n, k, p).poly(x), "gf " + tag(n, k));
    }
    const Series2<Poly2> sym = sym_gf_oracle(p, 6, 6);
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned m = 0; n + m <= 6; ++m) {
        t.check(sym(n, m) * Rat(factorial(n) * factorial(m)) == sym_def(n, m, p), "sym gf " + tag(n, m));
      }
    }
  }
  const Series2<Poly2> classical = sym_gf_oracle(Params::classical(), 8, 8);
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 0; n + k <= 8; ++k) {
      t.check(Rat(classical(n, k)(0, 0) * factorial(n) * factorial(k)) == Rat(pb_number_neg_closed(n, k)),
              "array " + tag(n, k));
    }
  }
}

void closed_formula(Tally& t) {
  std::mt19937_64 rng(kSeed);
  for (const Params& p : seeded_params(rng, 3)) {
    for (unsigned n = 0; n <= 5; ++n) {
      for (unsigned m = 0; m <= 5; ++m) t.check(sym_closed(n, m, p) == sym_def(n, m, p), tag(n, m));
    }
  }
  const verify::SuiteReport report = verify::run_suite("closed_formula", kSeed);
  bool stated = false;
  for (const std::string& note : report.notes) stated |= note.find("second Stirling factor in y") != std::string::npos;
  t.check(stated && report.failures.empty(), "report states the passing reading");
}

void interpolation(Tally& t) {
  std::mt19937_64 rng(kSeed);
  for (const Params& p : seeded_params(rng, 5)) {
    const Rat x = verify::random_rat(rng, 9, 6);
    for (unsigned n = 0; n <= 8; ++n) {
      const Rat sign = n % 2 ? -1 : 1;
      for (long k = -3; k <= 4; ++k) t.check(xi_exact_neg(k, n, p, x) == sign * gpb_explicit(n, k, p).poly(-x), tag(n, k));
    }
  }
}

void raabe(Tally& t) {
  std::mt19937_64 rng(kSeed);
  for (const Params& p : seeded_params(rng, 5)) {
    const Rat x = verify::random_rat(rng, 9, 6);
    for (unsigned n = 0; n <= 6; ++n) {
      for (long k = -3; k <= 3; ++k) {
        const ExactPair pair = raabe_poly(n, k, p, x);
        t.check(pair.lhs == pair.rhs, tag(n, k));
      }
    }
  }
}

void zeta_triangle(Tally& t) {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 10; ++i) {
    ZetaQuery q = verify::random_zeta_query(rng, kTrianglePrecision);
    const std::string what = "k=" + std::to_string(q.k) + " s=" + to_string(q.s) + " x=" + to_string(q.x);
    const BigFloat series = xi_series(q).value;
    const BigFloat quad = xi_quadrature(q).value;
    const BigFloat reduced = xi_reduced(q).value;
    t.check(relative_ok(series, quad, kTriangleRelative), "series/quadrature " + what);
    t.check(relative_ok(reduced, quad, kTriangleRelative), "reduced/quadrature " + what);
    t.check(relative_ok(series, reduced, kTriangleRelative), "series/reduced " + what);

    q.k = 1;
    const Rat l = q.params.log_ab();
    const mpfr_prec_t w = q.precision + 64;
    const BigFloat s(q.s, w);
    const BigFloat hurwitz = s * pow(BigFloat(l, w), -s) *
                             oracle::hurwitz_zeta(Rat(q.s + 1), Rat((q.x + q.params.beta()) / l), q.precision);
    t.check(relative_ok(xi_series(q).value, hurwitz, kHurwitzRelative), "hurwitz series s=" + to_string(q.s));
    t.check(relative_ok(xi_quadrature(q).value, hurwitz, kHurwitzRelative), "hurwitz quadrature s=" + to_string(q.s));
    t.check(relative_ok(xi_reduced(q).value, hurwitz, kHurwitzRelative), "hurwitz reduced s=" + to_string(q.s));
  }
}

void polylog_identities(Tally& t) {
  for (unsigned r = 0; r <= 6; ++r) {
    t.check(polylog_neg_rational(r, 16) == polylog_series(-static_cast<long>(r), 16), "r=" + std::to_string(r));
  }
  for (long k = -3; k <= 3; ++k) {
    t.check(ps_integrate_over_t(polylog_series(k, 16)) == polylog_series(k + 1, 16), "k=" + std::to_string(k));
  }
}

void appell_family(Tally& t) {
  std::mt19937_64 rng(kSeed);
  for (const Params& p : seeded_params(rng, 3)) {
    const Rat y = verify::random_rat(rng, 9, 6);
    for (long k = -3; k <= 4; ++k) {
      for (unsigned n = 0; n <= 10; ++n) {
        const Poly1 g = gpb_explicit(n, k, p).poly;
        if (n >= 1) {
          t.check(g.derivative() == Rat(n) * gpb_explicit(n - 1, k, p).poly, "derivative " + tag(n, k));
          t.check(appell_derivative(n, k, p).poly == g.derivative(), "appell_derivative " + tag(n, k));
        }
        t.check(addition_formula(n, k, p, y) == g.compose_affine(1, y), "addition " + tag(n, k));
        for (unsigned long mult = 1; mult <= 4; ++mult) {
          t.check(multiplication_theorem(n, k, p, mult) == g.compose_affine(Rat(mult), 0), "multiplication " + tag(n, k));
        }
      }
    }
  }
  for (const Rat& ln_b : {Rat(1), make_rat(1, 2), Rat(-2)}) {
    for (unsigned long m = 1; m <= 20; ++m) {
      for (unsigned n = 0; n <= 6; ++n) {
        t.check(power_sum(m, n, ln_b) == Rat(oracle::power_sum_direct(m, n)),
                "power_sum m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
}

void cli_determinism(Tally& t, const std::string& exe) {
  const Captured a = spawn(exe, "verify all --seed 42");
  const Captured b = spawn(exe, "verify all --seed 42");
  t.check(a.code == 0, "verify all exit " + std::to_string(a.code));
  t.check(b.code == 0, "verify all second exit " + std::to_string(b.code));
  t.check(!a.out.empty() && a.out == b.out, "byte-identical reports");

  using nlohmann::json;
  const Captured neg = spawn(exe, "table --kind pb-neg --n 0..2 --k 0..2");
  t.check(neg.code == 0, "pb-neg table exit");
  const json table = json::parse(neg.out, nullptr, false);
  bool one = false, two = false;
  for (const auto& e : table["entries"]) {
    one |= e["n"] == 1 && e["k"] == 1 && e["value"] == "2";
    two |= e["n"] == 2 && e["k"] == 2 && e["value"] == "14";
  }
  t.check(one && two, "pb-neg entries (1,1)->2 and (2,2)->14");

  const Captured poly = spawn(exe, "table --kind gpb-poly --n 0..1 --k 1 --alpha 1 --beta 0");
  const json doc = json::parse(poly.out, nullptr, false);
  t.check(poly.code == 0 && !doc.is_discarded() && doc["entries"].size() == 2 &&
              doc["entries"][0]["coeffs"] == json::array({"1"}) &&
              doc["entries"][1]["coeffs"] == json::array({"1/2", "1"}),
          "gpb-poly coeffs");
  t.check(spawn(exe, "table --kind pb-neg --n 2..1 --k 0").code == 3, "empty range exit 3");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path to polybern>\n";
    return 2;
  }
  const std::string exe = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "explicit formula equals scaling from the classical polynomials", 5, explicit_vs_scaling},
      {2, "both recurrences equal the explicit formula", 10, recurrences},
      {3, "negative-index closed formula equals lonesum enumeration", 30, negative_index},
      {4, "duality of numbers and symmetrized polynomials", 10, duality},
      {5, "generating-function oracles", 30, generating_functions},
      {6, "Stirling closed formula equals the definition (second factor in y)", 10, closed_formula},
      {7, "exact zeta values interpolate the polynomials", 5, interpolation},
      {8, "polynomial Raabe identity", 10, raabe},
      {9, "numeric zeta triangle and Hurwitz chain at 128 bits", 120, zeta_triangle},
      {10, "polylogarithm identities", 2, polylog_identities},
      {11, "Appell, addition, multiplication and power-sum identities", 10, appell_family},
      {12, "CLI determinism and table examples", 120, [&](Tally& t) { cli_determinism(t, exe); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_seconds;
    const bool pass = error.empty() && t.failures == 0 && t.cases > 0 && in_budget;
    failed += !pass;

    std::ostringstream line;
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.statement << " (" << t.cases
         << " cases, " << t.failures << " failures, " << std::fixed << seconds << " s of " << c.budget_seconds
         << " s)";
    if (!error.empty()) line << " error: " << error;
    if (!t.first_failure.empty()) line << " first failure: " << t.first_failure;
    if (!in_budget) line << " over time budget";
    std::cout << line.str() << "\n";
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of " : "PASSED all ") << criteria.size()
            << " criteria\n";
  return failed ? 1 : 0;
}
