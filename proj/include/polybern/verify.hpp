#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polybern/params.hpp"
#include "polybern/zeta.hpp"

namespace polybern::verify {

/// Uniform integer in [lo, hi] from raw engine output, so sampled values do
/// not depend on the standard library's distribution implementations.
long uniform(std::mt19937_64& rng, long lo, long hi);

/// p/q with |p| <= max_num and 1 <= q <= max_den.
Rat random_rat(std::mt19937_64& rng, long max_num, long max_den);

/// Random (alpha, beta, gamma) with alpha + beta != 0 and gamma != 0.
Params random_params(std::mt19937_64& rng);

/// A numeric-mode query with k in {1, 2, 3}, s in [1/2, 4] (step 1/8),
/// alpha, beta in (0, 2] and x chosen so that (x + beta)/(alpha + beta) lies in
/// [16, 28]; the series then meets its stopping rule within a few thousand
/// terms at 128 bits.
ZetaQuery random_zeta_query(std::mt19937_64& rng, mpfr_prec_t precision);

struct InvariantCount {
  std::string id;
  std::size_t cases = 0;
};

struct CaseFailure {
  std::string invariant;
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one identity suite. Counts are the only state the text and
/// JSON renderings share, so they agree by construction.
struct SuiteReport {
  std::string suite;
  /// Every invariant the suite declares, in declaration order.
  std::vector<InvariantCount> invariants;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  /// Deterministic findings, e.g. which reading of an identity held.
  std::vector<std::string> notes;
};

/// Collects cases for one suite run.
class SuiteRun {
 public:
  SuiteRun(std::string suite, std::vector<std::string> invariants, std::uint64_t seed);

  std::mt19937_64& rng() { return rng_; }

  void expect(const std::string& invariant, const std::string& inputs, bool ok, const std::string& lhs,
              const std::string& rhs);
  template <class A, class B>
  void expect_equal(const std::string& invariant, const std::string& inputs, const A& lhs, const B& rhs);
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  /// Throws InternalError if a declared invariant saw no cases.
  SuiteReport finish();

 private:
  SuiteReport report_;
  std::mt19937_64 rng_;
};

template <class T>
std::string describe_value(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

template <class A, class B>
void SuiteRun::expect_equal(const std::string& invariant, const std::string& inputs, const A& lhs, const B& rhs) {
  const bool ok = lhs == rhs;
  expect(invariant, inputs, ok, ok ? std::string() : describe_value(lhs), ok ? std::string() : describe_value(rhs));
}

struct SuiteInfo {
  std::string name;
  std::vector<std::string> invariants;
  std::function<void(SuiteRun&)> body;
};

/// Every suite, in the order `verify all` runs them.
const std::vector<SuiteInfo>& registry();

/// One invariant bullet of a module, with the identifier a suite reports it
/// under.
struct CatalogEntry {
  std::string module;
  std::string id;
  std::string statement;
};

/// Every invariant the suites are expected to cover.
const std::vector<CatalogEntry>& invariant_catalog();

/// Runs one suite. Throws std::out_of_range for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace polybern::verify
