#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "polybern/cli.hpp"
#include "polybern/errors.hpp"
#include "polybern/oracle.hpp"
#include "polybern/verify.hpp"

namespace polybern::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "polybern");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the built executable and captures stdout.
Outcome spawn(const std::string& args) {
  const std::string cmd = std::string(POLYBERN_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "", ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("3").lo, 3);
  EXPECT_EQ(parse_range("3").hi, 3);
  EXPECT_EQ(parse_range("-3..4").lo, -3);
  EXPECT_EQ(parse_range("-3..4").hi, 4);
  EXPECT_EQ(parse_range("-5..-2").hi, -2);
  EXPECT_THROW(parse_range("1.."), std::invalid_argument);
  EXPECT_THROW(parse_range("a..b"), std::invalid_argument);
  EXPECT_THROW(parse_range(""), std::invalid_argument);
}

TEST(Table, NegativeIndexExamples) {
  const Outcome o = run_args({"table", "--kind", "pb-neg", "--n", "1..2", "--k", "1..2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json doc = json::parse(o.out);
  std::string why;
  EXPECT_TRUE(validate_table(doc, why)) << why;
  EXPECT_EQ(doc["entries"][0]["value"], "2");
  EXPECT_EQ(doc["entries"][3]["value"], "14");
}

TEST(Table, PolynomialCoefficients) {
  const Outcome o = run_args({"table", "--kind", "gpb-poly", "--n", "0..1", "--k", "1"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json doc = json::parse(o.out);
  EXPECT_EQ(doc["entries"][0]["coeffs"], json::array({"1"}));
  EXPECT_EQ(doc["entries"][1]["coeffs"], json::array({"1/2", "1"}));
}

TEST(Table, Csv) {
  const Outcome o = run_args({"table", "--kind", "gpb-poly", "--n", "0..1", "--k", "1", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "kind,alpha,beta,gamma,n,k,coeffs\ngpb-poly,1,0,1,0,1,1\ngpb-poly,1,0,1,1,1,1/2;1\n");
}

TEST(Table, EveryKindValidates) {
  for (const std::string& kind : table_kinds()) {
    const Outcome o = run_args({"table", "--kind", kind, "--n", "0..3", "--k=-1..2", "--m", "0..2", "--alpha", "1/3",
                                "--beta", "2/5", "--gamma", "3/2", "--x", "-4"});
    if (kind == "pb-neg") {
      EXPECT_EQ(o.code, kExitBadInput) << kind;
      continue;
    }
    ASSERT_EQ(o.code, kExitOk) << kind << ": " << o.err;
    std::string why;
    EXPECT_TRUE(validate_table(json::parse(o.out), why)) << kind << ": " << why;
  }
}

TEST(Table, ErrorExitCodes) {
  EXPECT_EQ(run_args({"table", "--kind", "pb-neg", "--n", "3..1", "--k", "1"}).code, kExitSizeLimit);
  EXPECT_EQ(run_args({"table", "--kind", "pb-neg", "--n", "0..65", "--k", "1"}).code, kExitSizeLimit);
  EXPECT_EQ(run_args({"table", "--kind", "gpb-poly", "--alpha", "1", "--beta", "-1"}).code, kExitBadInput);
  EXPECT_EQ(run_args({"table", "--kind", "nonsense"}).code, kExitBadInput);
  EXPECT_EQ(run_args({"table", "--kind", "gpb-poly", "--n", "x"}).code, kExitBadInput);
  EXPECT_EQ(run_args({"frobnicate"}).code, kExitBadInput);
}

TEST(ValidateTable, RejectsMalformedDocuments) {
  std::string why;
  const json good = json::parse(run_args({"table", "--kind", "pb-number", "--n", "0..2", "--k", "1"}).out);
  ASSERT_TRUE(validate_table(good, why)) << why;

  json bad = good;
  bad["entries"][0]["value"] = "2/4";
  EXPECT_FALSE(validate_table(bad, why));
  bad = good;
  bad["entries"][0]["value"] = 0.5;
  EXPECT_FALSE(validate_table(bad, why));
  bad = good;
  bad.erase("params");
  EXPECT_FALSE(validate_table(bad, why));
  bad = good;
  bad["entries"][1]["extra"] = 1;
  EXPECT_FALSE(validate_table(bad, why));
  bad = good;
  bad["kind"] = "unknown";
  EXPECT_FALSE(validate_table(bad, why));
  EXPECT_FALSE(why.empty());
}

TEST(Eval, ExactKinds) {
  const Outcome gpb = run_args({"eval", "--kind", "gpb", "--n", "1", "--k", "1", "--x", "0"});
  ASSERT_EQ(gpb.code, kExitOk) << gpb.err;
  EXPECT_EQ(json::parse(gpb.out)["value"], "1/2");
  const Outcome neg = run_args({"eval", "--kind", "pb-neg", "--n", "2", "--k", "2"});
  EXPECT_EQ(json::parse(neg.out)["value"], "14");
  const Outcome zeta = run_args({"eval", "--kind", "zeta", "--s", "-2", "--k", "1", "--x", "1"});
  ASSERT_EQ(zeta.code, kExitOk) << zeta.err;
  EXPECT_EQ(json::parse(zeta.out)["value"], "1/6");
  EXPECT_EQ(json::parse(zeta.out)["method"], "exact");
}

TEST(Eval, QuadratureMatchesHurwitz) {
  const Outcome o = run_args({"eval", "--kind", "zeta", "--s", "1", "--k", "1", "--x", "2", "--method", "quadrature"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json doc = json::parse(o.out);
  EXPECT_EQ(doc["precision_bits"], 64);
  const double value = std::stod(doc["value"].get<std::string>());
  const double expected = oracle::hurwitz_zeta(Rat(2), Rat(2), 64).to_double();
  EXPECT_NEAR(value, expected, 1e-12 * expected);
}

TEST(Eval, PrecisionFromEnvironment) {
  setenv(kPrecisionEnv, "128", 1);
  const Outcome o = run_args({"eval", "--kind", "zeta", "--s", "2", "--x", "30", "--alpha", "1/2", "--beta", "1/2"});
  unsetenv(kPrecisionEnv);
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(json::parse(o.out)["precision_bits"], 128);
  const Outcome flag = run_args(
      {"eval", "--kind", "zeta", "--s", "2", "--x", "30", "--alpha", "1/2", "--beta", "1/2", "--precision", "96"});
  EXPECT_EQ(json::parse(flag.out)["precision_bits"], 96);
}

TEST(Eval, NumericErrors) {
  EXPECT_EQ(run_args({"eval", "--kind", "zeta", "--s", "2", "--x", "1", "--alpha", "1", "--beta", "0",
                      "--method", "series"})
                .code,
            kExitBadInput);
  EXPECT_EQ(run_args({"eval", "--kind", "zeta", "--s", "2", "--x", "1", "--precision", "5000"}).code, kExitSizeLimit);
  EXPECT_EQ(run_args({"eval", "--kind", "zeta", "--s", "2", "--x", "1", "--alpha", "1/2", "--beta", "1/2",
                      "--precision", "128", "--max-terms", "20", "--method", "series"})
                .code,
            kExitNoConvergence);
}

TEST(Eval, CsvIsKeysThenValues) {
  const Outcome o = run_args({"eval", "--kind", "pb-number", "--n", "1", "--k", "3", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk);
  std::istringstream lines(o.out);
  std::string keys, values, extra;
  std::getline(lines, keys);
  std::getline(lines, values);
  EXPECT_FALSE(std::getline(lines, extra));
  EXPECT_NE(keys.find("value"), std::string::npos);
  EXPECT_NE(values.find("1/8"), std::string::npos);
}

TEST(Out, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "polybern_test_out.json";
  const Outcome o = run_args({"table", "--kind", "pb-neg", "--n", "2", "--k", "2", "--out", path.string()});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["entries"][0]["value"], "14");
  std::filesystem::remove(path);
}

TEST(Verify, SuitesPassAndReportCounts) {
  const Outcome o = run_args({"verify", "duality", "--seed", "42"});
  ASSERT_EQ(o.code, kExitOk) << o.out;
  const json doc = json::parse(o.out);
  EXPECT_EQ(doc["seed"], 42);
  EXPECT_EQ(doc["failures"], 0);
  EXPECT_GT(doc["cases"].get<long>(), 0);
  for (const auto& inv : doc["suites"][0]["invariants"]) EXPECT_GT(inv["cases"].get<long>(), 0) << inv["id"];
  EXPECT_NE(o.err.find("wall time"), std::string::npos);

  EXPECT_EQ(run_args({"verify", "interpolation", "--seed", "7"}).code, kExitOk);
  const Outcome text = run_args({"verify", "power_sum", "--format", "text"});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("power_sum"), std::string::npos);
  EXPECT_EQ(run_args({"verify", "nonexistent"}).code, kExitBadInput);
}

TEST(Verify, SameSeedSameReport) {
  const Outcome a = run_args({"verify", "generalized", "--seed", "11"});
  const Outcome b = run_args({"verify", "generalized", "--seed", "11"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Registry, CatalogCoversEveryDeclaredInvariant) {
  std::set<std::string> declared;
  for (const auto& suite : verify::registry()) {
    for (const auto& id : suite.invariants) EXPECT_TRUE(declared.insert(id).second) << "duplicate " << id;
  }
  std::set<std::string> catalogued;
  for (const auto& entry : verify::invariant_catalog()) {
    EXPECT_TRUE(declared.count(entry.id)) << entry.id;
    catalogued.insert(entry.id);
  }
  EXPECT_EQ(catalogued, declared);
}

TEST(Process, RepeatedRunsAreByteIdentical) {
  for (const std::string& args :
       {std::string("table --kind sym-poly --n 0..3 --m 0..2 --alpha 1/2 --beta 1/3 --format csv"),
        std::string("table --kind gpb-c-poly --n 0..4 --k=-2..2 --gamma 2"),
        std::string("verify recurrences --seed 3")}) {
    const Outcome a = spawn(args), b = spawn(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

}  // namespace
}  // namespace polybern::cli
