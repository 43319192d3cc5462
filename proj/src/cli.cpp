#include "polybern/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "polybern/errors.hpp"
#include "polybern/generalized.hpp"
#include "polybern/polybernoulli.hpp"
#include "polybern/symmetrized.hpp"
#include "polybern/zeta.hpp"

namespace polybern::cli {

using nlohmann::json;
using nlohmann::ordered_json;

Range parse_range(std::string_view text) {
  const auto parse_long = [&](std::string_view part) {
    const std::string s(part);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range: " + std::string(text));
    }
    if (used != s.size()) throw std::invalid_argument("bad range: " + std::string(text));
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const long v = parse_long(text);
    return {v, v};
  }
  return {parse_long(text.substr(0, dots)), parse_long(text.substr(dots + 2))};
}

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds = {"pb-number", "pb-neg", "gpb-poly", "gpb-c-poly", "sym-poly", "zeta"};
  return kinds;
}

namespace {

bool is_kind(const std::string& kind) {
  const auto& kinds = table_kinds();
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

bool second_is_m(const std::string& kind) { return kind == "sym-poly"; }
bool has_coeffs(const std::string& kind) { return kind == "gpb-poly" || kind == "gpb-c-poly"; }

void check_range(const Range& r, const char* name, bool allow_negative) {
  if (r.lo > r.hi) throw SizeLimitError(std::string("empty range for ") + name);
  if (!allow_negative && r.lo < 0) throw std::invalid_argument(std::string(name) + " must be non-negative");
  if (std::max(std::labs(r.lo), std::labs(r.hi)) > kIndexLimit) {
    throw SizeLimitError(std::string(name) + " exceeds the size guard of " + std::to_string(kIndexLimit));
  }
}

void check_request(const TableRequest& req) {
  if (!is_kind(req.kind)) throw std::invalid_argument("unknown kind: " + req.kind);
  check_range(req.n, "n", false);
  const bool k_signed = req.kind == "pb-number" || has_coeffs(req.kind) || req.kind == "zeta";
  check_range(req.second, second_is_m(req.kind) ? "m" : "k", k_signed);
}

ordered_json params_json(const Params& p) {
  return ordered_json{{"alpha", to_string(p.alpha())}, {"beta", to_string(p.beta())}, {"gamma", to_string(p.gamma())}};
}

ordered_json coeffs_json(const Poly1& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p.coeff_strings()) out.push_back(c);
  return out;
}

Rat scalar_entry(const TableRequest& req, unsigned n, long k) {
  if (req.kind == "pb-number") return gpb_explicit(n, k, req.params).poly.coeff(0);
  if (req.kind == "pb-neg") return Rat(pb_number_neg_closed(n, static_cast<unsigned>(k)));
  return xi_exact_neg(k, n, req.params, req.x);
}

Poly1 poly_entry(const TableRequest& req, unsigned n, long k) {
  return req.kind == "gpb-poly" ? gpb_explicit(n, k, req.params).poly : gpb_explicit_c(n, k, req.params).poly;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

ordered_json table_json(const TableRequest& req) {
  check_request(req);
  ordered_json doc;
  doc["kind"] = req.kind;
  doc["params"] = params_json(req.params);
  ordered_json entries = ordered_json::array();
  for (long n = req.n.lo; n <= req.n.hi; ++n) {
    const auto un = static_cast<unsigned>(n);
    for (long k = req.second.lo; k <= req.second.hi; ++k) {
      ordered_json e;
      e["n"] = n;
      if (second_is_m(req.kind)) {
        e["m"] = k;
        ordered_json terms = ordered_json::array();
        for (const auto& [i, j, c] : sym_def(un, static_cast<unsigned>(k), req.params).terms()) {
          terms.push_back(ordered_json::array({i, j, to_string(c)}));
        }
        e["terms"] = std::move(terms);
      } else if (has_coeffs(req.kind)) {
        e["k"] = k;
        e["coeffs"] = coeffs_json(poly_entry(req, un, k));
      } else {
        e["k"] = k;
        e["value"] = to_string(scalar_entry(req, un, k));
      }
      entries.push_back(std::move(e));
    }
  }
  doc["entries"] = std::move(entries);
  return doc;
}

std::string table_csv(const TableRequest& req) {
  check_request(req);
  const std::string prefix = req.kind + "," + to_string(req.params.alpha()) + "," + to_string(req.params.beta()) +
                             "," + to_string(req.params.gamma()) + ",";
  std::ostringstream os;
  if (second_is_m(req.kind)) {
    os << "kind,alpha,beta,gamma,n,m,i,j,coeff\n";
  } else {
    os << "kind,alpha,beta,gamma,n,k," << (has_coeffs(req.kind) ? "coeffs" : "value") << "\n";
  }
  for (long n = req.n.lo; n <= req.n.hi; ++n) {
    const auto un = static_cast<unsigned>(n);
    for (long k = req.second.lo; k <= req.second.hi; ++k) {
      if (second_is_m(req.kind)) {
        for (const auto& [i, j, c] : sym_def(un, static_cast<unsigned>(k), req.params).terms()) {
          os << prefix << n << "," << k << "," << i << "," << j << "," << to_string(c) << "\n";
        }
      } else if (has_coeffs(req.kind)) {
        os << prefix << n << "," << k << "," << join(poly_entry(req, un, k).coeff_strings(), ';') << "\n";
      } else {
        os << prefix << n << "," << k << "," << to_string(scalar_entry(req, un, k)) << "\n";
      }
    }
  }
  return os.str();
}

namespace {

bool is_rat_string(const json& v) {
  if (!v.is_string()) return false;
  try {
    const std::string s = v.get<std::string>();
    return to_string(parse_rat(s)) == s;
  } catch (const std::exception&) {
    return false;
  }
}

bool has_exact_keys(const json& obj, std::set<std::string> keys) {
  if (!obj.is_object() || obj.size() != keys.size()) return false;
  for (const auto& [key, value] : obj.items()) {
    if (!keys.count(key)) return false;
  }
  return true;
}

bool validate_entry(const std::string& kind, const json& e, std::string& why) {
  if (second_is_m(kind)) {
    if (!has_exact_keys(e, {"n", "m", "terms"}) || !e["n"].is_number_integer() || !e["m"].is_number_integer() ||
        !e["terms"].is_array()) {
      why = "sym-poly entry needs integer n, m and a terms array";
      return false;
    }
    for (const auto& t : e["terms"]) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
          !is_rat_string(t[2])) {
        why = "term must be [i, j, \"p/q\"]";
        return false;
      }
    }
    return true;
  }
  if (has_coeffs(kind)) {
    if (!has_exact_keys(e, {"n", "k", "coeffs"}) || !e["n"].is_number_integer() || !e["k"].is_number_integer() ||
        !e["coeffs"].is_array()) {
      why = "polynomial entry needs integer n, k and a coeffs array";
      return false;
    }
    for (const auto& c : e["coeffs"]) {
      if (!is_rat_string(c)) {
        why = "coefficient is not a canonical p/q string";
        return false;
      }
    }
    return true;
  }
  if (!has_exact_keys(e, {"n", "k", "value"}) || !e["n"].is_number_integer() || !e["k"].is_number_integer() ||
      !is_rat_string(e["value"])) {
    why = "scalar entry needs integer n, k and a p/q value";
    return false;
  }
  return true;
}

}  // namespace

bool validate_table(const json& doc, std::string& why) {
  if (!has_exact_keys(doc, {"kind", "params", "entries"})) {
    why = "top level must have exactly kind, params, entries";
    return false;
  }
  if (!doc["kind"].is_string() || !is_kind(doc["kind"].get<std::string>())) {
    why = "unknown kind";
    return false;
  }
  const json& p = doc["params"];
  if (!has_exact_keys(p, {"alpha", "beta", "gamma"}) || !is_rat_string(p["alpha"]) || !is_rat_string(p["beta"]) ||
      !is_rat_string(p["gamma"])) {
    why = "params must be alpha, beta, gamma as p/q strings";
    return false;
  }
  if (!doc["entries"].is_array()) {
    why = "entries must be an array";
    return false;
  }
  const std::string kind = doc["kind"].get<std::string>();
  for (const auto& e : doc["entries"]) {
    if (!validate_entry(kind, e, why)) return false;
  }
  return true;
}

ordered_json report_json(const std::vector<verify::SuiteReport>& reports, std::uint64_t seed) {
  ordered_json doc;
  doc["seed"] = seed;
  ordered_json suites = ordered_json::array();
  std::size_t cases = 0, failures = 0;
  for (const auto& r : reports) {
    ordered_json s;
    s["suite"] = r.suite;
    ordered_json inv = ordered_json::array();
    for (const auto& c : r.invariants) inv.push_back({{"id", c.id}, {"cases", c.cases}});
    s["invariants"] = std::move(inv);
    s["cases"] = r.cases;
    ordered_json fails = ordered_json::array();
    for (const auto& f : r.failures) {
      fails.push_back({{"invariant", f.invariant}, {"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    s["failures"] = std::move(fails);
    s["notes"] = r.notes;
    suites.push_back(std::move(s));
    cases += r.cases;
    failures += r.failures.size();
  }
  doc["suites"] = std::move(suites);
  doc["cases"] = cases;
  doc["failures"] = failures;
  return doc;
}

std::string report_text(const std::vector<verify::SuiteReport>& reports, std::uint64_t seed) {
  std::ostringstream os;
  std::size_t cases = 0, failures = 0;
  os << "seed " << seed << "\n";
  for (const auto& r : reports) {
    os << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures\n";
    for (const auto& c : r.invariants) os << "  " << c.id << ": " << c.cases << " cases\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    for (const auto& f : r.failures) {
      os << "  FAIL " << f.invariant << " [" << f.inputs << "]\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
    }
    cases += r.cases;
    failures += r.failures.size();
  }
  os << "total: " << cases << " cases, " << failures << " failures\n";
  return os.str();
}

namespace {

struct Options {
  std::string kind;
  std::string n = "0";
  std::string k = "0";
  std::string m = "0";
  std::string alpha = "1";
  std::string beta = "0";
  std::string gamma = "1";
  std::string s = "2";
  std::string x = "0";
  std::string y = "0";
  long precision = 64;
  std::size_t max_terms = 2000;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 42;
  std::string method = "series";
  std::string suite;
};

Params make_params(const Options& o) { return Params(parse_rat(o.alpha), parse_rat(o.beta), parse_rat(o.gamma)); }

long single(const std::string& text, const char* name) {
  const Range r = parse_range(text);
  if (r.lo != r.hi) throw std::invalid_argument(std::string("eval needs a single value for ") + name);
  return r.lo;
}

unsigned index_value(const std::string& text, const char* name) {
  const long v = single(text, name);
  if (v < 0) throw std::invalid_argument(std::string(name) + " must be non-negative");
  if (v > kIndexLimit) throw SizeLimitError(std::string(name) + " exceeds the size guard");
  return static_cast<unsigned>(v);
}

long signed_index(const std::string& text, const char* name) {
  const long v = single(text, name);
  if (std::labs(v) > kIndexLimit) throw SizeLimitError(std::string(name) + " exceeds the size guard");
  return v;
}

std::string render(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string render_csv_row(const ordered_json& flat) {
  std::vector<std::string> keys, values;
  for (const auto& [key, value] : flat.items()) {
    keys.push_back(key);
    values.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return join(keys, ',') + "\n" + join(values, ',') + "\n";
}

ordered_json eval_json(const Options& o) {
  std::string kind = o.kind == "gpb" ? "gpb-poly" : o.kind;
  const Params params = make_params(o);
  ordered_json doc;
  doc["kind"] = kind;
  doc["alpha"] = to_string(params.alpha());
  doc["beta"] = to_string(params.beta());
  doc["gamma"] = to_string(params.gamma());
  const Rat x = parse_rat(o.x);

  if (kind == "zeta") {
    const long k = signed_index(o.k, "k");
    const Rat s = parse_rat(o.s);
    doc["k"] = k;
    doc["s"] = to_string(s);
    doc["x"] = to_string(x);
    if (is_integer(s) && s <= 0) {
      if (-s > kIndexLimit) throw SizeLimitError("-s exceeds the size guard");
      doc["value"] = to_string(xi_exact_neg(k, static_cast<unsigned>(-s.get_num().get_si()), params, x));
      doc["method"] = "exact";
      return doc;
    }
    ZetaQuery q;
    q.k = k;
    q.s = s;
    q.x = x;
    q.params = params;
    q.precision = o.precision;
    q.max_terms = o.max_terms;
    ZetaValue v = o.method == "quadrature" ? xi_quadrature(q) : o.method == "reduced" ? xi_reduced(q) : xi_series(q);
    doc["value"] = v.decimal();
    doc["precision_bits"] = v.precision;
    doc["error_estimate"] = v.error.to_scientific(3);
    doc["method"] = o.method;
    return doc;
  }
  if (kind == "sym-poly") {
    const unsigned n = index_value(o.n, "n"), m = index_value(o.m, "m");
    const Rat y = parse_rat(o.y);
    doc["n"] = n;
    doc["m"] = m;
    doc["x"] = to_string(x);
    doc["y"] = to_string(y);
    doc["value"] = to_string(sym_def(n, m, params)(x, y));
    return doc;
  }
  const unsigned n = index_value(o.n, "n");
  if (kind == "pb-neg") {
    const long k = single(o.k, "k");
    if (k < 0) throw std::invalid_argument("pb-neg takes k >= 0 for B_n^{(-k)}");
    if (k > kIndexLimit) throw SizeLimitError("k exceeds the size guard");
    doc["n"] = n;
    doc["k"] = k;
    doc["value"] = to_string(Rat(pb_number_neg_closed(n, static_cast<unsigned>(k))));
    return doc;
  }
  const long k = signed_index(o.k, "k");
  doc["n"] = n;
  doc["k"] = k;
  if (kind == "pb-number") {
    doc["value"] = to_string(gpb_explicit(n, k, params).poly.coeff(0));
  } else if (kind == "gpb-poly" || kind == "gpb-c-poly") {
    const Poly1 p = kind == "gpb-poly" ? gpb_explicit(n, k, params).poly : gpb_explicit_c(n, k, params).poly;
    doc["x"] = to_string(x);
    doc["value"] = to_string(p(x));
  } else {
    throw std::invalid_argument("unknown kind: " + o.kind);
  }
  return doc;
}

TableRequest table_request(const Options& o) {
  TableRequest req;
  req.kind = o.kind;
  req.n = parse_range(o.n);
  req.second = parse_range(second_is_m(o.kind) ? o.m : o.k);
  req.params = make_params(o);
  req.x = parse_rat(o.x);
  return req;
}

int emit(const std::string& text, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write " << o.out << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const auto& info : verify::registry()) names.push_back(info.name);
  } else {
    const auto& reg = verify::registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const verify::SuiteInfo& i) { return i.name == o.suite; })) {
      err << "error: unknown suite " << o.suite << "\n";
      return kExitBadInput;
    }
    names.push_back(o.suite);
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<verify::SuiteReport> reports;
  std::size_t failures = 0;
  for (const auto& name : names) {
    reports.push_back(verify::run_suite(name, o.seed));
    failures += reports.back().failures.size();
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  const std::string text = o.format == "text" ? report_text(reports, o.seed) : render(report_json(reports, o.seed));
  if (const int code = emit(text, o, out, err); code != kExitOk) return code;
  err << "verify: " << failures << " failures, wall time " << std::fixed << std::setprecision(2) << elapsed.count()
      << " s\n";
  return failures ? kExitFailures : kExitOk;
}

long default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return 64;
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size()) throw std::invalid_argument(std::string("bad ") + kPrecisionEnv);
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.precision = default_precision();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  CLI::App app{"Poly-Bernoulli numbers and polynomials with a, b, c parameters"};
  app.require_subcommand(1);
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "ln a as p/q or a decimal")->capture_default_str();
    sub->add_option("--beta", o.beta, "ln b")->capture_default_str();
    sub->add_option("--gamma", o.gamma, "ln c")->capture_default_str();
    sub->add_option("--x", o.x, "evaluation point")->capture_default_str();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", o.out, "write to this path instead of stdout");
  };

  CLI::App* table = app.add_subcommand("table", "tabulate exact values over index ranges");
  table->add_option("--kind", o.kind, "table kind")->required()->check(CLI::IsMember(table_kinds()));
  table->add_option("--n", o.n, "n range, a..b")->capture_default_str();
  table->add_option("--k", o.k, "k range, a..b (use --k=-3..4 for negative bounds)")->capture_default_str();
  table->add_option("--m", o.m, "m range for sym-poly")->capture_default_str();
  add_common(table);

  CLI::App* eval = app.add_subcommand("eval", "evaluate one value");
  eval->add_option("--kind", o.kind, "gpb, gpb-c-poly, sym-poly, pb-number, pb-neg or zeta")
      ->required()
      ->check(CLI::IsMember({"gpb", "gpb-poly", "gpb-c-poly", "sym-poly", "pb-number", "pb-neg", "zeta"}));
  eval->add_option("--n", o.n)->capture_default_str();
  eval->add_option("--k", o.k)->capture_default_str();
  eval->add_option("--m", o.m)->capture_default_str();
  eval->add_option("--y", o.y)->capture_default_str();
  eval->add_option("--s", o.s, "zeta argument")->capture_default_str();
  eval->add_option("--precision", o.precision, "target precision in bits");
  eval->add_option("--max-terms", o.max_terms, "outer term cap for the zeta series")->capture_default_str();
  eval->add_option("--method", o.method, "numeric zeta method")
      ->check(CLI::IsMember({"series", "quadrature", "reduced"}))
      ->capture_default_str();
  add_common(eval);

  CLI::App* ver = app.add_subcommand("verify", "run identity suites");
  ver->add_option("suite", o.suite, "suite name or all")->required();
  ver->add_option("--seed", o.seed, "random seed")->capture_default_str();
  ver->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  ver->add_option("--out", o.out, "write the report to this path");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  try {
    if (ver->parsed()) return run_verify(o, out, err);
    if (table->parsed()) {
      const TableRequest req = table_request(o);
      return emit(o.format == "csv" ? table_csv(req) : render(table_json(req)), o, out, err);
    }
    const ordered_json doc = eval_json(o);
    return emit(o.format == "csv" ? render_csv_row(doc) : render(doc), o, out, err);
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

namespace {

std::string run_captured(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run(args, out, err);
  return out.str();
}

}  // namespace

void run_cli_suite(verify::SuiteRun& run) {
  const std::vector<std::vector<std::string>> commands = {
      {"polybern", "table", "--kind", "pb-neg", "--n", "0..4", "--k", "0..4"},
      {"polybern", "table", "--kind", "gpb-poly", "--n", "0..3", "--k=-1..2", "--alpha", "1/3", "--beta", "2/5",
       "--format", "csv"},
      {"polybern", "table", "--kind", "sym-poly", "--n", "0..2", "--m", "0..2", "--alpha", "2", "--beta", "-1/2"},
      {"polybern", "eval", "--kind", "zeta", "--s", "3/2", "--k", "2", "--x", "20", "--alpha", "1/2", "--beta",
       "1/2"},
      {"polybern", "verify", "power_sum", "--seed", "3"},
  };
  for (const auto& cmd : commands) {
    int first_code = 0, second_code = 0;
    const std::string first = run_captured(cmd, first_code);
    const std::string second = run_captured(cmd, second_code);
    run.expect("determinism", join(cmd, ' '), first == second && first_code == second_code && first_code == 0,
               std::to_string(first.size()) + " bytes, exit " + std::to_string(first_code),
               std::to_string(second.size()) + " bytes, exit " + std::to_string(second_code));
  }

  std::mt19937_64& rng = run.rng();
  for (const auto& kind : table_kinds()) {
    TableRequest req;
    req.kind = kind;
    req.n = {0, 3};
    req.second = kind == "pb-neg" || kind == "sym-poly" ? Range{0, 2} : Range{-1, 2};
    req.params = verify::random_params(rng);
    req.x = verify::random_rat(rng, 9, 6);
    const std::string text = table_json(req).dump(2);
    std::string why;
    bool ok = false;
    try {
      const json parsed = json::parse(text);
      ok = validate_table(parsed, why) && ordered_json::parse(text).dump(2) == text;
    } catch (const json::parse_error& e) {
      why = e.what();
    }
    run.expect("round_trip", "kind=" + kind, ok, why, "valid");
  }

  std::set<std::string> declared;
  for (const auto& info : verify::registry()) {
    for (const auto& id : info.invariants) {
      run.expect("registry_coverage", "unique " + id, declared.insert(id).second, id, "declared once");
    }
  }
  std::set<std::string> catalogued;
  for (const auto& entry : verify::invariant_catalog()) {
    catalogued.insert(entry.id);
    run.expect("registry_coverage", entry.module + ":" + entry.id, declared.count(entry.id) == 1, entry.id,
               "declared by a suite");
  }
  for (const auto& id : declared) {
    run.expect("registry_coverage", "catalogued " + id, catalogued.count(id) == 1, id, "in the catalog");
  }
}

}  // namespace polybern::cli
