#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polybern/params.hpp"
#include "polybern/verify.hpp"

/// Command-line front end: `table`, `eval` and `verify`.
namespace polybern::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailures = 1,     ///< verify found failing cases
  kExitBadInput = 2,     ///< malformed arguments, invalid parameters, unknown suite or kind
  kExitSizeLimit = 3,    ///< size guard exceeded or empty range
  kExitNoConvergence = 4,
};

/// Largest n, |k| or m accepted by the exact kinds.
inline constexpr long kIndexLimit = 64;

/// Overrides the default working precision (64 bits) when set.
inline constexpr const char* kPrecisionEnv = "POLYBERN_PRECISION";

/// Inclusive integer range written "a..b" or "a".
struct Range {
  long lo = 0;
  long hi = 0;
};

/// Throws std::invalid_argument on malformed text.
Range parse_range(std::string_view text);

/// Kinds accepted by `table`.
const std::vector<std::string>& table_kinds();

struct TableRequest {
  std::string kind;
  Range n;
  /// k for the one-index kinds (for pb-neg this is the positive m of B_n^{(-m)}), m for sym-poly.
  Range second;
  Params params = Params::classical();
  /// Evaluation point for the zeta kind.
  Rat x = 0;
};

/// Throws SizeLimitError for empty or oversized ranges, std::invalid_argument
/// for an unknown kind.
nlohmann::ordered_json table_json(const TableRequest& req);

/// CSV with a header row; one row per entry (per term for sym-poly).
std::string table_csv(const TableRequest& req);

/// Checks a parsed table against the emitted schema. On failure returns false
/// and describes the first violation in `why`.
bool validate_table(const nlohmann::json& doc, std::string& why);

nlohmann::ordered_json report_json(const std::vector<verify::SuiteReport>& reports, std::uint64_t seed);
std::string report_text(const std::vector<verify::SuiteReport>& reports, std::uint64_t seed);

/// Runs one command line. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Body of the `cli` verify suite.
void run_cli_suite(verify::SuiteRun& run);

}  // namespace polybern::cli
