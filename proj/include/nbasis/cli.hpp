// Command-line front end. The report is assembled as an ordered JSON
// document; the text format is a flattened rendering of the same document.
#ifndef NBASIS_CLI_HPP
#define NBASIS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nbasis/exactmath.hpp"
#include "nbasis/normal_basis.hpp"

namespace nbasis::cli {

inline constexpr int kSchemaVersion = 1;

enum class Subcommand { kForms, kConjugates, kNormalBasis, kMinpoly, kInvariant };
enum class OutputFormat { kJson, kText };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,      // bad arguments, invalid discriminant, excluded field
  kExitNumerical = 3,  // SnapFailure, PrecisionUnachievable, DegenerateValue
};

struct RunConfig {
  Subcommand subcommand = Subcommand::kForms;
  std::int64_t disc = 0;
  std::optional<std::int64_t> level;  // N; required by all but `forms`
  Precision precision;
  double snap_tolerance = kDefaultSnapTolerance;
  OutputFormat format = OutputFormat::kJson;
  unsigned threads = 0;        // 0 = hardware concurrency
  bool expand_power = false;   // also expand the polynomial of x^m
  bool timing = false;         // add wall-clock timing (breaks byte identity)
};

std::string_view to_string(Subcommand s);

/// Validates the config and computes the report. Throws nbasis::Error.
nlohmann::ordered_json build_report(const RunConfig& config);

/// One "path = value" line per leaf of the document.
std::string render_text(const nlohmann::ordered_json& report);

/// Builds and prints the report; diagnostics go to `err`. Returns the exit
/// code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (args[0] is the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nbasis::cli

#endif  // NBASIS_CLI_HPP
