#pragma once

/// \file
/// Family specs, run configuration, report serialization and the three CLI
/// commands. Commands write to a stream and return the process exit code.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "turan/criteria.hpp"
#include "turan/errors.hpp"
#include "turan/families.hpp"
#include "turan/scanner.hpp"

namespace turan {

enum ExitCode : int {
  kExitOk = 0,
  kExitCriterionFailure = 2,
  kExitScanViolation = 3,
  kExitInputError = 4,
};

enum class OutputFormat { json, csv, text };

std::optional<OutputFormat> format_from_string(std::string_view text);

/// Malformed family spec or run option. line/column are 1-based positions in
/// the spec text when the JSON itself is malformed; field names the offending
/// member otherwise.
class SpecError : public Error {
 public:
  SpecError(const std::string& source, std::optional<std::size_t> line,
            std::optional<std::size_t> column, std::string field,
            const std::string& what);

  std::optional<std::size_t> line;
  std::optional<std::size_t> column;
  std::string field;
};

/// {"family": "<name>", "params": {...}} or
/// {"family": "custom", "alpha": [...], "beta": [...], "gamma": [...],
///  "limits": [la, lg], "symmetric": bool, "form": "interval"|"half_line"}.
PolynomialFamily family_from_json(const nlohmann::json& spec,
                                  const std::string& source = "spec");

/// Parses spec text; `source` names it in diagnostics.
PolynomialFamily parse_family_spec(std::string_view text,
                                   const std::string& source = "spec");

struct RunConfig {
  std::optional<std::string> family;
  std::map<std::string, double> params;
  /// Path to a spec file, or the spec itself when it starts with '{'.
  std::optional<std::string> spec;
  std::optional<std::size_t> n_max;
  std::optional<ScanRegion> region;
  std::optional<double> tol;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out;
  std::vector<double> xs;
  /// Use the auxiliary recurrence as given instead of its normalization.
  bool raw = false;
  int threads = 0;
};

/// Exactly one of family/spec; throws SpecError otherwise or when the spec
/// cannot be read or parsed.
PolynomialFamily load_family(const RunConfig& config);

/// "lo,hi,points" with points ≥ 2.
ScanRegion parse_region(std::string_view text, std::size_t n_min,
                        std::size_t n_max);

/// "k=v".
std::pair<std::string, double> parse_param(std::string_view text);

nlohmann::json to_json(const ScanRegion& region);
nlohmann::json to_json(const TuranReport& report);
nlohmann::json to_json(const CriterionVerdict& verdict);
nlohmann::json to_json(const NegativeWindow& window);

ScanRegion region_from_json(const nlohmann::json& j);
TuranReport report_from_json(const nlohmann::json& j);
CriterionVerdict verdict_from_json(const nlohmann::json& j);

/// "n,x,delta,flag" rows for every kept value, then the endpoint checks.
void write_csv(std::ostream& out, const TuranReport& report);

struct CheckOutcome {
  std::string family;
  std::size_t n_max = 0;
  std::vector<CriterionVerdict> verdicts;
  /// Criteria whose verdict holds and that imply Δₙ ≥ 0.
  std::vector<Criterion> applies;
  std::vector<std::string> notes;
  std::optional<InitCheck> thm4_init;
};

/// Runs every criterion applicable to the family.
CheckOutcome run_checks(const PolynomialFamily& family, std::size_t N);

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace turan
