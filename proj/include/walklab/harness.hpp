#pragma once

// Named numerical checks: each pits two independently computed quantities
// against each other and reports how many decimal digits they share.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "walklab/precision.hpp"

namespace walklab {

enum class CheckStatus { proven, conjectural };
enum class CostClass { fast, medium, slow };

std::string to_string(CheckStatus s);
std::string to_string(CostClass c);

// What a check body hands back. lhs/rhs are decimal strings; `digits` is the
// agreement; `pass` overrides the threshold test for checks whose verdict is
// not a digit count (exact series comparisons, statistical tests).
struct CheckOutcome {
  std::string lhs;
  std::string rhs;
  int digits = 0;
  std::optional<bool> pass;
};

struct CheckEnv {
  PrecisionContext ctx;
  std::uint64_t seed;  // already mixed with the check id
};

struct CheckDefinition {
  std::string id;
  std::string description;
  std::string reference;  // the identity being tested, in formula form
  CheckStatus status = CheckStatus::proven;
  // Required agreement as a function of the requested digits.
  std::function<int(int digits)> min_digits;
  CostClass cost = CostClass::fast;
  std::function<CheckOutcome(const CheckEnv&)> run;
};

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::proven;
  std::string lhs;
  std::string rhs;
  int digits_agreed = 0;
  int min_digits = 0;
  double elapsed_s = 0;
  int precision = 0;
  bool pass = false;
  std::string error;  // set when the check threw
};

// The full registry, sorted by id.
const std::vector<CheckDefinition>& registry();

// fnmatch-style glob ("*", "?", "[...]").
bool glob_match(const std::string& pattern, const std::string& text);

std::vector<const CheckDefinition*> list_checks(const std::string& filter);

// Runs every matching check on up to `jobs` threads. Each check gets a fresh
// context at `digits` and the seed derive_seed(seed, id). A check that
// throws is recorded as failed with its message; the batch continues.
// Results come back in id order.
std::vector<CheckResult> run_checks(const std::string& filter, int digits, std::uint64_t seed, int jobs = 1);
CheckResult run_check(const CheckDefinition& def, int digits, std::uint64_t seed);

struct Report {
  int precision = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
};

std::string report_json(const Report& r);
std::string report_csv(const Report& r);
// Errc::io_error when the file cannot be written.
void write_report(const Report& r, const std::string& path, const std::string& format);
// Parses report_json output back; Errc::invalid_argument on malformed input.
Report parse_report_json(const std::string& text);

// Building blocks for check bodies.
CheckOutcome compare(const Real& lhs, const Real& rhs, const PrecisionContext& ctx);
// Against a printed decimal: agreement is capped at the number of
// significant digits printed.
CheckOutcome compare_printed(const Real& value, const std::string& printed, const PrecisionContext& ctx);
// The outcome with the fewest digits; `pass` overrides are and-ed.
CheckOutcome worst(const std::vector<CheckOutcome>& parts);

// Topics of the underlying mathematics and the check ids that cover them.
struct CoverageItem {
  std::string topic;
  std::vector<std::string> ids;
};
const std::vector<CoverageItem>& coverage_table();

}  // namespace walklab
