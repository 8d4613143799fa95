#pragma once

#include "fgeo/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fgeo::cli {

enum class OutputFormat { text, json };

/// A measured value with its SI unit ("1" for dimensionless counts).
/// Reports carry 15 significant digits, so equality is at that precision.
struct Quantity {
  double value = 0.0;
  std::string unit;

  friend bool operator==(const Quantity& a, const Quantity& b);
};

using StringList = std::vector<std::string>;
using StringTable = std::vector<std::vector<std::string>>;

using ReportValue =
    std::variant<std::monostate, bool, BigInt, RationalNumber, Quantity, std::string, StringList, StringTable>;

using Entries = std::vector<std::pair<std::string, ReportValue>>;

struct RunReport {
  std::string command;
  /// Options after defaults were applied, in declaration order.
  std::vector<std::pair<std::string, std::string>> inputs;
  /// nullopt renders as "result": null with status "none".
  std::optional<Entries> result;
  std::string provenance;
  std::string error;
  std::string message;
  std::string witness;
  std::vector<std::string> warnings;
  int exit_code = 0;

  std::string status() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Parse `<subcommand> <action> [--flags]` (argv without the program name),
/// run exactly one operation and return its report. Never throws: usage
/// errors give exit code 2, domain errors exit code 1.
RunReport dispatch(const std::vector<std::string>& args, OutputFormat* format = nullptr);

std::string render_json(const RunReport& report);
std::string render_text(const RunReport& report);

/// Inverse of render_json.
RunReport parse_json_report(const std::string& json);

/// Format with 15 significant digits.
std::string format_number(double v);

std::string usage();

}  // namespace fgeo::cli
