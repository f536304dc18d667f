#pragma once

#include <string>

#include <json.hpp>

#include "triplepoint/obstruct.hpp"

namespace triplepoint::cli {

/// Numbers in reports carry 12 significant digits.
inline constexpr int kPrintedDigits = 12;

double round_printed(double value);
std::string format_number(double value);
std::string format_complex(Complex z);

struct FileReport {
  std::string file;
  ObstructionReport report;
};

nlohmann::ordered_json to_json(const FileReport& fr);
FileReport file_report_from_json(const nlohmann::ordered_json& j);

/// Copy of the report with every real rounded to printed precision; the JSON
/// round trip is the identity on such reports.
ObstructionReport rounded(const ObstructionReport& report);

bool field_identical(const ObstructionReport& a, const ObstructionReport& b);

}  // namespace triplepoint::cli
