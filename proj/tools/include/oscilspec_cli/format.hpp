#pragma once

#include <string>
#include <vector>

namespace oscilspec::cli {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_format(const std::string& name);

struct Column {
  std::string name;
  /// Emitted as a JSON number rather than a string.
  bool integer = false;
  /// Fractional digits are grouped in threes in the table layout.
  bool grouped = false;
};

/// A rendered result: every cell is already a decimal or text string so
/// that no value passes through a binary float on the way out.
struct Report {
  std::string title;
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

/// "-2.000000000" -> "−2.000 000 000" (typographic minus, thin groups of three).
std::string group_digits(const std::string& fixed);

std::string render(const Report& report, OutputFormat format);
std::string render_table(const Report& report);
std::string render_csv(const Report& report);
std::string render_json(const Report& report);

/// Inverse of render_json.
Report parse_json_report(const std::string& text);

}  // namespace oscilspec::cli
