#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vortex {

/// Rectangular CSV payload; numeric cells are preformatted strings so a table
/// renders byte-identically on every run.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Throws std::invalid_argument when the row width differs from the header.
  void append_row(std::vector<std::string> row);
};

/// Full precision scientific form ("%.15e"): 16 significant digits, '.'
/// decimal separator, locale independent.
std::string format_double(double v);
std::string format_int(long long v);

/// LF line endings, no trailing delimiter.
void write_csv(const CsvTable& table, std::ostream& out);

}  // namespace vortex
