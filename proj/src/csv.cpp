#include "vortex/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace vortex {

void CsvTable::append_row(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw std::invalid_argument("csv: row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15e", v);
  return buf;
}

std::string format_int(long long v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%lld", v);
  return buf;
}

void write_csv(const CsvTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i > 0) out << ',';
    out << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw std::invalid_argument("csv: table is not rectangular");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << row[i];
    }
    out << '\n';
  }
}

}  // namespace vortex
