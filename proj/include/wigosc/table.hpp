#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wigosc {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Numeric table with a column header and `# key=value` metadata lines.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  /// Value of a metadata key, or "" when absent.
  std::string meta_value(const std::string& key) const;
};

/// Metadata lines, then the header, then rows at 17 significant digits.
void write_csv(std::ostream& os, const Table& table);

/// Reads what write_csv writes. Throws std::invalid_argument on malformed input.
Table read_csv(std::istream& is);

/// {"meta": {...}, "columns": [...], "rows": [[...], ...]}
void write_json(std::ostream& os, const Table& table);

}  // namespace wigosc
