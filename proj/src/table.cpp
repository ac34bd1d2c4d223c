#include "wigosc/table.hpp"

#include <json.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wigosc {

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("Table: row width does not match columns");
  rows.push_back(std::move(row));
}

std::string Table::meta_value(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  return {};
}

void write_csv(std::ostream& os, const Table& table) {
  for (const auto& [k, v] : table.meta) os << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_value(row[i]);
    os << '\n';
  }
}

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      if (have_header) throw std::invalid_argument("read_csv: metadata after header");
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("read_csv: metadata line without '='");
      t.meta.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    if (!have_header) {
      t.columns = split_commas(line);
      have_header = true;
      continue;
    }
    const auto cells = split_commas(line);
    if (cells.size() != t.columns.size()) throw std::invalid_argument("read_csv: ragged row: " + line);
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(c, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("read_csv: bad number '" + c + "'");
      }
      if (used != c.size()) throw std::invalid_argument("read_csv: bad number '" + c + "'");
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::invalid_argument("read_csv: missing header");
  return t;
}

void write_json(std::ostream& os, const Table& table) {
  nlohmann::ordered_json j;
  j["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.meta) j["meta"][k] = v;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  os << j.dump(2) << '\n';
}

}  // namespace wigosc
