#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "bdiv/format.hpp"
#include "bdiv/json_io.hpp"

namespace bdiv::cli {

enum class OutputFormat { kCsv, kJson, kPlain };

using Cell = std::variant<std::string, double, long>;

/// A small column-typed table; every subcommand reports through one of these
/// so the three output formats stay consistent.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

inline std::string render_cell(const Cell& cell, int precision) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* d = std::get_if<double>(&cell)) return format_value(*d, precision);
  return std::to_string(std::get<long>(cell));
}

inline void write_csv(std::ostream& os, const Table& t, int precision) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render_cell(row[i], precision);
    os << '\n';
  }
}

inline Json to_json(const Table& t, int precision) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& cell = row[i];
      if (const auto* d = std::get_if<double>(&cell); d != nullptr && std::isfinite(*d)) {
        // Round through the text form so JSON and CSV agree digit for digit.
        obj[t.columns[i]] = std::stod(format_value(*d, precision));
      } else if (const auto* l = std::get_if<long>(&cell)) {
        obj[t.columns[i]] = *l;
      } else {
        obj[t.columns[i]] = render_cell(cell, precision);
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

/// One "key=value" line per column for single-row tables, otherwise one
/// space-separated line of key=value pairs per row.
inline void write_plain(std::ostream& os, const Table& t, int precision) {
  for (const auto& row : t.rows) {
    if (t.rows.size() == 1) {
      for (std::size_t i = 0; i < row.size(); ++i) os << t.columns[i] << '=' << render_cell(row[i], precision) << '\n';
    } else {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? " " : "") << t.columns[i] << '=' << render_cell(row[i], precision);
      }
      os << '\n';
    }
  }
}

inline void write_table(std::ostream& os, const Table& t, OutputFormat format, int precision) {
  switch (format) {
    case OutputFormat::kCsv: write_csv(os, t, precision); break;
    case OutputFormat::kJson: os << to_json(t, precision).dump(2) << '\n'; break;
    case OutputFormat::kPlain: write_plain(os, t, precision); break;
  }
}

}  // namespace bdiv::cli
