#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "spinphase/cli/reports.hpp"
#include "spinphase/error.hpp"

namespace spinphase::cli {
namespace {

void check_shape(const Table& t) {
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::logic_error("table row width does not match header");
    }
  }
}

std::string format_double(double v, const std::string& column) {
  if (!std::isfinite(v)) {
    throw NumericalFailure("non-finite value in column '" + column + "'");
  }
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& cell, const std::string& column) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_double(v, column);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "1" : "0";
        else return v;
      },
      cell);
}

}  // namespace

void write_csv(std::ostream& os, const Table& table, const nlohmann::ordered_json& config) {
  check_shape(table);
  // Format everything first so a bad value leaves no partial output behind.
  std::string body = "# config: " + config.dump() + "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    body += (c ? "," : "") + table.columns[c];
  }
  body += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      body += (c ? "," : "") + csv_cell(row[c], table.columns[c]);
    }
    body += "\n";
  }
  os << body;
}

void write_json(std::ostream& os, const Table& table, const nlohmann::ordered_json& config) {
  check_shape(table);
  nlohmann::ordered_json doc;
  doc["config"] = config;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (!std::isfinite(v)) {
                throw NumericalFailure("non-finite value in column '" + table.columns[c] + "'");
              }
              obj[table.columns[c]] = v == 0.0 ? 0.0 : v;
            } else {
              obj[table.columns[c]] = v;
            }
          },
          row[c]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  os << doc.dump(2) << "\n";
}

}  // namespace spinphase::cli
