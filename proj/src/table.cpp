#include "qfriction/table.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "qfriction/errors.hpp"

namespace qfriction {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table::add_row: column count mismatch");
  rows.push_back(std::move(row));
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw UsageError("--format must be csv or json");
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

namespace {

struct CsvCell {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(long v) const { return std::to_string(v); }
  std::string operator()(const std::string& s) const { return s; }
};

struct JsonCell {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(double v) const { return v; }
  nlohmann::ordered_json operator()(long v) const { return v; }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
};

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) record[table.columns[i]] = std::visit(JsonCell{}, row[i]);
    doc.push_back(std::move(record));
  }
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  if (format == OutputFormat::csv) {
    write_csv(out, table);
  } else {
    write_json(out, table);
  }
}

}  // namespace qfriction
