#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace qfriction {

// Null cells come out as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, double, long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& text);

// Doubles are written with 17 significant digits in scientific notation.
std::string format_double(double value);

void write_csv(std::ostream& out, const Table& table);
// Array of objects keyed by column name.
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, OutputFormat format);

}  // namespace qfriction
