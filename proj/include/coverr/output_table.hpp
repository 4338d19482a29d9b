#ifndef COVERR_OUTPUT_TABLE_HPP
#define COVERR_OUTPUT_TABLE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

// Rectangular result tables serialized as CSV or TSV, preceded by the
// schema comment line "# coverr-schema=1".  Numeric cells use the shortest
// representation that round-trips; table rendering (stdout) caps at six
// significant digits while file output keeps full precision.

namespace coverr::output {

enum class TableFormat { Csv, Tsv };

struct Cell {
  std::variant<std::string, double, std::int64_t, bool> v;

  Cell(std::string s) : v(std::move(s)) {}
  Cell(const char* s) : v(std::string(s)) {}
  Cell(double d) : v(d) {}
  Cell(std::int64_t i) : v(i) {}
  Cell(int i) : v(static_cast<std::int64_t>(i)) {}
  Cell(std::uint64_t u) : v(static_cast<std::int64_t>(u)) {}
  Cell(bool b) : v(b) {}
};

struct OutputTable {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells);
};

/// Shortest round-trip decimal representation of a double.
std::string format_full(double x);

/// Shortest representation at <= `digits` significant digits.
std::string format_sig(double x, int digits);

/// Serializes the table, schema comment first.  full_precision=false caps
/// numeric cells at six significant digits.
std::string render(const OutputTable& table, TableFormat format,
                   bool full_precision);

}  // namespace coverr::output

#endif  // COVERR_OUTPUT_TABLE_HPP
