#include "coverr/output_table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace coverr::output {

void OutputTable::add_row(std::vector<Cell> cells) {
  if (cells.size() != header.size())
    throw std::logic_error("OutputTable: row width does not match header");
  rows.push_back(std::move(cells));
}

std::string format_full(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_sig(double x, int digits) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  std::string s(buf, res.ptr);
  // Prefer the exact shortest form when it is no longer than the capped one.
  std::string full = format_full(x);
  return full.size() <= s.size() ? full : s;
}

namespace {

std::string cell_text(const Cell& c, bool full_precision) {
  if (std::holds_alternative<std::string>(c.v)) return std::get<std::string>(c.v);
  if (std::holds_alternative<double>(c.v)) {
    double d = std::get<double>(c.v);
    return full_precision ? format_full(d) : format_sig(d, 6);
  }
  if (std::holds_alternative<std::int64_t>(c.v))
    return std::to_string(std::get<std::int64_t>(c.v));
  return std::get<bool>(c.v) ? "true" : "false";
}

std::string escape(const std::string& s, char sep) {
  bool needs_quote = false;
  for (char ch : s)
    if (ch == sep || ch == '"' || ch == '\n') needs_quote = true;
  if (!needs_quote) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render(const OutputTable& table, TableFormat format,
                   bool full_precision) {
  const char sep = format == TableFormat::Csv ? ',' : '\t';
  std::string out = "# coverr-schema=1\n";
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += sep;
    out += escape(table.header[i], sep);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += sep;
      out += escape(cell_text(row[i], full_precision), sep);
    }
    out += '\n';
  }
  return out;
}

}  // namespace coverr::output
