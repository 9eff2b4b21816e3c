#include "pamet/io/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace pamet::io {

namespace {

[[noreturn]] void fail(const std::string& source, Index line, const std::string& message) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_record(const std::string& line, const std::string& source,
                                      Index line_no) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += ch;
    }
  }
  if (quoted) fail(source, line_no, "unterminated quote");
  cells.push_back(std::move(cell));
  return cells;
}

std::string_view trimmed(std::string_view cell) {
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r'))
    cell.remove_suffix(1);
  return cell;
}

}  // namespace

std::optional<Index> CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<Index>(i);
  return std::nullopt;
}

Index CsvTable::require_column(std::string_view name, const std::string& context) const {
  if (const auto idx = column(name)) return *idx;
  throw std::runtime_error(context + ": missing column '" + std::string(name) + "'");
}

CsvTable read_csv(std::istream& in, const std::string& source) {
  CsvTable table;
  std::string line;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF)
      line.erase(0, 3);  // UTF-8 BOM
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_record(line, source, line_no);
    for (std::string& c : cells) c = std::string(trimmed(c));
    if (table.header.empty()) {
      table.header = std::move(cells);
    } else {
      if (cells.size() != table.header.size())
        fail(source, line_no,
             "expected " + std::to_string(table.header.size()) + " fields, got " +
                 std::to_string(cells.size()));
      table.rows.push_back(std::move(cells));
    }
  }
  if (table.header.empty()) throw std::runtime_error(source + ": header row required");
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return read_csv(in, path);
}

Scalar parse_scalar(std::string_view cell, const std::string& source, Index line) {
  cell = trimmed(cell);
  Scalar value = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
    fail(source, line, "not a number: '" + std::string(cell) + "'");
  return value;
}

int parse_int(std::string_view cell, const std::string& source, Index line) {
  cell = trimmed(cell);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
    fail(source, line, "not an integer: '" + std::string(cell) + "'");
  return value;
}

std::string format_scalar(Scalar value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace pamet::io
