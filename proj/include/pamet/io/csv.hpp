#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pamet/types.hpp"

namespace pamet::io {

/// Header row plus string cells. Quoting follows the usual CSV rules
/// (double quotes, doubled to escape).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<Index> column(std::string_view name) const;
  Index require_column(std::string_view name, const std::string& context) const;
};

/// `source` names the input in error messages ("file.csv:12: ...").
CsvTable read_csv(std::istream& in, const std::string& source);
CsvTable read_csv_file(const std::string& path);

/// Locale-free numeric parsing; errors carry source and line number.
Scalar parse_scalar(std::string_view cell, const std::string& source, Index line);
int parse_int(std::string_view cell, const std::string& source, Index line);

/// Shortest-ish fixed formatting used for every CSV the tool writes, so
/// identical runs serialize to identical bytes.
std::string format_scalar(Scalar value);

}  // namespace pamet::io
