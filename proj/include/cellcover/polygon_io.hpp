#pragma once

#include <string>
#include <string_view>

#include "cellcover/polygon.hpp"

namespace cellcover {

/// Syntax or content error in a polygon document; line() is 1-based, 0 when
/// the problem is not tied to a single line.
class ParseError : public GridError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GridError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the polygon text format:
///
///     grid hex|tri
///     <x> <y>        one free cell per line
///
/// Blank lines and lines starting with '#' are ignored.
GridPolygon parse_polygon(std::string_view text);

/// Canonical form: header line, then cells in lexicographic order.
std::string serialize_polygon(const GridPolygon& p);

GridPolygon read_polygon_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace cellcover
