#include "cellcover/polygon_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace cellcover {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

GridPolygon parse_polygon(std::string_view text) {
  std::optional<GridKind> kind;
  std::vector<Cell> cells;
  std::set<Cell> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (!kind) {
      if (tokens.size() != 2 || tokens[0] != "grid") {
        throw ParseError(line_no, "expected header 'grid hex' or 'grid tri'");
      }
      try {
        kind = parse_grid_kind(tokens[1]);
      } catch (const GridError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two integers per cell line");
    const auto x = parse_int(tokens[0], line_no);
    const auto y = parse_int(tokens[1], line_no);
    if (x < -kCoordinateLimit || x > kCoordinateLimit || y < -kCoordinateLimit || y > kCoordinateLimit) {
      throw ParseError(line_no, "coordinate out of supported range");
    }
    const Cell c{static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)};
    if (!seen.insert(c).second) {
      throw ParseError(line_no, "duplicate cell " + std::to_string(x) + " " + std::to_string(y));
    }
    cells.push_back(c);
  }
  if (!kind) throw ParseError(0, "missing 'grid' header");
  if (cells.empty()) throw ParseError(0, "polygon has no cells");
  try {
    return GridPolygon(*kind, std::move(cells));
  } catch (const PolygonError& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_polygon(const GridPolygon& p) {
  std::ostringstream out;
  out << "grid " << to_string(p.kind()) << '\n';
  for (Cell c : p.cells()) out << c.x << ' ' << c.y << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GridError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GridError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw GridError("write to '" + path + "' failed");
}

GridPolygon read_polygon_file(const std::string& path) { return parse_polygon(read_text_file(path)); }

}  // namespace cellcover
