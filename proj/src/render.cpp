#include "cellcover/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace cellcover {

namespace {

struct Palette {
  static constexpr const char* kBackground = "#ffffff";
  static constexpr const char* kCell = "#e8e4d8";
  static constexpr const char* kCellEdge = "#6b6b6b";
  static constexpr const char* kSplit = "#f4a259";
  static constexpr const char* kStart = "#8cb369";
  static constexpr const char* kWalk = "#2e5eaa";
};

constexpr double kPixelsPerUnit = 24.0;
constexpr double kMargin = 0.5;

struct Point {
  double x = 0;
  double y = 0;
};

void check_trace(const GridPolygon& p, const ExplorationTrace& trace) {
  if (trace.kind != p.kind()) {
    throw RenderError("trace is for a " + std::string(to_string(trace.kind)) + " grid but the polygon is " +
                      std::string(to_string(p.kind())));
  }
  try {
    validate_trace(p, trace);
  } catch (const ExploreError& e) {
    throw RenderError(std::string("trace does not match polygon: ") + e.what());
  }
}

std::vector<Point> outline(Cell c, GridKind kind) {
  std::vector<Point> pts;
  if (kind == GridKind::Hex) {
    const double cx = std::sqrt(3.0) * (c.x + c.y / 2.0);
    const double cy = 1.5 * c.y;
    for (int k = 0; k < 6; ++k) {
      const double a = (60.0 * k - 30.0) * M_PI / 180.0;
      pts.push_back({cx + std::cos(a), cy + std::sin(a)});
    }
    return pts;
  }
  // Lattice vertex (X, Y) sits at (X / 2, Y * sqrt(3) / 2); SVG y points down.
  const double h = std::sqrt(3.0) / 2.0;
  auto vertex = [&](int X, int Y) { return Point{X * 0.5, -Y * h}; };
  if (points_up(c)) {
    pts = {vertex(c.x - 1, c.y), vertex(c.x, c.y + 1), vertex(c.x + 1, c.y)};
  } else {
    pts = {vertex(c.x - 1, c.y + 1), vertex(c.x + 1, c.y + 1), vertex(c.x, c.y)};
  }
  return pts;
}

Point center(Cell c, GridKind kind) {
  const auto pts = outline(c, kind);
  Point m;
  for (const Point& q : pts) {
    m.x += q.x;
    m.y += q.y;
  }
  m.x /= static_cast<double>(pts.size());
  m.y /= static_cast<double>(pts.size());
  return m;
}

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string points_attr(const std::vector<Point>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += num(pts[i].x) + "," + num(pts[i].y);
  }
  return out;
}

std::set<Cell> split_cells(const ExplorationTrace* trace) {
  std::set<Cell> out;
  if (trace) {
    for (const auto& e : trace->events) out.insert(e.at);
  }
  return out;
}

}  // namespace

std::string render_ascii(const GridPolygon& p, const ExplorationTrace* trace) {
  if (trace) check_trace(p, *trace);
  const auto splits = split_cells(trace);
  auto glyph = [&](Cell c) {
    if (trace && c == trace->start()) return 'S';
    if (splits.contains(c)) return '*';
    if (p.kind() == GridKind::Hex) return 'o';
    return points_up(c) ? '^' : 'v';
  };

  // Text column of each cell; hex rows shift right by one column per row.
  auto column = [&](Cell c) { return p.kind() == GridKind::Hex ? 2 * c.x + c.y : c.x; };
  int min_col = std::numeric_limits<int>::max();
  std::map<int, std::map<int, char>> rows;
  for (Cell c : p.cells()) {
    min_col = std::min(min_col, column(c));
    rows[c.y][column(c)] = glyph(c);
  }
  std::vector<int> order;
  for (const auto& [y, row] : rows) order.push_back(y);
  if (p.kind() == GridKind::Tri) std::reverse(order.begin(), order.end());

  std::string out;
  for (int y : order) {
    std::string line;
    for (const auto& [col, ch] : rows[y]) {
      line.resize(static_cast<std::size_t>(col - min_col), ' ');
      line += ch;
    }
    out += line + '\n';
  }
  return out;
}

std::string render_svg(const GridPolygon& p, const ExplorationTrace* trace) {
  if (trace) check_trace(p, *trace);
  const auto splits = split_cells(trace);

  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
  for (Cell c : p.cells()) {
    for (const Point& q : outline(c, p.kind())) {
      min_x = std::min(min_x, q.x);
      max_x = std::max(max_x, q.x);
      min_y = std::min(min_y, q.y);
      max_y = std::max(max_y, q.y);
    }
  }
  min_x -= kMargin;
  min_y -= kMargin;
  const double w = max_x - min_x + kMargin;
  const double h = max_y - min_y + kMargin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w * kPixelsPerUnit) << "\" height=\""
      << num(h * kPixelsPerUnit) << "\" viewBox=\"" << num(min_x) << ' ' << num(min_y) << ' ' << num(w) << ' '
      << num(h) << "\">\n";
  out << "<rect x=\"" << num(min_x) << "\" y=\"" << num(min_y) << "\" width=\"" << num(w) << "\" height=\""
      << num(h) << "\" fill=\"" << Palette::kBackground << "\"/>\n";
  out << "<g stroke=\"" << Palette::kCellEdge << "\" stroke-width=\"0.04\">\n";
  for (Cell c : p.cells()) {
    const char* fill = Palette::kCell;
    if (splits.contains(c)) fill = Palette::kSplit;
    if (trace && c == trace->start()) fill = Palette::kStart;
    out << "<polygon data-cell=\"" << c.x << ' ' << c.y << "\" points=\"" << points_attr(outline(c, p.kind()))
        << "\" fill=\"" << fill << "\"/>\n";
  }
  out << "</g>\n";
  if (trace && trace->walk.size() > 1) {
    std::vector<Point> pts;
    for (Cell c : trace->walk) pts.push_back(center(c, p.kind()));
    out << "<polyline class=\"walk\" points=\"" << points_attr(pts) << "\" fill=\"none\" stroke=\""
        << Palette::kWalk << "\" stroke-width=\"0.08\" stroke-linejoin=\"round\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cellcover
