#include "cellcover/grid.hpp"

#include <algorithm>
#include <cstdlib>

namespace cellcover {

namespace {

constexpr std::array<Cell, 6> kHexSteps{{{1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}}};
constexpr std::array<Cell, 3> kUpSteps{{{1, 0}, {0, -1}, {-1, 0}}};
constexpr std::array<Cell, 3> kDownSteps{{{0, 1}, {1, 0}, {-1, 0}}};

// Derived from corner incidence: 3 cells per corner besides c and its
// edge-neighbors.
constexpr std::array<Cell, 9> kUpTouching{
    {{-2, -1}, {-2, 0}, {-1, -1}, {-1, 1}, {0, 1}, {1, -1}, {1, 1}, {2, -1}, {2, 0}}};
constexpr std::array<Cell, 9> kDownTouching{
    {{-2, 0}, {-2, 1}, {-1, -1}, {-1, 1}, {0, -1}, {1, -1}, {1, 1}, {2, 0}, {2, 1}}};

Cell offset(Cell c, Cell d) { return {c.x + d.x, c.y + d.y}; }

}  // namespace

std::string_view to_string(GridKind kind) { return kind == GridKind::Hex ? "hex" : "tri"; }

GridKind parse_grid_kind(std::string_view text) {
  if (text == "hex") return GridKind::Hex;
  if (text == "tri") return GridKind::Tri;
  throw GridError("unknown grid kind '" + std::string(text) + "'");
}

bool in_coordinate_range(Cell c) {
  return std::abs(c.x) <= kCoordinateLimit && std::abs(c.y) <= kCoordinateLimit;
}

void check_coordinate_range(Cell c) {
  if (!in_coordinate_range(c)) {
    throw CoordinateError("coordinate (" + std::to_string(c.x) + ", " + std::to_string(c.y) +
                          ") exceeds the supported range");
  }
}

int CellRing::find(Cell c) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (cells_[i] == c) return static_cast<int>(i);
  }
  return -1;
}

CellRing neighbors(Cell c, GridKind kind) {
  CellRing ring;
  if (kind == GridKind::Hex) {
    for (Cell d : kHexSteps) ring.push_back(offset(c, d));
  } else {
    for (Cell d : points_up(c) ? kUpSteps : kDownSteps) ring.push_back(offset(c, d));
  }
  return ring;
}

bool adjacent(Cell a, Cell b, GridKind kind) { return neighbors(a, kind).find(b) >= 0; }

std::vector<Cell> touching(Cell c, GridKind kind) {
  std::vector<Cell> out;
  if (kind == GridKind::Hex) return out;
  for (Cell d : points_up(c) ? kUpTouching : kDownTouching) out.push_back(offset(c, d));
  return out;
}

CellRing clockwise_scan(Cell c, Cell arrived_from, GridKind kind) {
  const CellRing ring = neighbors(c, kind);
  const int start = ring.find(arrived_from);
  if (start < 0) {
    throw GridError("clockwise_scan: (" + std::to_string(arrived_from.x) + ", " +
                    std::to_string(arrived_from.y) + ") is not adjacent to (" +
                    std::to_string(c.x) + ", " + std::to_string(c.y) + ")");
  }
  CellRing out;
  for (std::size_t k = 0; k < ring.size(); ++k) out.push_back(ring[(start + k) % ring.size()]);
  return out;
}

Cell next_clockwise(Cell c, Cell from, GridKind kind) { return clockwise_scan(c, from, kind)[1]; }

}  // namespace cellcover
