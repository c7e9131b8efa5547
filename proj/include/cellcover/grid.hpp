#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cellcover {

enum class GridKind { Hex, Tri };

std::string_view to_string(GridKind kind);
GridKind parse_grid_kind(std::string_view text);

/// Number of edge-neighbors of every cell of the given grid.
constexpr int degree(GridKind kind) { return kind == GridKind::Hex ? 6 : 3; }

/// Lattice coordinate of a cell.
///
/// Hex grids use pointy-top axial coordinates (x = q, y = r, r grows downwards
/// on screen). Triangle grids use rows of alternating triangles: cell (x, y)
/// points upward iff x + y is even, and rows grow upwards.
struct Cell {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Coordinates beyond this magnitude are rejected; all derived geometry
/// (neighbors, inflated bounding boxes, lattice symmetries) then stays far
/// away from int32 overflow.
inline constexpr std::int32_t kCoordinateLimit = 1 << 28;

bool in_coordinate_range(Cell c);

/// Throws CoordinateError if c is out of range.
void check_coordinate_range(Cell c);

constexpr bool points_up(Cell c) { return ((c.x + c.y) & 1) == 0; }

struct Move {
  Cell from;
  Cell to;

  Move reversed() const { return {to, from}; }
  friend constexpr bool operator==(const Move&, const Move&) = default;
};

class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoordinateError : public GridError {
 public:
  using GridError::GridError;
};

/// Fixed-capacity list of up to six cells, ordered.
class CellRing {
 public:
  CellRing() = default;

  void push_back(Cell c) { cells_[size_++] = c; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const Cell& operator[](std::size_t i) const { return cells_[i]; }
  const Cell* begin() const { return cells_.data(); }
  const Cell* end() const { return cells_.data() + size_; }

  /// Position of c in the ring, or -1.
  int find(Cell c) const;

  friend bool operator==(const CellRing& a, const CellRing& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<Cell, 6> cells_{};
  std::size_t size_ = 0;
};

/// Edge-neighbors of c in canonical clockwise order.
///
/// Hex: NE, E, SE, SW, W, NW. Upward triangle: E, S, W. Downward triangle:
/// N, E, W. Positions outside any polygon are included.
CellRing neighbors(Cell c, GridKind kind);

bool adjacent(Cell a, Cell b, GridKind kind);

/// Cells sharing exactly one corner and no edge with c (always empty on hex).
std::vector<Cell> touching(Cell c, GridKind kind);

/// Neighbors of c in clockwise order, starting with arrived_from.
CellRing clockwise_scan(Cell c, Cell arrived_from, GridKind kind);

/// The neighbor following `from` in c's clockwise cycle.
Cell next_clockwise(Cell c, Cell from, GridKind kind);

}  // namespace cellcover

template <>
struct std::hash<cellcover::Cell> {
  std::size_t operator()(const cellcover::Cell& c) const noexcept {
    auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x));
    auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y));
    return std::hash<std::uint64_t>{}((ux << 32) ^ uy);
  }
};
