#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "cellcover/grid.hpp"

namespace cellcover {

using CellSet = std::set<Cell>;

/// Layer number (>= 1) of every cell of a cell set.
using LayerMap = std::map<Cell, int>;

class PolygonError : public GridError {
 public:
  using GridError::GridError;
};

struct PolygonMetrics {
  std::int64_t area = 0;       // C
  std::int64_t perimeter = 0;  // E
};

/// A nonempty, edge-connected set of free cells on one grid.
///
/// Cells are kept in lexicographic order; index i refers to cells()[i].
/// Immutable after construction.
class GridPolygon {
 public:
  /// Throws PolygonError on empty, duplicate, or disconnected input and
  /// CoordinateError on out-of-range coordinates.
  GridPolygon(GridKind kind, std::vector<Cell> cells);

  GridKind kind() const { return kind_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  CellSet cell_set() const { return {cells_.begin(), cells_.end()}; }

  bool contains(Cell c) const { return index_.contains(c); }
  std::optional<std::size_t> index_of(Cell c) const;

  /// Indices of the edge-neighbors of cell i in clockwise order; -1 marks a
  /// position that is not part of the polygon.
  std::span<const int> neighbor_indices(std::size_t i) const {
    const auto d = static_cast<std::size_t>(degree(kind_));
    return {adjacency_.data() + i * d, d};
  }

  friend bool operator==(const GridPolygon& a, const GridPolygon& b) {
    return a.kind_ == b.kind_ && a.cells_ == b.cells_;
  }

 private:
  GridKind kind_;
  std::vector<Cell> cells_;
  std::unordered_map<Cell, int> index_;
  std::vector<int> adjacency_;
};

/// Number of free/non-free edge incidences of an arbitrary cell set.
std::int64_t perimeter(GridKind kind, const CellSet& cells);

PolygonMetrics metrics(const GridPolygon& p);

/// Edge-connected components, each in lexicographic order of its smallest cell.
std::vector<CellSet> components(GridKind kind, const CellSet& cells);

bool is_edge_connected(GridKind kind, const CellSet& cells);

/// Holes: blocked regions not connected to the unbounded outside. Blocked
/// cells connect through edges on hex and through edges or corners on tri.
std::vector<CellSet> holes(const GridPolygon& p);

bool is_simple(const GridPolygon& p);

/// Iterative boundary peeling of an arbitrary cell set. Layer 1 holds the
/// cells that share an edge or a corner with a cell outside the set.
LayerMap layers(GridKind kind, const CellSet& cells);
LayerMap layers(const GridPolygon& p);

/// Cells with layer number greater than `depth`; possibly empty or disconnected.
CellSet offset(const GridPolygon& p, int depth);
CellSet offset(GridKind kind, const LayerMap& layer_map, int depth);

/// True iff removing c leaves every other cell's layer number unchanged.
bool is_narrow_passage_cell(const GridPolygon& p, Cell c);

std::vector<Cell> narrow_passage_cells(const GridPolygon& p);

}  // namespace cellcover
