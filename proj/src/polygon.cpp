#include "cellcover/polygon.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace cellcover {

namespace {

std::string describe(Cell c) { return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")"; }

CellSet flood(GridKind kind, const CellSet& cells, Cell seed, CellSet& seen) {
  CellSet part;
  std::deque<Cell> queue{seed};
  seen.insert(seed);
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    part.insert(c);
    for (Cell n : neighbors(c, kind)) {
      if (cells.contains(n) && seen.insert(n).second) queue.push_back(n);
    }
  }
  return part;
}

}  // namespace

GridPolygon::GridPolygon(GridKind kind, std::vector<Cell> cells) : kind_(kind), cells_(std::move(cells)) {
  if (cells_.empty()) throw PolygonError("polygon has no cells");
  for (Cell c : cells_) check_coordinate_range(c);
  std::sort(cells_.begin(), cells_.end());
  if (auto dup = std::adjacent_find(cells_.begin(), cells_.end()); dup != cells_.end()) {
    throw PolygonError("duplicate cell " + describe(*dup));
  }
  index_.reserve(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) index_.emplace(cells_[i], static_cast<int>(i));

  const auto d = static_cast<std::size_t>(degree(kind_));
  adjacency_.assign(cells_.size() * d, -1);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const CellRing ring = neighbors(cells_[i], kind_);
    for (std::size_t k = 0; k < d; ++k) {
      if (auto it = index_.find(ring[k]); it != index_.end()) adjacency_[i * d + k] = it->second;
    }
  }

  std::vector<char> seen(cells_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    ++reached;
    for (int j : neighbor_indices(static_cast<std::size_t>(i))) {
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  if (reached != cells_.size()) {
    const auto first = std::find(seen.begin(), seen.end(), 0) - seen.begin();
    throw PolygonError("cells are not edge-connected: " + describe(cells_[first]) +
                       " cannot be reached from " + describe(cells_[0]));
  }
}

std::optional<std::size_t> GridPolygon::index_of(Cell c) const {
  if (auto it = index_.find(c); it != index_.end()) return static_cast<std::size_t>(it->second);
  return std::nullopt;
}

std::int64_t perimeter(GridKind kind, const CellSet& cells) {
  std::int64_t edges = 0;
  for (Cell c : cells) {
    for (Cell n : neighbors(c, kind)) edges += cells.contains(n) ? 0 : 1;
  }
  return edges;
}

PolygonMetrics metrics(const GridPolygon& p) {
  PolygonMetrics m;
  m.area = static_cast<std::int64_t>(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j : p.neighbor_indices(i)) m.perimeter += j < 0 ? 1 : 0;
  }
  return m;
}

std::vector<CellSet> components(GridKind kind, const CellSet& cells) {
  std::vector<CellSet> out;
  CellSet seen;
  for (Cell c : cells) {
    if (!seen.contains(c)) out.push_back(flood(kind, cells, c, seen));
  }
  return out;
}

bool is_edge_connected(GridKind kind, const CellSet& cells) { return components(kind, cells).size() <= 1; }

std::vector<CellSet> holes(const GridPolygon& p) {
  const GridKind kind = p.kind();
  std::int32_t min_x = std::numeric_limits<std::int32_t>::max(), min_y = min_x;
  std::int32_t max_x = std::numeric_limits<std::int32_t>::min(), max_y = max_x;
  for (Cell c : p.cells()) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  // Inflated box; its border ring is connected on both lattices and stands in
  // for the unbounded outside.
  const std::int32_t pad_x = kind == GridKind::Hex ? 1 : 2;
  min_x -= pad_x;
  max_x += pad_x;
  min_y -= 1;
  max_y += 1;
  auto inside_box = [&](Cell c) { return c.x >= min_x && c.x <= max_x && c.y >= min_y && c.y <= max_y; };
  auto on_border = [&](Cell c) { return c.x == min_x || c.x == max_x || c.y == min_y || c.y == max_y; };
  auto blocked_links = [&](Cell c) {
    std::vector<Cell> links;
    for (Cell n : neighbors(c, kind)) links.push_back(n);
    for (Cell n : touching(c, kind)) links.push_back(n);
    return links;
  };

  CellSet outside;
  std::deque<Cell> queue;
  for (std::int32_t x = min_x; x <= max_x; ++x) {
    for (Cell c : {Cell{x, min_y}, Cell{x, max_y}}) {
      if (outside.insert(c).second) queue.push_back(c);
    }
  }
  for (std::int32_t y = min_y; y <= max_y; ++y) {
    for (Cell c : {Cell{min_x, y}, Cell{max_x, y}}) {
      if (outside.insert(c).second) queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    for (Cell n : blocked_links(c)) {
      if (inside_box(n) && !p.contains(n) && outside.insert(n).second) queue.push_back(n);
    }
  }

  std::vector<CellSet> found;
  CellSet seen;
  for (std::int32_t y = min_y; y <= max_y; ++y) {
    for (std::int32_t x = min_x; x <= max_x; ++x) {
      const Cell c{x, y};
      if (p.contains(c) || outside.contains(c) || seen.contains(c) || on_border(c)) continue;
      CellSet hole;
      std::deque<Cell> q{c};
      seen.insert(c);
      while (!q.empty()) {
        const Cell h = q.front();
        q.pop_front();
        hole.insert(h);
        for (Cell n : blocked_links(h)) {
          if (inside_box(n) && !p.contains(n) && seen.insert(n).second) q.push_back(n);
        }
      }
      found.push_back(std::move(hole));
    }
  }
  return found;
}

bool is_simple(const GridPolygon& p) { return holes(p).empty(); }

LayerMap layers(GridKind kind, const CellSet& cells) {
  // A cell is on the boundary if any cell sharing an edge or a corner with it
  // is not in the set; corner contact only matters on the triangle grid.
  auto on_boundary = [&](Cell c, const CellSet& remaining) {
    for (Cell n : neighbors(c, kind)) {
      if (!remaining.contains(n)) return true;
    }
    for (Cell n : touching(c, kind)) {
      if (!remaining.contains(n)) return true;
    }
    return false;
  };
  LayerMap result;
  CellSet remaining = cells;
  for (int layer = 1; !remaining.empty(); ++layer) {
    std::vector<Cell> shell;
    for (Cell c : remaining) {
      if (on_boundary(c, remaining)) shell.push_back(c);
    }
    for (Cell c : shell) {
      result.emplace(c, layer);
      remaining.erase(c);
    }
  }
  return result;
}

LayerMap layers(const GridPolygon& p) { return layers(p.kind(), p.cell_set()); }

CellSet offset(GridKind, const LayerMap& layer_map, int depth) {
  CellSet out;
  for (const auto& [c, layer] : layer_map) {
    if (layer > depth) out.insert(c);
  }
  return out;
}

CellSet offset(const GridPolygon& p, int depth) { return offset(p.kind(), layers(p), depth); }

bool is_narrow_passage_cell(const GridPolygon& p, Cell c) {
  if (!p.contains(c)) throw PolygonError("cell " + describe(c) + " is not part of the polygon");
  const LayerMap before = layers(p);
  CellSet rest = p.cell_set();
  rest.erase(c);
  const LayerMap after = layers(p.kind(), rest);
  for (const auto& [cell, layer] : after) {
    if (before.at(cell) != layer) return false;
  }
  return true;
}

std::vector<Cell> narrow_passage_cells(const GridPolygon& p) {
  std::vector<Cell> out;
  for (Cell c : p.cells()) {
    if (is_narrow_passage_cell(p, c)) out.push_back(c);
  }
  return out;
}

}  // namespace cellcover
