#include "cellcover/generate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

namespace cellcover {

namespace {

constexpr int kSymmetries = 12;

void require(bool ok, const std::string& what) {
  if (!ok) throw PolygonError("infeasible family spec: " + what);
}

// Triangle cells as lattice-vertex triples in (a, b) coordinates of the
// triangular point lattice, where vertex (X, Y) = (1 + 2a + b, b).
std::array<std::pair<std::int64_t, std::int64_t>, 3> tri_vertices(Cell c) {
  std::array<std::pair<std::int64_t, std::int64_t>, 3> xy;
  if (points_up(c)) {
    xy = {{{c.x - 1, c.y}, {c.x + 1, c.y}, {c.x, c.y + 1}}};
  } else {
    xy = {{{c.x - 1, c.y + 1}, {c.x + 1, c.y + 1}, {c.x, c.y}}};
  }
  for (auto& [X, Y] : xy) {
    const std::int64_t b = Y;
    const std::int64_t a = (X - 1 - Y) / 2;
    X = a;
    Y = b;
  }
  return xy;
}

Cell tri_from_vertices(std::array<std::pair<std::int64_t, std::int64_t>, 3> ab) {
  std::array<std::pair<std::int64_t, std::int64_t>, 3> xy;
  for (std::size_t i = 0; i < 3; ++i) xy[i] = {1 + 2 * ab[i].first + ab[i].second, ab[i].second};
  std::sort(xy.begin(), xy.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  if (xy[0].second == xy[1].second) {
    return {static_cast<std::int32_t>(xy[2].first), static_cast<std::int32_t>(xy[0].second)};
  }
  return {static_cast<std::int32_t>(xy[0].first), static_cast<std::int32_t>(xy[0].second)};
}

// Rotation by 60 degrees is (a, b) -> (-b, a + b) in both axial and vertex
// lattice coordinates; (a, b) -> (b, a) is a reflection.
std::pair<std::int64_t, std::int64_t> lattice_map(std::pair<std::int64_t, std::int64_t> v, int index) {
  auto [a, b] = v;
  if (index >= 6) std::swap(a, b);
  for (int k = 0; k < index % 6; ++k) {
    const auto na = -b;
    const auto nb = a + b;
    a = na;
    b = nb;
  }
  return {a, b};
}

std::vector<Cell> normalize_translation(GridKind kind, std::vector<Cell> cells) {
  std::int32_t min_x = cells.front().x, min_y = cells.front().y;
  for (Cell c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  std::int32_t dx = -min_x;
  const std::int32_t dy = -min_y;
  if (kind == GridKind::Tri && ((dx + dy) & 1) != 0) dx += 1;
  for (Cell& c : cells) {
    c.x += dx;
    c.y += dy;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

std::vector<Cell> apply_symmetry(GridKind kind, const std::vector<Cell>& cells, int index) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (Cell c : cells) {
    if (kind == GridKind::Hex) {
      const auto [a, b] = lattice_map({c.x, c.y}, index);
      out.push_back({static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)});
    } else {
      auto v = tri_vertices(c);
      for (auto& p : v) p = lattice_map(p, index);
      out.push_back(tri_from_vertices(v));
    }
  }
  return out;
}

std::vector<Cell> canonical_form(GridKind kind, const std::vector<Cell>& cells) {
  std::vector<Cell> best;
  for (int k = 0; k < kSymmetries; ++k) {
    auto candidate = normalize_translation(kind, apply_symmetry(kind, cells, k));
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

GridPolygon corridor(GridKind kind, int width, int length) {
  require(width >= 1 && length >= 1, "corridor needs width >= 1 and length >= 1");
  std::vector<Cell> cells;
  for (int row = 0; row < width; ++row) {
    for (int i = 0; i < length; ++i) cells.push_back({i, row});
  }
  return GridPolygon(kind, std::move(cells));
}

GridPolygon honeycomb(int radius) {
  require(radius >= 0, "honeycomb radius must be >= 0");
  std::vector<Cell> cells;
  for (int q = -radius; q <= radius; ++q) {
    for (int r = -radius; r <= radius; ++r) {
      if (std::abs(q + r) <= radius) cells.push_back({q, r});
    }
  }
  return GridPolygon(GridKind::Hex, std::move(cells));
}

GridPolygon random_simple(GridKind kind, int cells, std::uint64_t seed) {
  require(cells >= 1, "random polygon needs at least one cell");
  std::mt19937_64 rng(seed);
  std::vector<Cell> free{{0, 0}};
  CellSet members{{0, 0}};
  CellSet rejected;
  while (static_cast<int>(free.size()) < cells) {
    std::vector<Cell> frontier;
    {
      CellSet f;
      for (Cell c : free) {
        for (Cell n : neighbors(c, kind)) {
          if (!members.contains(n) && !rejected.contains(n)) f.insert(n);
        }
      }
      frontier.assign(f.begin(), f.end());
    }
    if (frontier.empty()) throw PolygonError("random growth got stuck");
    const Cell pick = frontier[rng() % frontier.size()];
    auto trial = free;
    trial.push_back(pick);
    if (!is_simple(GridPolygon(kind, trial))) {
      rejected.insert(pick);
      continue;
    }
    free = std::move(trial);
    members.insert(pick);
    rejected.clear();
  }
  return GridPolygon(kind, std::move(free));
}

GridPolygon random_holed(GridKind kind, int cells, std::uint64_t seed) {
  require(cells >= 1, "random polygon needs at least one cell");
  std::mt19937_64 rng(seed);
  const int grown = cells + cells / 4;
  CellSet members{{0, 0}};
  while (static_cast<int>(members.size()) < grown) {
    CellSet f;
    for (Cell c : members) {
      for (Cell n : neighbors(c, kind)) {
        if (!members.contains(n)) f.insert(n);
      }
    }
    std::vector<Cell> frontier(f.begin(), f.end());
    members.insert(frontier[rng() % frontier.size()]);
  }
  // Carve interior cells while the rest stays connected.
  int attempts = 0;
  while (static_cast<int>(members.size()) > cells && attempts < 64 * grown) {
    ++attempts;
    const LayerMap layer = layers(kind, members);
    std::vector<Cell> interior;
    for (const auto& [c, l] : layer) {
      if (l >= 2) interior.push_back(c);
    }
    std::vector<Cell> pool = interior.empty() ? std::vector<Cell>(members.begin(), members.end()) : interior;
    const Cell pick = pool[rng() % pool.size()];
    CellSet rest = members;
    rest.erase(pick);
    if (is_edge_connected(kind, rest)) members = std::move(rest);
  }
  require(static_cast<int>(members.size()) == cells, "could not carve the requested size");
  return GridPolygon(kind, std::vector<Cell>(members.begin(), members.end()));
}

GridPolygon random_thick(GridKind kind, int core_cells, std::uint64_t seed) {
  const GridPolygon core = random_simple(kind, core_cells, seed);
  CellSet members = core.cell_set();
  for (Cell c : core.cells()) {
    for (Cell n : neighbors(c, kind)) members.insert(n);
    for (Cell n : touching(c, kind)) members.insert(n);
  }
  GridPolygon grown(kind, std::vector<Cell>(members.begin(), members.end()));
  for (const CellSet& hole : holes(grown)) members.insert(hole.begin(), hole.end());
  return GridPolygon(kind, std::vector<Cell>(members.begin(), members.end()));
}

GridPolygon comp_hex(int length) {
  require(length >= 1, "comp_hex length must be >= 1");
  // Width-3 parallelogram body: one head row plus `length` rows of three
  // cells, closed off by two rows of two cells.
  std::vector<Cell> cells;
  for (int r = 0; r <= length; ++r) {
    for (int q = 0; q < 3; ++q) cells.push_back({q, r});
  }
  for (int r = length + 1; r <= length + 2; ++r) {
    for (int q = 0; q < 2; ++q) cells.push_back({q, r});
  }
  return GridPolygon(GridKind::Hex, std::move(cells));
}

GridPolygon comp_tri(int middle_pairs) {
  require(middle_pairs >= 0, "comp_tri needs a non-negative number of middle row pairs");
  // Rows of six triangles between two rows of five, laid out along y and then
  // mirrored so the clockwise scan runs across the rows.
  std::vector<Cell> cells;
  const int rows = 2 * middle_pairs + 2;
  for (int y = 0; y < rows; ++y) {
    const bool outer = y == 0 || y == rows - 1;
    for (int x = outer ? 1 : 0; x < 6; ++x) cells.push_back({x, y});
  }
  return GridPolygon(GridKind::Tri, normalize_translation(GridKind::Tri, apply_symmetry(GridKind::Tri, cells, 6)));
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream out;
  switch (spec.family) {
    case Family::Corridor:
      out << "corridor(" << to_string(spec.kind) << ", w=" << spec.width << ", len=" << spec.length << ")";
      break;
    case Family::Honeycomb: out << "honeycomb(r=" << spec.radius << ")"; break;
    case Family::RandomSimple:
      out << "random_simple(" << to_string(spec.kind) << ", n=" << spec.cells << ", seed=" << spec.seed << ")";
      break;
    case Family::RandomHoled:
      out << "random_holed(" << to_string(spec.kind) << ", n=" << spec.cells << ", seed=" << spec.seed << ")";
      break;
    case Family::RandomThick:
      out << "random_thick(" << to_string(spec.kind) << ", core=" << spec.cells << ", seed=" << spec.seed << ")";
      break;
    case Family::CompHex: out << "comp_hex(len=" << spec.length << ")"; break;
    case Family::CompTri: out << "comp_tri(pairs=" << spec.rows << ")"; break;
  }
  return out.str();
}

GridPolygon generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Corridor: return corridor(spec.kind, spec.width, spec.length);
    case Family::Honeycomb:
      require(spec.kind == GridKind::Hex, "honeycomb exists only on the hex grid");
      return honeycomb(spec.radius);
    case Family::RandomSimple: return random_simple(spec.kind, spec.cells, spec.seed);
    case Family::RandomHoled: return random_holed(spec.kind, spec.cells, spec.seed);
    case Family::RandomThick: return random_thick(spec.kind, spec.cells, spec.seed);
    case Family::CompHex:
      require(spec.kind == GridKind::Hex, "comp_hex is a hex family");
      return comp_hex(spec.length);
    case Family::CompTri:
      require(spec.kind == GridKind::Tri, "comp_tri is a tri family");
      return comp_tri(spec.rows);
  }
  throw PolygonError("unknown family");
}

void enumerate_polyforms(GridKind kind, int max_cells, const std::function<bool(const GridPolygon&)>& visit) {
  if (max_cells < 1) return;
  std::set<std::vector<Cell>> level{canonical_form(kind, {{0, 0}})};
  for (int size = 1; size <= max_cells; ++size) {
    for (const auto& cells : level) {
      if (!visit(GridPolygon(kind, cells))) return;
    }
    if (size == max_cells) break;
    std::set<std::vector<Cell>> next;
    for (const auto& cells : level) {
      const CellSet members(cells.begin(), cells.end());
      CellSet frontier;
      for (Cell c : cells) {
        for (Cell n : neighbors(c, kind)) {
          if (!members.contains(n)) frontier.insert(n);
        }
      }
      for (Cell n : frontier) {
        auto grown = cells;
        grown.push_back(n);
        next.insert(canonical_form(kind, grown));
      }
    }
    level = std::move(next);
  }
}

}  // namespace cellcover
