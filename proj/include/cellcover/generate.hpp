#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cellcover/polygon.hpp"

namespace cellcover {

enum class Family {
  Corridor,      // straight corridor of `width` rows and `length` cells per row
  Honeycomb,     // hexagon of hex cells with the given `radius` (hex only)
  RandomSimple,  // random growth to `cells` cells, never creating a hole
  RandomHoled,   // random growth followed by carving interior cells (holes likely)
  RandomThick,   // random simple core widened by one ring, holes filled
  CompHex,       // width-3 hex corridor realizing the 4/3 competitive factor
  CompTri,       // stacked triangle rows realizing the 4/3 competitive factor
};

struct FamilySpec {
  Family family = Family::Corridor;
  GridKind kind = GridKind::Hex;
  int width = 1;
  int length = 1;
  int radius = 1;
  int cells = 1;
  int rows = 2;
  std::uint64_t seed = 0;
};

std::string describe(const FamilySpec& spec);

/// Deterministic for a given spec. Throws PolygonError on an infeasible spec.
GridPolygon generate(const FamilySpec& spec);

GridPolygon corridor(GridKind kind, int width, int length);
GridPolygon honeycomb(int radius);
GridPolygon random_simple(GridKind kind, int cells, std::uint64_t seed);
GridPolygon random_holed(GridKind kind, int cells, std::uint64_t seed);

/// A random simple polygon of `core_cells` cells plus every cell sharing an
/// edge or a corner with it; enclosed gaps are filled. Mostly free of narrow
/// passages.
GridPolygon random_thick(GridKind kind, int core_cells, std::uint64_t seed);

/// Width-3 hex parallelogram of `length` + 1 rows of three cells closed off
/// by two rows of two cells; 3 * length + 7 cells.
GridPolygon comp_hex(int length);

/// 2n + 2 triangle rows: a 5-cell first and last row with 2n middle rows.
GridPolygon comp_tri(int middle_pairs);

/// The same polygon moved to a canonical position and orientation: minimal
/// sorted cell list over all lattice symmetries (12 on both grids) and
/// parity-preserving translations.
std::vector<Cell> canonical_form(GridKind kind, const std::vector<Cell>& cells);

/// Lattice symmetry `index` in [0, 12) applied to a cell set.
std::vector<Cell> apply_symmetry(GridKind kind, const std::vector<Cell>& cells, int index);

/// Every polygon with 1..max_cells cells, one representative per symmetry
/// class, visited in order of size. Return false from the callback to stop.
void enumerate_polyforms(GridKind kind, int max_cells, const std::function<bool(const GridPolygon&)>& visit);

}  // namespace cellcover
