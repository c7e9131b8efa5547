#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "cellcover/grid.hpp"

using namespace cellcover;

namespace {

std::vector<Cell> as_vector(const CellRing& ring) { return {ring.begin(), ring.end()}; }

// Corners of a triangle as points (X, Y) of the triangular point lattice,
// written directly from the row layout: an upward cell spans columns x - 1 to
// x + 1 at height y with its apex at (x, y + 1); a downward cell is the mirror
// image one row up.
std::set<std::pair<int, int>> tri_corners(Cell c) {
  if ((c.x + c.y) % 2 == 0) return {{c.x - 1, c.y}, {c.x + 1, c.y}, {c.x, c.y + 1}};
  return {{c.x - 1, c.y + 1}, {c.x + 1, c.y + 1}, {c.x, c.y}};
}

int shared_corners(Cell a, Cell b) {
  const auto ca = tri_corners(a), cb = tri_corners(b);
  return static_cast<int>(std::count_if(ca.begin(), ca.end(), [&](const auto& v) { return cb.contains(v); }));
}

std::vector<Cell> window(Cell c, int r) {
  std::vector<Cell> out;
  for (int dx = -r; dx <= r; ++dx) {
    for (int dy = -r; dy <= r; ++dy) {
      if (dx || dy) out.push_back({c.x + dx, c.y + dy});
    }
  }
  return out;
}

// Hex distance in cube coordinates.
int hex_distance(Cell a, Cell b) {
  const int dq = a.x - b.x, dr = a.y - b.y;
  return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("hex neighbors in clockwise order") {
    CHECK(as_vector(neighbors({0, 0}, GridKind::Hex)) ==
          std::vector<Cell>{{1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}});
  }

  TEST_CASE("tri neighbors depend on orientation") {
    CHECK(points_up({0, 0}));
    CHECK_FALSE(points_up({1, 0}));
    CHECK(as_vector(neighbors({0, 0}, GridKind::Tri)) == std::vector<Cell>{{1, 0}, {0, -1}, {-1, 0}});
    CHECK(as_vector(neighbors({1, 0}, GridKind::Tri)) == std::vector<Cell>{{1, 1}, {2, 0}, {0, 0}});
  }

  TEST_CASE("hex neighbors are exactly the cells at distance one") {
    for (Cell c : {Cell{0, 0}, Cell{3, -7}, Cell{-5, 2}}) {
      std::set<Cell> expected;
      for (Cell n : window(c, 2)) {
        if (hex_distance(c, n) == 1) expected.insert(n);
      }
      const auto ring = as_vector(neighbors(c, GridKind::Hex));
      CHECK(std::set<Cell>(ring.begin(), ring.end()) == expected);
      CHECK(ring.size() == 6);
    }
  }

  TEST_CASE("tri neighbors share two corners, touching cells share one") {
    for (int x = -3; x <= 3; ++x) {
      for (int y = -3; y <= 3; ++y) {
        const Cell c{x, y};
        std::set<Cell> by_edge, by_corner;
        for (Cell n : window(c, 3)) {
          const int k = shared_corners(c, n);
          if (k == 2) by_edge.insert(n);
          if (k == 1) by_corner.insert(n);
        }
        const auto ring = as_vector(neighbors(c, GridKind::Tri));
        CHECK(std::set<Cell>(ring.begin(), ring.end()) == by_edge);
        const auto t = touching(c, GridKind::Tri);
        CHECK(std::set<Cell>(t.begin(), t.end()) == by_corner);
        CHECK(t.size() == 9);
      }
    }
  }

  TEST_CASE("hex cells have no touching cells") { CHECK(touching({4, 1}, GridKind::Hex).empty()); }

  TEST_CASE("adjacency is symmetric and tri orientation flips across edges") {
    for (GridKind kind : {GridKind::Hex, GridKind::Tri}) {
      for (int x = -4; x <= 4; ++x) {
        for (int y = -4; y <= 4; ++y) {
          const Cell c{x, y};
          for (Cell n : neighbors(c, kind)) {
            CHECK(adjacent(n, c, kind));
            CHECK(neighbors(n, kind).find(c) >= 0);
            if (kind == GridKind::Tri) CHECK(points_up(n) != points_up(c));
          }
          for (Cell t : touching(c, kind)) CHECK_FALSE(adjacent(c, t, kind));
        }
      }
    }
  }

  TEST_CASE("clockwise scan starts at the arrival cell") {
    CHECK(as_vector(clockwise_scan({0, 0}, {-1, 0}, GridKind::Hex)) ==
          std::vector<Cell>{{-1, 0}, {0, -1}, {1, -1}, {1, 0}, {0, 1}, {-1, 1}});
    CHECK(as_vector(clockwise_scan({0, 0}, {0, -1}, GridKind::Tri)) == std::vector<Cell>{{0, -1}, {-1, 0}, {1, 0}});
    CHECK_THROWS_AS(clockwise_scan({0, 0}, {2, 0}, GridKind::Hex), GridError);
  }

  TEST_CASE("next_clockwise is a single orbit") {
    for (GridKind kind : {GridKind::Hex, GridKind::Tri}) {
      for (Cell c : {Cell{0, 0}, Cell{1, 0}, Cell{-2, 5}}) {
        const Cell first = neighbors(c, kind)[0];
        Cell at = first;
        int steps = 0;
        do {
          at = next_clockwise(c, at, kind);
          ++steps;
        } while (at != first && steps < 10);
        CHECK(steps == degree(kind));
      }
    }
  }

  TEST_CASE("moves reverse by swapping endpoints") {
    const Move m{{0, 0}, {1, 0}};
    CHECK(m.reversed() == Move{{1, 0}, {0, 0}});
    CHECK(m.reversed().reversed() == m);
  }

  TEST_CASE("coordinates beyond the limit are rejected") {
    CHECK_NOTHROW(check_coordinate_range({kCoordinateLimit, -kCoordinateLimit}));
    CHECK_THROWS_AS(check_coordinate_range({kCoordinateLimit + 1, 0}), CoordinateError);
    CHECK_THROWS_AS(check_coordinate_range({0, -kCoordinateLimit - 1}), CoordinateError);
  }

  TEST_CASE("grid kind names round-trip") {
    CHECK(parse_grid_kind(to_string(GridKind::Hex)) == GridKind::Hex);
    CHECK(parse_grid_kind(to_string(GridKind::Tri)) == GridKind::Tri);
    CHECK_THROWS_AS(parse_grid_kind("square"), GridError);
  }
}
