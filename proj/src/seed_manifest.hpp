#pragma once

// Fixed random pools of the verification suites. Changing a value changes
// every report produced from it.

#include <cstdint>

namespace cellcover::manifest {

struct Pool {
  std::uint64_t base_seed;
  int count;      // instances per grid
  int min_cells;  // sizes cycle through [min_cells, max_cells]
  int max_cells;
};

inline constexpr Pool kDfs{0x1d5f'0000, 200, 2, 40};
inline constexpr Pool kSmartBound{0x2b0d'0000, 500, 2, 60};
inline constexpr Pool kOffsets{0x3a11'0000, 500, 4, 60};
inline constexpr Pool kDiameter{0x4d1a'0000, 300, 2, 50};
inline constexpr Pool kRatio{0x5c0b'0000, 300, 2, 14};
// Core sizes of the widened polygons in the perimeter-area pool.
inline constexpr Pool kThick{0x6e7a'0000, 200, 2, 16};

inline constexpr int kExhaustiveHex = 10;
inline constexpr int kExhaustiveTri = 12;

inline constexpr int kCorridorMaxTight = 20;
inline constexpr int kCorridorMaxNarrow = 15;
inline constexpr int kHexFamilyMax = 24;
inline constexpr int kTriFamilyMax = 4;

constexpr int cells_for(const Pool& pool, int i) {
  return pool.min_cells + i % (pool.max_cells - pool.min_cells + 1);
}

}  // namespace cellcover::manifest
