#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "cellcover/explore.hpp"
#include "cellcover/polygon.hpp"

namespace cellcover {

using Ratio = boost::rational<std::int64_t>;

class OracleError : public GridError {
 public:
  using GridError::GridError;
};

/// Exact BFS distances between all pairs of cells, indexed like
/// GridPolygon::cells().
class DistanceTable {
 public:
  explicit DistanceTable(const GridPolygon& p);

  std::size_t size() const { return n_; }
  int operator()(std::size_t a, std::size_t b) const { return dist_[a * n_ + b]; }
  int diameter() const;

 private:
  std::size_t n_;
  std::vector<std::uint16_t> dist_;
};

DistanceTable all_pairs_distances(const GridPolygon& p);

struct TourOptions {
  /// Largest polygon the Held-Karp solver accepts.
  int exact_ceiling = 18;
  /// Node budget of the bounded-excess search used above the ceiling; 0
  /// disables it.
  std::uint64_t search_budget = 0;
  /// Longest walk the bounded search tries, as steps beyond C.
  int max_excess = 8;
};

/// Hard upper limit for TourOptions::exact_ceiling (table memory grows as
/// 2^C * C).
inline constexpr int kMaxExactCeiling = 22;

/// Size limit of the bounded-excess search.
inline constexpr std::size_t kMaxSearchCells = 1024;

/// Minimum closed walk from `start` that visits every cell.
struct TourSolution {
  std::int64_t length = 0;
  std::vector<Cell> walk;
  enum class Method { HeldKarp, BoundedSearch } method = Method::HeldKarp;
};

/// Held-Karp over the metric closure up to options.exact_ceiling cells, the
/// bounded-excess search above it. Throws OracleError when neither yields a
/// proven optimum.
TourSolution optimal_tour(const GridPolygon& p, Cell start, const TourOptions& options = {});

/// Exact optimum found by trying walk lengths C, C + 1, ..., C + max_excess in
/// turn with depth-first search, distance pruning and a memo of refuted
/// (position, visited set) states. Every shorter length is refuted
/// exhaustively, so a returned walk is optimal. Returns nullopt when no walk
/// fits in max_excess or the node budget runs out first. At most
/// kMaxSearchCells cells.
std::optional<TourSolution> bounded_excess_tour(const GridPolygon& p, Cell start, int max_excess,
                                               std::uint64_t budget);

/// A closed walk through every cell exactly once (length C, hence optimal),
/// if the bounded search finds one within `budget` nodes.
std::optional<std::vector<Cell>> hamiltonian_cycle(const GridPolygon& p, Cell start, std::uint64_t budget);

/// Exact S / S_opt. Throws OracleError if the walks disagree on start.
Ratio competitive_ratio(const ExplorationTrace& trace, const TourSolution& tour);

}  // namespace cellcover
