#include "cellcover/oracle.hpp"

#include <algorithm>
#include <boost/functional/hash.hpp>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

namespace cellcover {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

std::vector<int> bfs_parents(const GridPolygon& p, std::size_t from) {
  std::vector<int> parent(p.size(), -1);
  parent[from] = static_cast<int>(from);
  std::deque<std::size_t> queue{from};
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (int n : p.neighbor_indices(u)) {
      if (n >= 0 && parent[static_cast<std::size_t>(n)] < 0) {
        parent[static_cast<std::size_t>(n)] = static_cast<int>(u);
        queue.push_back(static_cast<std::size_t>(n));
      }
    }
  }
  return parent;
}

// Appends the cells after `from` on a shortest path to `to`.
void append_path(const GridPolygon& p, std::size_t from, std::size_t to, std::vector<Cell>& walk) {
  const auto parent = bfs_parents(p, to);
  for (auto v = from; v != to;) {
    v = static_cast<std::size_t>(parent[v]);
    walk.push_back(p.cells()[v]);
  }
}

// Iterative deepening over the closed-walk length. A failed bound is a proof
// that no shorter covering walk exists, so the first length that succeeds is
// optimal as long as the node budget was never exhausted on the way.
class ExcessSearch {
 public:
  ExcessSearch(const GridPolygon& p, const DistanceTable& dist, std::size_t start, std::uint64_t budget)
      : p_(p), dist_(dist), start_(start), budget_(budget), visited_(p.size(), 0) {}

  // Walk of exactly `length` steps or fewer, or nullopt. Check aborted().
  std::optional<std::vector<std::size_t>> run(int length) {
    std::fill(visited_.begin(), visited_.end(), 0);
    visited_[start_] = 1;
    // Visited bits, then the current position in the last word.
    key_.assign(p_.size() / 64 + 2, 0);
    flip(start_);
    unvisited_ = p_.size() - 1;
    path_.assign(1, start_);
    if (extend(start_, length)) return path_;
    return std::nullopt;
  }

  bool aborted() const { return aborted_; }

 private:
  using Key = std::vector<std::uint64_t>;

  void flip(std::size_t v) { key_[v / 64] ^= std::uint64_t{1} << (v % 64); }

  int lower_bound(std::size_t pos) const {
    if (unvisited_ == 0) return dist_(pos, start_);
    int near = std::numeric_limits<int>::max(), home = near;
    for (std::size_t u = 0; u < p_.size(); ++u) {
      if (visited_[u]) continue;
      near = std::min(near, dist_(pos, u));
      home = std::min(home, dist_(u, start_));
    }
    return near + static_cast<int>(unvisited_) - 1 + home;
  }

  int fresh_degree(std::size_t u) const {
    int d = 0;
    for (int n : p_.neighbor_indices(u)) d += n >= 0 && !visited_[static_cast<std::size_t>(n)] ? 1 : 0;
    return d;
  }

  bool extend(std::size_t pos, int remaining) {
    if (unvisited_ == 0 && pos == start_) return true;
    if (lower_bound(pos) > remaining) return false;
    key_.back() = pos;
    if (auto it = failed_.find(key_); it != failed_.end() && it->second >= remaining) return false;
    const Key key = key_;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    // Unvisited neighbors first, fewest onward options first; then revisits.
    std::vector<std::pair<int, std::size_t>> options;
    for (int n : p_.neighbor_indices(pos)) {
      if (n < 0) continue;
      const auto v = static_cast<std::size_t>(n);
      options.emplace_back(visited_[v] ? 100 : fresh_degree(v), v);
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [rank, v] : options) {
      const bool fresh = !visited_[v];
      if (fresh) {
        visited_[v] = 1;
        flip(v);
        --unvisited_;
      }
      path_.push_back(v);
      if (extend(v, remaining - 1)) return true;
      path_.pop_back();
      if (fresh) {
        visited_[v] = 0;
        flip(v);
        ++unvisited_;
      }
      if (aborted_) return false;
    }
    int& known = failed_[key];
    known = std::max(known, remaining);
    return false;
  }

  const GridPolygon& p_;
  const DistanceTable& dist_;
  std::size_t start_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<char> visited_;
  Key key_;
  std::size_t unvisited_ = 0;
  std::vector<std::size_t> path_;
  std::unordered_map<Key, int, boost::hash<Key>> failed_;
};

}  // namespace

DistanceTable::DistanceTable(const GridPolygon& p) : n_(p.size()), dist_(n_ * n_, kUnreached) {
  for (std::size_t s = 0; s < n_; ++s) {
    std::uint16_t* row = dist_.data() + s * n_;
    row[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (int n : p.neighbor_indices(u)) {
        if (n >= 0 && row[n] == kUnreached) {
          row[n] = static_cast<std::uint16_t>(row[u] + 1);
          queue.push_back(static_cast<std::size_t>(n));
        }
      }
    }
  }
}

int DistanceTable::diameter() const {
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

DistanceTable all_pairs_distances(const GridPolygon& p) { return DistanceTable(p); }

TourSolution optimal_tour(const GridPolygon& p, Cell start, const TourOptions& options) {
  const auto s_index = p.index_of(start);
  if (!s_index) throw OracleError("start cell is not part of the polygon");
  if (options.exact_ceiling > kMaxExactCeiling) {
    throw OracleError("exact ceiling " + std::to_string(options.exact_ceiling) + " exceeds the supported maximum " +
                      std::to_string(kMaxExactCeiling));
  }
  const std::size_t n = p.size();
  if (static_cast<long>(n) > options.exact_ceiling) {
    const std::string above = "polygon has " + std::to_string(n) + " cells, above the exact-solver ceiling of " +
                              std::to_string(options.exact_ceiling);
    if (options.search_budget == 0) throw OracleError(above + " and the bounded search is disabled");
    if (auto found = bounded_excess_tour(p, start, options.max_excess, options.search_budget)) return *found;
    throw OracleError(above + ", and the bounded search found no proven optimum within excess " +
                      std::to_string(options.max_excess) + " and " + std::to_string(options.search_budget) +
                      " nodes");
  }
  if (n == 1) return {0, {start}, TourSolution::Method::HeldKarp};

  const DistanceTable dist(p);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != *s_index) others.push_back(i);
  }
  const std::size_t m = others.size();
  const std::size_t full = (std::size_t{1} << m) - 1;
  constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();
  std::vector<std::uint16_t> dp((full + 1) * m, kInf);
  auto at = [&](std::size_t mask, std::size_t j) -> std::uint16_t& { return dp[mask * m + j]; };

  for (std::size_t j = 0; j < m; ++j) at(std::size_t{1} << j, j) = static_cast<std::uint16_t>(dist(*s_index, others[j]));
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint16_t here = at(mask, j);
      if (here == kInf || !(mask >> j & 1)) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        const auto cand = static_cast<std::uint16_t>(here + dist(others[j], others[k]));
        std::uint16_t& slot = at(mask | (std::size_t{1} << k), k);
        if (cand < slot) slot = cand;
      }
    }
  }

  std::size_t best_end = 0;
  int best = std::numeric_limits<int>::max();
  for (std::size_t j = 0; j < m; ++j) {
    const int total = at(full, j) + dist(others[j], *s_index);
    if (total < best) {
      best = total;
      best_end = j;
    }
  }

  std::vector<std::size_t> order;
  std::size_t mask = full, j = best_end;
  while (true) {
    order.push_back(others[j]);
    const std::size_t prev_mask = mask & ~(std::size_t{1} << j);
    if (prev_mask == 0) break;
    for (std::size_t k = 0; k < m; ++k) {
      if ((prev_mask >> k & 1) && at(prev_mask, k) + dist(others[k], others[j]) == at(mask, j)) {
        mask = prev_mask;
        j = k;
        break;
      }
    }
  }
  std::reverse(order.begin(), order.end());

  TourSolution solution;
  solution.length = best;
  solution.walk.push_back(start);
  std::size_t at_index = *s_index;
  for (std::size_t v : order) {
    append_path(p, at_index, v, solution.walk);
    at_index = v;
  }
  append_path(p, at_index, *s_index, solution.walk);
  return solution;
}

std::optional<TourSolution> bounded_excess_tour(const GridPolygon& p, Cell start, int max_excess,
                                               std::uint64_t budget) {
  const auto s_index = p.index_of(start);
  if (!s_index) throw OracleError("start cell is not part of the polygon");
  if (p.size() > kMaxSearchCells) {
    throw OracleError("bounded search supports at most " + std::to_string(kMaxSearchCells) + " cells");
  }
  const auto n = static_cast<int>(p.size());
  if (n == 1) return TourSolution{0, {start}, TourSolution::Method::BoundedSearch};
  const DistanceTable dist(p);
  ExcessSearch search(p, dist, *s_index, budget);
  // Two cells need a there-and-back walk of length 2 = C.
  for (int length = n; length <= n + max_excess; ++length) {
    auto found = search.run(length);
    if (search.aborted()) return std::nullopt;
    if (!found) continue;
    TourSolution solution;
    solution.method = TourSolution::Method::BoundedSearch;
    for (auto i : *found) solution.walk.push_back(p.cells()[i]);
    solution.length = static_cast<std::int64_t>(solution.walk.size()) - 1;
    return solution;
  }
  return std::nullopt;
}

std::optional<std::vector<Cell>> hamiltonian_cycle(const GridPolygon& p, Cell start, std::uint64_t budget) {
  if (p.size() > kMaxSearchCells) return std::nullopt;
  auto found = bounded_excess_tour(p, start, 0, budget);
  if (!found || found->length != static_cast<std::int64_t>(p.size())) return std::nullopt;
  return std::move(found->walk);
}

Ratio competitive_ratio(const ExplorationTrace& trace, const TourSolution& tour) {
  if (trace.walk.empty() || tour.walk.empty() || trace.walk.front() != tour.walk.front()) {
    throw OracleError("trace and tour do not share a start cell");
  }
  if (tour.length == 0) {
    if (trace.steps() != 0) throw OracleError("zero-length optimum with a nonzero trace");
    return Ratio(1);
  }
  return Ratio(trace.steps(), tour.length);
}

}  // namespace cellcover
