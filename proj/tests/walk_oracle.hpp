#pragma once

// Slow reference for the shortest closed walk that covers a polygon. It
// shares no code with the library's tour solvers: it tries every walk length
// from C upwards and enumerates walks step by step, remembering only which
// (position, visited set, steps left) states already failed.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cellcover/polygon.hpp"

namespace walk_oracle {

class Search {
 public:
  Search(const cellcover::GridPolygon& p, cellcover::Cell start) {
    const auto& cells = p.cells();
    if (cells.size() > 20) throw std::invalid_argument("walk oracle is meant for tiny polygons");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::vector<int> adj;
      for (cellcover::Cell n : cellcover::neighbors(cells[i], p.kind())) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
          if (cells[j] == n) adj.push_back(static_cast<int>(j));
        }
      }
      adjacency_.push_back(adj);
      if (cells[i] == start) start_ = static_cast<int>(i);
    }
    if (start_ < 0) throw std::invalid_argument("start not in polygon");
    full_ = (1u << cells.size()) - 1;
  }

  int shortest() {
    const int n = static_cast<int>(adjacency_.size());
    if (n == 1) return 0;
    for (int length = n; length <= 2 * n - 2; ++length) {
      if (walk(start_, 1u << start_, length)) return length;
    }
    throw std::logic_error("no covering walk within 2C - 2 steps");
  }

 private:
  bool walk(int at, std::uint32_t seen, int left) {
    if (seen == full_ && at == start_) return true;
    if (left == 0) return false;
    if (failed_.contains({at, seen, left})) return false;
    for (int next : adjacency_[static_cast<std::size_t>(at)]) {
      if (walk(next, seen | (1u << next), left - 1)) return true;
    }
    failed_.insert({at, seen, left});
    return false;
  }

  std::vector<std::vector<int>> adjacency_;
  int start_ = -1;
  std::uint32_t full_ = 0;
  std::set<std::tuple<int, std::uint32_t, int>> failed_;
};

inline int shortest_covering_walk(const cellcover::GridPolygon& p, cellcover::Cell start) {
  return Search(p, start).shortest();
}

}  // namespace walk_oracle
