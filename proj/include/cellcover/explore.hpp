#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cellcover/polygon.hpp"

namespace cellcover {

class ExploreError : public GridError {
 public:
  using GridError::GridError;
};

/// How an unvisited component relates to the layer in which the split
/// occurred: completely (I), not (II) or partially (III) surrounded by the
/// visited part of that layer.
enum class ComponentType { I, II, III };

std::string_view to_string(ComponentType type);
ComponentType parse_component_type(std::string_view text);

struct SplitComponent {
  CellSet cells;
  ComponentType type = ComponentType::II;
};

/// Recorded whenever the first visit of a cell disconnects the unvisited
/// region it belonged to.
struct SplitEvent {
  Cell at;
  int layer = 0;
  std::size_t step = 0;  // walk index of the first visit of `at`
  std::vector<SplitComponent> components;  // in left-hand encounter order
  std::vector<std::size_t> order;          // visiting order, indices into components
};

struct ExplorationTrace {
  GridKind kind = GridKind::Hex;
  std::vector<Cell> walk;  // closed: walk.front() == walk.back() == start
  std::vector<SplitEvent> events;
  std::map<Cell, int> first_visit_layer;  // SmartDFS only

  std::int64_t steps() const { return walk.empty() ? 0 : static_cast<std::int64_t>(walk.size()) - 1; }
  Cell start() const { return walk.front(); }
};

/// Lexicographically smallest layer-1 cell.
Cell default_start(const GridPolygon& p);

/// The cell treated as "behind" the agent at the start: the first neighbor in
/// canonical order that is not part of the polygon, or the first neighbor if
/// the start is an interior cell.
Cell start_back_cell(const GridPolygon& p, Cell start);

/// Depth-first exploration with physical backtracking; works on polygons with
/// holes and always takes 2C - 2 steps.
ExplorationTrace explore_dfs(const GridPolygon& p, Cell start);

/// SmartDFS: layer-wise left-hand exploration with shortest relocation paths
/// through visited cells and split-cell component ordering. Requires a simple
/// polygon and a layer-1 start cell.
ExplorationTrace explore_smartdfs(const GridPolygon& p, Cell start);

/// Unvisited components adjacent to c once c is visited, in the clockwise
/// order their first cell appears around c. More than one means c splits the
/// unvisited region it belonged to.
std::vector<CellSet> split_components(const GridPolygon& p, const CellSet& visited, Cell c);

ComponentType classify_component(const GridPolygon& p, const CellSet& component, int layer,
                                 const CellSet& visited, const LayerMap& layer_map, Cell c);

/// Visiting order for components given in left-hand encounter order: a type
/// III component goes last, others keep their order; without a type III the
/// first component is moved to the end. Throws ExploreError on more than one
/// type III component.
std::vector<std::size_t> choose_component_order(std::span<const ComponentType> types);

/// Shortest path from a to b inside `cells` (inclusive of both ends). Ties are
/// broken by canonical neighbor order. Throws ExploreError if unreachable.
std::vector<Cell> shortest_path_over(GridKind kind, const CellSet& cells, Cell a, Cell b);

/// Trace dump: header lines, then one `step <i> <from> <to>` line per move
/// and one `split ...` line per split event.
std::string serialize_trace(const ExplorationTrace& trace);
ExplorationTrace parse_trace(std::string_view text);

/// Throws ExploreError describing the first violated trace invariant
/// (adjacency, membership, coverage, closedness).
void validate_trace(const GridPolygon& p, const ExplorationTrace& trace);

}  // namespace cellcover
