#include "cellcover/explore.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cellcover {

namespace {

std::string describe(Cell c) { return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")"; }

std::size_t require_index(const GridPolygon& p, Cell c, const char* what) {
  if (auto i = p.index_of(c)) return *i;
  throw ExploreError(std::string(what) + " " + describe(c) + " is not part of the polygon");
}

struct Frame {
  int base;
  std::vector<int> order;
  std::size_t next = 0;
};

// Shared machinery of both strategies, on polygon indices.
class Explorer {
 public:
  Explorer(const GridPolygon& p, Cell start) : p_(p), visited_(p.size(), 0) {
    start_ = static_cast<int>(require_index(p, start, "start cell"));
  }

  ExplorationTrace run_dfs() {
    ExplorationTrace trace;
    trace.kind = p_.kind();
    visit(start_, trace);
    std::vector<Frame> stack;
    stack.push_back({start_, scan(start_, start_back_cell(p_, cell(start_)))});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const int next = next_unvisited(top);
      if (next < 0) {
        stack.pop_back();
        if (!stack.empty()) trace.walk.push_back(cell(stack.back().base));
        continue;
      }
      const int base = top.base;
      visit(next, trace);
      stack.push_back({next, scan(next, cell(base))});
    }
    return trace;
  }

  ExplorationTrace run_smart() {
    ExplorationTrace trace;
    trace.kind = p_.kind();
    layer_map_ = layers(p_);
    layer_.resize(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i) layer_[i] = layer_map_.at(cell(static_cast<int>(i)));

    visit(start_, trace);
    position_ = start_;
    std::vector<Frame> stack;
    stack.push_back({start_, smart_order(start_, start_back_cell(p_, cell(start_)), trace)});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const int next = next_unvisited(top);
      if (next < 0) {
        stack.pop_back();
        continue;
      }
      const int base = top.base;
      walk_to(base, trace);
      visit(next, trace);
      position_ = next;
      stack.push_back({next, smart_order(next, cell(base), trace)});
    }
    walk_to(start_, trace);
    return trace;
  }

 private:
  Cell cell(int i) const { return p_.cells()[static_cast<std::size_t>(i)]; }

  void visit(int i, ExplorationTrace& trace) {
    visited_[static_cast<std::size_t>(i)] = 1;
    trace.walk.push_back(cell(i));
    if (!layer_.empty()) trace.first_visit_layer.emplace(cell(i), layer_[static_cast<std::size_t>(i)]);
  }

  int next_unvisited(Frame& f) const {
    while (f.next < f.order.size()) {
      const int n = f.order[f.next++];
      if (!visited_[static_cast<std::size_t>(n)]) return n;
    }
    return -1;
  }

  // Free neighbors of i, clockwise from the cell behind the agent.
  std::vector<int> scan(int i, Cell behind) const {
    const CellRing ring = neighbors(cell(i), p_.kind());
    const auto idx = p_.neighbor_indices(static_cast<std::size_t>(i));
    const int first = ring.find(behind);
    std::vector<int> out;
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const int n = idx[(static_cast<std::size_t>(first) + k) % ring.size()];
      if (n >= 0) out.push_back(n);
    }
    return out;
  }

  // Relocate along a shortest path through visited cells.
  void walk_to(int target, ExplorationTrace& trace) {
    if (position_ == target) return;
    std::vector<int> parent(p_.size(), -1);
    std::deque<int> queue{position_};
    parent[static_cast<std::size_t>(position_)] = position_;
    while (!queue.empty() && parent[static_cast<std::size_t>(target)] < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (int n : p_.neighbor_indices(static_cast<std::size_t>(u))) {
        if (n >= 0 && visited_[static_cast<std::size_t>(n)] && parent[static_cast<std::size_t>(n)] < 0) {
          parent[static_cast<std::size_t>(n)] = u;
          queue.push_back(n);
        }
      }
    }
    if (parent[static_cast<std::size_t>(target)] < 0) {
      throw ExploreError("no path through visited cells from " + describe(cell(position_)) + " to " +
                         describe(cell(target)));
    }
    std::vector<int> path;
    for (int v = target; v != position_; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    for (auto it = path.rbegin(); it != path.rend(); ++it) trace.walk.push_back(cell(*it));
    position_ = target;
  }

  std::vector<int> smart_order(int i, Cell behind, ExplorationTrace& trace) {
    std::vector<int> order = scan(i, behind);

    // Label the unvisited components touching i, in encounter order.
    std::vector<int> component(p_.size(), -1);
    int count = 0;
    for (int n : order) {
      if (visited_[static_cast<std::size_t>(n)] || component[static_cast<std::size_t>(n)] >= 0) continue;
      std::deque<int> queue{n};
      component[static_cast<std::size_t>(n)] = count;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int m : p_.neighbor_indices(static_cast<std::size_t>(u))) {
          if (m >= 0 && !visited_[static_cast<std::size_t>(m)] && component[static_cast<std::size_t>(m)] < 0) {
            component[static_cast<std::size_t>(m)] = count;
            queue.push_back(m);
          }
        }
      }
      ++count;
    }
    if (count < 2) return order;

    SplitEvent event;
    event.at = cell(i);
    event.layer = layer_[static_cast<std::size_t>(i)];
    event.step = trace.walk.size() - 1;
    event.components.resize(static_cast<std::size_t>(count));
    for (std::size_t j = 0; j < p_.size(); ++j) {
      if (component[j] >= 0) event.components[static_cast<std::size_t>(component[j])].cells.insert(p_.cells()[j]);
    }
    const CellSet visited = visited_set();
    std::vector<ComponentType> types;
    for (auto& k : event.components) {
      k.type = classify_component(p_, k.cells, event.layer, visited, layer_map_, event.at);
      types.push_back(k.type);
    }
    try {
      event.order = choose_component_order(types);
    } catch (const ExploreError& e) {
      throw ExploreError(std::string(e.what()) + " at split cell " + describe(event.at));
    }

    std::vector<int> reordered;
    for (std::size_t k : event.order) {
      for (int n : order) {
        if (component[static_cast<std::size_t>(n)] == static_cast<int>(k)) reordered.push_back(n);
      }
    }
    trace.events.push_back(std::move(event));
    return reordered;
  }

  CellSet visited_set() const {
    CellSet out;
    for (std::size_t j = 0; j < p_.size(); ++j) {
      if (visited_[j]) out.insert(p_.cells()[j]);
    }
    return out;
  }

  const GridPolygon& p_;
  std::vector<char> visited_;
  int start_ = 0;
  int position_ = 0;
  LayerMap layer_map_;
  std::vector<int> layer_;
};

}  // namespace

std::string_view to_string(ComponentType type) {
  switch (type) {
    case ComponentType::I: return "I";
    case ComponentType::II: return "II";
    case ComponentType::III: return "III";
  }
  return "?";
}

ComponentType parse_component_type(std::string_view text) {
  if (text == "I") return ComponentType::I;
  if (text == "II") return ComponentType::II;
  if (text == "III") return ComponentType::III;
  throw ExploreError("unknown component type '" + std::string(text) + "'");
}

Cell default_start(const GridPolygon& p) {
  // The lexicographically smallest cell has a non-free neighbor on both grids.
  return p.cells().front();
}

Cell start_back_cell(const GridPolygon& p, Cell start) {
  const CellRing ring = neighbors(start, p.kind());
  for (Cell n : ring) {
    if (!p.contains(n)) return n;
  }
  return ring[0];
}

ExplorationTrace explore_dfs(const GridPolygon& p, Cell start) { return Explorer(p, start).run_dfs(); }

ExplorationTrace explore_smartdfs(const GridPolygon& p, Cell start) {
  require_index(p, start, "start cell");
  if (!is_simple(p)) throw ExploreError("polygon not simple");
  bool boundary = false;
  for (Cell n : neighbors(start, p.kind())) boundary = boundary || !p.contains(n);
  if (!boundary) throw ExploreError("start cell " + describe(start) + " is not a boundary (layer-1) cell");
  return Explorer(p, start).run_smart();
}

std::vector<CellSet> split_components(const GridPolygon& p, const CellSet& visited, Cell c) {
  std::vector<CellSet> out;
  CellSet seen;
  for (Cell n : neighbors(c, p.kind())) {
    if (!p.contains(n) || visited.contains(n) || n == c || seen.contains(n)) continue;
    CellSet part;
    std::deque<Cell> queue{n};
    seen.insert(n);
    while (!queue.empty()) {
      const Cell u = queue.front();
      queue.pop_front();
      part.insert(u);
      for (Cell m : neighbors(u, p.kind())) {
        if (p.contains(m) && m != c && !visited.contains(m) && seen.insert(m).second) queue.push_back(m);
      }
    }
    out.push_back(std::move(part));
  }
  return out;
}

ComponentType classify_component(const GridPolygon& p, const CellSet& component, int layer,
                                 const CellSet& visited, const LayerMap& layer_map, Cell c) {
  const bool enclosed = std::all_of(component.begin(), component.end(),
                                    [&](Cell k) { return layer_map.at(k) > layer; });
  if (enclosed) return ComponentType::I;
  for (Cell k : component) {
    for (Cell n : neighbors(k, p.kind())) {
      if (n == c || !visited.contains(n)) continue;
      if (auto it = layer_map.find(n); it != layer_map.end() && it->second == layer) return ComponentType::III;
    }
  }
  return ComponentType::II;
}

std::vector<std::size_t> choose_component_order(std::span<const ComponentType> types) {
  std::vector<std::size_t> order;
  const auto partial = std::count(types.begin(), types.end(), ComponentType::III);
  if (partial > 1) throw ExploreError("more than one partially surrounded (type III) component");
  if (types.size() < 2) {
    for (std::size_t i = 0; i < types.size(); ++i) order.push_back(i);
    return order;
  }
  if (partial == 1) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < types.size(); ++i) {
      if (types[i] == ComponentType::III) {
        last = i;
      } else {
        order.push_back(i);
      }
    }
    order.push_back(last);
    return order;
  }
  for (std::size_t i = 1; i < types.size(); ++i) order.push_back(i);
  order.push_back(0);
  return order;
}

std::vector<Cell> shortest_path_over(GridKind kind, const CellSet& cells, Cell a, Cell b) {
  if (!cells.contains(a) || !cells.contains(b)) {
    throw ExploreError("shortest_path_over: endpoints must belong to the cell set");
  }
  std::map<Cell, Cell> parent{{a, a}};
  std::deque<Cell> queue{a};
  while (!queue.empty() && !parent.contains(b)) {
    const Cell u = queue.front();
    queue.pop_front();
    for (Cell n : neighbors(u, kind)) {
      if (cells.contains(n) && parent.emplace(n, u).second) queue.push_back(n);
    }
  }
  if (!parent.contains(b)) throw ExploreError("no path from " + describe(a) + " to " + describe(b));
  std::vector<Cell> path{b};
  while (path.back() != a) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

std::string serialize_trace(const ExplorationTrace& trace) {
  std::ostringstream out;
  out << "# cellcover trace v1\n";
  out << "grid " << to_string(trace.kind) << '\n';
  if (trace.walk.empty()) return out.str();
  out << "start " << trace.walk.front().x << ' ' << trace.walk.front().y << '\n';
  std::size_t next_event = 0;
  for (std::size_t i = 0; i + 1 <= trace.walk.size(); ++i) {
    if (i > 0) {
      const Cell a = trace.walk[i - 1], b = trace.walk[i];
      out << "step " << i << ' ' << a.x << ' ' << a.y << ' ' << b.x << ' ' << b.y << '\n';
    }
    while (next_event < trace.events.size() && trace.events[next_event].step == i) {
      const SplitEvent& e = trace.events[next_event++];
      out << "split " << e.step << ' ' << e.at.x << ' ' << e.at.y << ' ' << e.layer << ' ';
      for (std::size_t k = 0; k < e.components.size(); ++k) {
        out << (k ? "," : "") << to_string(e.components[k].type);
      }
      out << ' ';
      for (std::size_t k = 0; k < e.order.size(); ++k) out << (k ? "," : "") << e.order[k];
      out << '\n';
    }
  }
  return out.str();
}

ExplorationTrace parse_trace(std::string_view text) {
  ExplorationTrace trace;
  bool have_grid = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> ExploreError {
    return ExploreError("trace line " + std::to_string(line_no) + ": " + what);
  };
  auto split_list = [](const std::string& s) {
    std::vector<std::string> parts;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "grid") {
      std::string kind;
      ls >> kind;
      trace.kind = parse_grid_kind(kind);
      have_grid = true;
    } else if (tag == "start") {
      Cell s;
      if (!(ls >> s.x >> s.y)) throw fail("malformed start line");
      trace.walk.assign(1, s);
    } else if (tag == "step") {
      std::size_t index = 0;
      Cell a, b;
      if (!(ls >> index >> a.x >> a.y >> b.x >> b.y)) throw fail("malformed step line");
      if (trace.walk.empty() || index != trace.walk.size() || trace.walk.back() != a) {
        throw fail("step does not continue the walk");
      }
      trace.walk.push_back(b);
    } else if (tag == "split") {
      SplitEvent e;
      std::string types, order;
      if (!(ls >> e.step >> e.at.x >> e.at.y >> e.layer >> types >> order)) throw fail("malformed split line");
      for (const auto& t : split_list(types)) e.components.push_back({{}, parse_component_type(t)});
      for (const auto& o : split_list(order)) e.order.push_back(std::stoul(o));
      trace.events.push_back(std::move(e));
    } else {
      throw fail("unknown record '" + tag + "'");
    }
  }
  if (!have_grid) throw ExploreError("trace has no grid line");
  if (trace.walk.empty()) throw ExploreError("trace has no start line");
  return trace;
}

void validate_trace(const GridPolygon& p, const ExplorationTrace& trace) {
  if (trace.kind != p.kind()) throw ExploreError("trace and polygon use different grid kinds");
  if (trace.walk.empty()) throw ExploreError("empty walk");
  if (trace.walk.front() != trace.walk.back()) throw ExploreError("walk is not closed");
  CellSet covered;
  for (std::size_t i = 0; i < trace.walk.size(); ++i) {
    const Cell c = trace.walk[i];
    if (!p.contains(c)) throw ExploreError("walk leaves the polygon at " + describe(c));
    covered.insert(c);
    if (i > 0 && !adjacent(trace.walk[i - 1], c, p.kind())) {
      throw ExploreError("step " + std::to_string(i) + " is not between adjacent cells");
    }
  }
  if (covered.size() != p.size()) {
    for (Cell c : p.cells()) {
      if (!covered.contains(c)) throw ExploreError("cell " + describe(c) + " is never visited");
    }
  }
}

}  // namespace cellcover
