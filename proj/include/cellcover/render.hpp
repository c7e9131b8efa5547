#pragma once

#include <string>

#include "cellcover/explore.hpp"
#include "cellcover/polygon.hpp"

namespace cellcover {

class RenderError : public GridError {
 public:
  using GridError::GridError;
};

/// Coarse text sketch, one text row per grid row. Hex rows are indented by
/// half a cell per row; triangle rows are printed top row first with '^' and
/// 'v' for the two orientations. With a trace, the start is 'S' and split
/// cells are '*'.
std::string render_ascii(const GridPolygon& p, const ExplorationTrace* trace = nullptr);

/// SVG with unit edge length: pointy-top hexagons or unit triangles, the walk
/// as a polyline through cell centers, split cells and the start highlighted.
/// Output depends only on the inputs.
std::string render_svg(const GridPolygon& p, const ExplorationTrace* trace = nullptr);

}  // namespace cellcover
