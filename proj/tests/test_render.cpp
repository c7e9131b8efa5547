#include <doctest.h>

#include <regex>

#include "cellcover/generate.hpp"
#include "cellcover/render.hpp"

using namespace cellcover;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t polyline_points(const std::string& svg) {
  const std::regex re("<polyline class=\"walk\" points=\"([^\"]*)\"");
  std::smatch m;
  if (!std::regex_search(svg, m, re)) return 0;
  const std::string pts = m[1];
  return static_cast<std::size_t>(std::count(pts.begin(), pts.end(), ' ')) + 1;
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("ascii sketches") {
    CHECK(render_ascii(honeycomb(1)) == " o o\no o o\n o o\n");
    const auto t = corridor(GridKind::Tri, 1, 4);
    const auto trace = explore_smartdfs(t, default_start(t));
    CHECK(render_ascii(t, &trace) == "Sv^v\n");
  }

  TEST_CASE("svg has one shape per cell and one segment per step") {
    const auto honey = render_svg(honeycomb(1));
    CHECK(count(honey, "<polygon ") == 7);
    CHECK(count(honey, "<polyline") == 0);
    for (GridKind kind : {GridKind::Hex, GridKind::Tri}) {
      const auto p = corridor(kind, 1, 6);
      const auto trace = explore_smartdfs(p, default_start(p));
      const auto svg = render_svg(p, &trace);
      CHECK(count(svg, "<polygon ") == 6);
      CHECK(polyline_points(svg) == 2 * (6 - 1) + 1);
      CHECK(svg.find("-0.000") == std::string::npos);
    }
  }

  TEST_CASE("svg output is stable") {
    const auto p = random_simple(GridKind::Tri, 20, 3);
    const auto trace = explore_smartdfs(p, default_start(p));
    CHECK(render_svg(p, &trace) == render_svg(p, &trace));
    CHECK(render_svg(p) != render_svg(p, &trace));
  }

  TEST_CASE("a trace from another polygon is rejected") {
    const auto p = corridor(GridKind::Hex, 1, 4);
    const auto q = corridor(GridKind::Tri, 1, 4);
    const auto trace = explore_smartdfs(q, default_start(q));
    CHECK_THROWS_AS(render_svg(p, &trace), RenderError);
    CHECK_THROWS_AS(render_ascii(p, &trace), RenderError);
    const auto longer = corridor(GridKind::Hex, 1, 6);
    const auto far = explore_smartdfs(longer, default_start(longer));
    CHECK_THROWS_WITH_AS(render_svg(p, &far), doctest::Contains("trace does not match"), RenderError);
  }
}
