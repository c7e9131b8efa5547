#include <doctest.h>

#include <filesystem>

#include "cellcover/generate.hpp"
#include "cellcover/polygon_io.hpp"

using namespace cellcover;

TEST_SUITE("polygon_io") {
  TEST_CASE("parse small documents") {
    const auto one = parse_polygon("grid hex\n0 0\n");
    CHECK(one.kind() == GridKind::Hex);
    CHECK(one.size() == 1);
    const auto three = parse_polygon("grid tri\n0 0\n1 0\n0 -1\n");
    CHECK(three.kind() == GridKind::Tri);
    CHECK(metrics(three).area == 3);
  }

  TEST_CASE("comments, blank lines, spacing and CRLF are tolerated") {
    const auto p = parse_polygon("# a comment\n\ngrid   tri\r\n  1 0 \n# more\n0 0\r\n");
    CHECK(p.cells() == std::vector<Cell>{{0, 0}, {1, 0}});
  }

  TEST_CASE("errors carry line numbers") {
    auto line_of = [](const char* text) {
      try {
        parse_polygon(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{999};
    };
    CHECK(line_of("0 0\n") == 1);
    CHECK(line_of("grid square\n0 0\n") == 1);
    CHECK(line_of("grid hex\n0 0\n0 x\n") == 3);
    CHECK(line_of("grid hex\n0 0\n0 0 0\n") == 3);
    CHECK(line_of("grid hex\n0 0\n1 0\n0 0\n") == 4);
    CHECK(line_of("grid hex\n999999999999 0\n") == 2);
    CHECK_THROWS_WITH_AS(parse_polygon("grid hex\n0 0\n5 5\n"), doctest::Contains("not edge-connected"), ParseError);
    CHECK_THROWS_AS(parse_polygon("grid hex\n"), ParseError);
    CHECK_THROWS_AS(parse_polygon(""), ParseError);
  }

  TEST_CASE("serialize is canonical and round-trips") {
    const auto p = parse_polygon("grid hex\n1 0\n0 1\n0 0\n");
    CHECK(serialize_polygon(p) == "grid hex\n0 0\n0 1\n1 0\n");
    for (GridKind kind : {GridKind::Hex, GridKind::Tri}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto q = random_holed(kind, 25, seed);
        const auto text = serialize_polygon(q);
        CHECK(parse_polygon(text) == q);
        CHECK(serialize_polygon(parse_polygon(text)) == text);
      }
    }
  }

  TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "cellcover_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "honeycomb.poly").string();
    write_text_file(path, serialize_polygon(honeycomb(1)));
    CHECK(read_polygon_file(path) == honeycomb(1));
    CHECK_THROWS(read_polygon_file((dir / "missing.poly").string()));
    std::filesystem::remove_all(dir);
  }
}
