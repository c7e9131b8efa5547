// cellcover command-line tool: generate, explore, optimal, verify, render.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
// Relative --out paths resolve against $CELLCOVER_OUT_DIR when it is set.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cellcover/explore.hpp"
#include "cellcover/generate.hpp"
#include "cellcover/oracle.hpp"
#include "cellcover/polygon_io.hpp"
#include "cellcover/render.hpp"
#include "cellcover/verify.hpp"

namespace {

using namespace cellcover;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string resolve_out(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("CELLCOVER_OUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  return path.string();
}

// Writes to --out when given, otherwise to stdout.
void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(resolve_out(out), text);
  }
}

std::optional<Cell> start_from(const std::vector<int>& xy) {
  if (xy.empty()) return std::nullopt;
  return Cell{xy[0], xy[1]};
}

// Bound values are multiples of 1/4; print them exactly with at least one decimal.
std::string decimal(const Ratio& r) {
  std::ostringstream out;
  const std::int64_t scaled = r.numerator() * (4 / r.denominator());
  const std::int64_t whole = scaled / 4;
  const std::int64_t frac = std::abs(scaled % 4);
  out << (scaled < 0 && whole == 0 ? "-" : "") << whole << '.' << (frac == 0 ? "0" : frac == 1 ? "25" : frac == 2 ? "5" : "75");
  return out.str();
}

struct GenerateArgs {
  std::string family;
  std::string grid = "hex";
  int width = 1;
  int length = 5;
  int radius = 1;
  int cells = 20;
  int pairs = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  FamilySpec spec;
  spec.kind = parse_grid_kind(a.grid);
  spec.width = a.width;
  spec.length = a.length;
  spec.radius = a.radius;
  spec.cells = a.cells;
  spec.rows = a.pairs;
  spec.seed = a.seed;
  if (a.family == "corridor") {
    spec.family = Family::Corridor;
  } else if (a.family == "honeycomb") {
    spec.family = Family::Honeycomb;
    spec.kind = GridKind::Hex;
  } else if (a.family == "random") {
    spec.family = Family::RandomSimple;
  } else if (a.family == "holed") {
    spec.family = Family::RandomHoled;
  } else if (a.family == "thick") {
    spec.family = Family::RandomThick;
  } else if (a.family == "comp-hex") {
    spec.family = Family::CompHex;
    spec.kind = GridKind::Hex;
  } else if (a.family == "comp-tri") {
    spec.family = Family::CompTri;
    spec.kind = GridKind::Tri;
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  const GridPolygon p = generate(spec);
  const PolygonMetrics m = metrics(p);
  std::string text = "# " + describe(spec) + "\n" + serialize_polygon(p);
  emit(a.out, text);
  (a.out.empty() ? std::cerr : std::cout) << describe(spec) << ": C=" << m.area << ", E=" << m.perimeter << '\n';
  return 0;
}

struct ExploreArgs {
  std::string polygon;
  std::string strategy = "smartdfs";
  std::vector<int> start;
  std::string trace_out;
};

int run_explore(const ExploreArgs& a) {
  const GridPolygon p = read_polygon_file(a.polygon);
  const Cell s = start_from(a.start).value_or(default_start(p));
  ExplorationTrace trace;
  Ratio bound;
  const PolygonMetrics m = metrics(p);
  if (a.strategy == "dfs") {
    trace = explore_dfs(p, s);
    bound = Ratio(2 * m.area - 2);
  } else {
    trace = explore_smartdfs(p, s);
    bound = p.kind() == GridKind::Hex ? Ratio(m.area) + Ratio(m.perimeter, 4) - Ratio(5, 2)
                                      : Ratio(m.area + m.perimeter - 4);
  }
  if (!a.trace_out.empty()) write_text_file(resolve_out(a.trace_out), serialize_trace(trace));
  std::cout << "strategy=" << a.strategy << " grid=" << to_string(p.kind()) << " C=" << m.area << ", E=" << m.perimeter
            << ", S=" << trace.steps() << ", bound=" << decimal(bound) << ", splits=" << trace.events.size() << '\n';
  return 0;
}

struct OptimalArgs {
  std::string polygon;
  std::vector<int> start;
  int exact_ceiling = 18;
  std::uint64_t budget = 2'000'000;
  int max_excess = 8;
  std::string out;
};

int run_optimal(const OptimalArgs& a) {
  const GridPolygon p = read_polygon_file(a.polygon);
  const Cell s = start_from(a.start).value_or(default_start(p));
  TourOptions options;
  options.exact_ceiling = a.exact_ceiling;
  options.search_budget = a.budget;
  options.max_excess = a.max_excess;
  const TourSolution tour = optimal_tour(p, s, options);
  if (!a.out.empty()) {
    ExplorationTrace dump;
    dump.kind = p.kind();
    dump.walk = tour.walk;
    write_text_file(resolve_out(a.out), serialize_trace(dump));
  }
  std::cout << "C=" << p.size() << ", S_opt=" << tour.length << ", method="
            << (tour.method == TourSolution::Method::HeldKarp ? "held-karp" : "bounded-search") << '\n';
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::string format = "md";
  std::string out;
  int widen = 1;
  std::uint64_t seed = 0;
  int exact_ceiling = 18;
};

int run_verify(const VerifyArgs& a) {
  SuiteOptions options;
  options.widen = a.widen;
  options.seed_shift = a.seed;
  options.exact_ceiling = a.exact_ceiling;
  const VerificationReport report = run_suite(a.suite, options);
  emit(a.out, a.format == "csv" ? report.to_csv() : report.to_markdown());
  std::cerr << "verify " << a.suite << ": " << report.rows().size() << " rows, " << report.failures()
            << " failures\n";
  return report.passed() ? 0 : kExitCheckFailed;
}

struct RenderArgs {
  std::string polygon;
  std::string trace;
  std::string format = "svg";
  std::string out;
};

int run_render(const RenderArgs& a) {
  const GridPolygon p = read_polygon_file(a.polygon);
  std::optional<ExplorationTrace> trace;
  if (!a.trace.empty()) trace = parse_trace(read_text_file(a.trace));
  const ExplorationTrace* t = trace ? &*trace : nullptr;
  emit(a.out, a.format == "ascii" ? render_ascii(p, t) : render_svg(p, t));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online exploration of hexagonal and triangular grid polygons"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a polygon of a generator family");
  g->add_option("family", gen.family, "corridor | honeycomb | random | holed | thick | comp-hex | comp-tri")
      ->required()
      ->check(CLI::IsMember({"corridor", "honeycomb", "random", "holed", "thick", "comp-hex", "comp-tri"}));
  g->add_option("--grid", gen.grid, "hex or tri")->check(CLI::IsMember({"hex", "tri"}));
  g->add_option("--width", gen.width, "corridor width");
  g->add_option("--len", gen.length, "corridor length or comp-hex body rows");
  g->add_option("--radius", gen.radius, "honeycomb radius");
  g->add_option("--cells", gen.cells, "cell count of random families (core size for thick)");
  g->add_option("--pairs", gen.pairs, "comp-tri middle row pairs");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--out", gen.out, "output file (default: stdout)");

  ExploreArgs exp;
  auto* e = app.add_subcommand("explore", "Run DFS or SmartDFS and print a summary");
  e->add_option("polygon", exp.polygon, "polygon file")->required();
  e->add_option("--strategy", exp.strategy, "dfs or smartdfs")->check(CLI::IsMember({"dfs", "smartdfs"}));
  e->add_option("--start", exp.start, "start cell x y")->expected(2);
  e->add_option("--trace-out,--out", exp.trace_out, "write the trace to this file");

  OptimalArgs opt;
  auto* o = app.add_subcommand("optimal", "Compute the optimal closed covering walk");
  o->add_option("polygon", opt.polygon, "polygon file")->required();
  o->add_option("--start", opt.start, "start cell x y")->expected(2);
  o->add_option("--exact-ceiling", opt.exact_ceiling, "largest polygon for Held-Karp")
      ->check(CLI::Range(1, kMaxExactCeiling));
  o->add_option("--search-budget", opt.budget, "node budget of the bounded search above the ceiling (0: off)");
  o->add_option("--max-excess", opt.max_excess, "longest walk the bounded search tries, as steps beyond C");
  o->add_option("--out", opt.out, "write the optimal walk in trace format");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("suite", ver.suite, "bounds | offsets | shortest-paths | competitive | tightness | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  v->add_option("--format", ver.format, "md or csv")->check(CLI::IsMember({"md", "csv"}));
  v->add_option("--out", ver.out, "report file (default: stdout)");
  v->add_option("--widen", ver.widen, "multiply random pool sizes")->check(CLI::PositiveNumber);
  v->add_option("--seed", ver.seed, "shift every manifest seed");
  v->add_option("--exact-ceiling", ver.exact_ceiling, "largest polygon for Held-Karp")
      ->check(CLI::Range(1, kMaxExactCeiling));

  RenderArgs ren;
  auto* r = app.add_subcommand("render", "Draw a polygon and optionally a trace");
  r->add_option("polygon", ren.polygon, "polygon file")->required();
  r->add_option("--trace", ren.trace, "trace file");
  r->add_option("--format", ren.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  r->add_option("--out", ren.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (g->parsed()) return run_generate(gen);
    if (e->parsed()) return run_explore(exp);
    if (o->parsed()) return run_optimal(opt);
    if (v->parsed()) return run_verify(ver);
    if (r->parsed()) return run_render(ren);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
