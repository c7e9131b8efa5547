#include "cellcover/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cellcover/generate.hpp"
#include "cellcover/polygon_io.hpp"
#include "seed_manifest.hpp"

namespace cellcover {

namespace {

std::string show(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string show(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

std::string show(const std::optional<Ratio>& r) { return r ? show(*r) : ""; }

bool uses_level(Check c) { return c == Check::OffsetEdges || c == Check::TriFamily; }
bool uses_measured(Check c) { return c == Check::OffsetEdges || c == Check::Diameter; }

// Strips characters that would break a CSV field or a markdown table cell.
std::string field(std::string s) {
  for (char& ch : s) {
    if (ch == ',' || ch == '|' || ch == '\n' || ch == '"') ch = ';';
  }
  return s;
}

class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, const SuiteOptions& options) : suite_(std::move(suite)), options_(options) {}

  VerificationReport take() { return std::move(report_); }

  // Runs `fill` on a fresh row for the polygon produced by `make`; any
  // exception ends up in the row instead of aborting the suite.
  void row(Check check, GridKind kind, const std::string& source, const std::function<GridPolygon()>& make,
           const std::function<bool(const GridPolygon&, ReportRow&)>& fill) {
    ReportRow r;
    r.suite = suite_;
    r.check = check;
    r.kind = kind;
    r.source = source;
    try {
      const GridPolygon p = make();
      const PolygonMetrics m = metrics(p);
      r.area = m.area;
      r.perimeter = m.perimeter;
      r.polygon = serialize_polygon(p);
      if (!fill(p, r)) return;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    report_.add(std::move(r));
  }

  std::uint64_t seed(const manifest::Pool& pool, int i) const {
    return pool.base_seed + options_.seed_shift + static_cast<std::uint64_t>(i);
  }
  int count(const manifest::Pool& pool) const { return pool.count * std::max(1, options_.widen); }

  std::int64_t optimum(const GridPolygon& p) const {
    TourOptions t;
    t.exact_ceiling = options_.exact_ceiling;
    t.search_budget = options_.search_budget;
    return optimal_tour(p, default_start(p), t).length;
  }

 private:
  std::string suite_;
  SuiteOptions options_;
  VerificationReport report_;
};

std::int64_t smart_steps(const GridPolygon& p) { return explore_smartdfs(p, default_start(p)).steps(); }

constexpr GridKind kKinds[] = {GridKind::Hex, GridKind::Tri};

std::string random_source(const char* family, GridKind kind, int cells, std::uint64_t seed) {
  return std::string(family) + "(" + std::string(to_string(kind)) + ", n=" + std::to_string(cells) +
         ", seed=" + std::to_string(seed) + ")";
}

VerificationReport bounds_suite(const SuiteOptions& options) {
  SuiteBuilder b("bounds", options);
  for (GridKind kind : kKinds) {
    for (int i = 0; i < b.count(manifest::kDfs); ++i) {
      const int n = manifest::cells_for(manifest::kDfs, i);
      const auto seed = b.seed(manifest::kDfs, i);
      const bool holed = i % 2 == 1;
      b.row(Check::DfsSteps, kind, random_source(holed ? "random_holed" : "random_simple", kind, n, seed),
            [&] { return holed ? random_holed(kind, n, seed) : random_simple(kind, n, seed); },
            [](const GridPolygon& p, ReportRow& r) {
              r.s_dfs = explore_dfs(p, default_start(p)).steps();
              return true;
            });
    }
    for (int i = 0; i < b.count(manifest::kSmartBound); ++i) {
      const int n = manifest::cells_for(manifest::kSmartBound, i);
      const auto seed = b.seed(manifest::kSmartBound, i);
      b.row(Check::SmartBound, kind, random_source("random_simple", kind, n, seed),
            [&] { return random_simple(kind, n, seed); },
            [](const GridPolygon& p, ReportRow& r) {
              r.s_smart = smart_steps(p);
              return true;
            });
    }
    // Only polygons without narrow passages and without first-layer splits
    // fall under the perimeter-area bound.
    for (int i = 0; i < b.count(manifest::kThick); ++i) {
      const int n = manifest::cells_for(manifest::kThick, i);
      const auto seed = b.seed(manifest::kThick, i);
      b.row(Check::PerimeterArea, kind, random_source("random_thick", kind, n, seed),
            [&] { return random_thick(kind, n, seed); },
            [](const GridPolygon& p, ReportRow& r) {
              if (!narrow_passage_cells(p).empty()) return false;
              const auto trace = explore_smartdfs(p, default_start(p));
              for (const auto& e : trace.events) {
                if (e.layer == 1) return false;
              }
              r.s_smart = trace.steps();
              return true;
            });
    }
  }
  b.row(Check::PerimeterAreaTight, GridKind::Hex, "honeycomb(r=1)", [] { return honeycomb(1); },
        [](const GridPolygon&, ReportRow&) { return true; });
  return b.take();
}

VerificationReport offsets_suite(const SuiteOptions& options) {
  SuiteBuilder b("offsets", options);
  for (GridKind kind : kKinds) {
    for (int i = 0; i < b.count(manifest::kOffsets); ++i) {
      const int n = manifest::cells_for(manifest::kOffsets, i);
      const auto seed = b.seed(manifest::kOffsets, i);
      const GridPolygon p = random_simple(kind, n, seed);
      const LayerMap layer_map = layers(p);
      int deepest = 0;
      for (const auto& [c, l] : layer_map) deepest = std::max(deepest, l);
      for (int depth = 1; depth < deepest; ++depth) {
        b.row(Check::OffsetEdges, kind, random_source("random_simple", kind, n, seed), [&] { return p; },
              [&](const GridPolygon&, ReportRow& r) {
                r.level = depth;
                r.measured = perimeter(kind, offset(kind, layer_map, depth));
                return true;
              });
      }
    }
  }
  return b.take();
}

VerificationReport shortest_paths_suite(const SuiteOptions& options) {
  SuiteBuilder b("shortest-paths", options);
  for (GridKind kind : kKinds) {
    for (int i = 0; i < b.count(manifest::kDiameter); ++i) {
      const int n = manifest::cells_for(manifest::kDiameter, i);
      const auto seed = b.seed(manifest::kDiameter, i);
      b.row(Check::Diameter, kind, random_source("random_simple", kind, n, seed),
            [&] { return random_simple(kind, n, seed); },
            [](const GridPolygon& p, ReportRow& r) {
              r.measured = DistanceTable(p).diameter();
              return true;
            });
    }
  }
  return b.take();
}

VerificationReport competitive_suite(const SuiteOptions& options) {
  SuiteBuilder b("competitive", options);
  auto ratio_row = [&b](const GridPolygon& p, ReportRow& r) {
    r.s_smart = smart_steps(p);
    r.s_opt = b.optimum(p);
    return true;
  };
  for (GridKind kind : kKinds) {
    const int limit = kind == GridKind::Hex ? manifest::kExhaustiveHex : manifest::kExhaustiveTri;
    std::map<std::size_t, int> index;
    enumerate_polyforms(kind, limit, [&](const GridPolygon& p) {
      const int k = index[p.size()]++;
      if (!is_simple(p)) return true;
      b.row(Check::CompetitiveRatio, kind,
            "polyform(" + std::string(to_string(kind)) + ", C=" + std::to_string(p.size()) + ", #" +
                std::to_string(k) + ")",
            [&] { return p; }, ratio_row);
      return true;
    });
    for (int i = 0; i < b.count(manifest::kRatio); ++i) {
      const int n = manifest::cells_for(manifest::kRatio, i);
      const auto seed = b.seed(manifest::kRatio, i);
      b.row(Check::CompetitiveRatio, kind, random_source("random_simple", kind, n, seed),
            [&] { return random_simple(kind, n, seed); }, ratio_row);
    }
  }
  return b.take();
}

VerificationReport tightness_suite(const SuiteOptions& options) {
  SuiteBuilder b("tightness", options);
  for (GridKind kind : kKinds) {
    for (int len = 2; len <= manifest::kCorridorMaxTight; ++len) {
      b.row(Check::SmartBoundTight, kind, "corridor(w=1, len=" + std::to_string(len) + ")",
            [&] { return corridor(kind, 1, len); },
            [](const GridPolygon& p, ReportRow& r) {
              r.s_smart = smart_steps(p);
              return true;
            });
    }
    for (int width : {1, 2}) {
      for (int len = 2; len <= manifest::kCorridorMaxNarrow; ++len) {
        b.row(Check::NarrowOptimal, kind,
              "corridor(w=" + std::to_string(width) + ", len=" + std::to_string(len) + ")",
              [&] { return corridor(kind, width, len); },
              [&b](const GridPolygon& p, ReportRow& r) {
                r.s_smart = smart_steps(p);
                r.s_opt = b.optimum(p);
                return true;
              });
      }
    }
  }
  for (int len = 1; len <= manifest::kHexFamilyMax; ++len) {
    b.row(Check::HexFamily, GridKind::Hex, "comp_hex(len=" + std::to_string(len) + ")",
          [&] { return comp_hex(len); },
          [&b](const GridPolygon& p, ReportRow& r) {
            r.s_smart = smart_steps(p);
            r.s_opt = b.optimum(p);
            return true;
          });
  }
  for (int pairs = 0; pairs <= manifest::kTriFamilyMax; ++pairs) {
    b.row(Check::TriFamily, GridKind::Tri, "comp_tri(pairs=" + std::to_string(pairs) + ")",
          [&] { return comp_tri(pairs); },
          [&b, pairs](const GridPolygon& p, ReportRow& r) {
            r.level = pairs;
            r.s_smart = smart_steps(p);
            r.s_opt = b.optimum(p);
            return true;
          });
  }
  return b.take();
}

}  // namespace

std::string_view to_string(Check check) {
  switch (check) {
    case Check::DfsSteps: return "dfs-steps";
    case Check::SmartBound: return "smart-bound";
    case Check::SmartBoundTight: return "smart-bound-tight";
    case Check::OffsetEdges: return "offset-edges";
    case Check::Diameter: return "diameter";
    case Check::PerimeterArea: return "perimeter-area";
    case Check::PerimeterAreaTight: return "perimeter-area-tight";
    case Check::CompetitiveRatio: return "competitive-ratio";
    case Check::NarrowOptimal: return "narrow-optimal";
    case Check::HexFamily: return "hex-family";
    case Check::TriFamily: return "tri-family";
  }
  return "?";
}

Verdict evaluate(const ReportRow& r) {
  Verdict v;
  if (!r.error.empty()) {
    v.note = r.error;
    return v;
  }
  const bool hex = r.kind == GridKind::Hex;
  const Ratio area(r.area), edges(r.perimeter);
  auto missing = [&](const std::optional<std::int64_t>& x, const char* name) {
    if (!x) v.note = std::string("missing ") + name;
    return !x;
  };
  if (r.s_smart && r.s_opt) {
    v.ratio = *r.s_opt == 0 ? Ratio(*r.s_smart == 0 ? 1 : 0) : Ratio(*r.s_smart, *r.s_opt);
  }

  switch (r.check) {
    case Check::DfsSteps:
      if (missing(r.s_dfs, "S_dfs")) return v;
      v.slack = 2 * area - 2 - *r.s_dfs;
      v.pass = *v.slack == Ratio(0);
      break;
    case Check::SmartBound:
    case Check::SmartBoundTight: {
      if (missing(r.s_smart, "S_smart")) return v;
      const Ratio bound = hex ? area + edges / 4 - Ratio(5, 2) : area + edges - 4;
      v.slack = bound - *r.s_smart;
      v.pass = r.check == Check::SmartBound ? *v.slack >= Ratio(0) : *v.slack == Ratio(0);
      break;
    }
    case Check::OffsetEdges:
      v.slack = edges - (hex ? 12 : 6) * r.level - r.measured;
      v.pass = *v.slack >= Ratio(0);
      break;
    case Check::Diameter:
      v.slack = (hex ? edges / 4 - Ratio(3, 2) : edges - 3) - r.measured;
      v.pass = *v.slack >= Ratio(0);
      break;
    case Check::PerimeterArea:
    case Check::PerimeterAreaTight:
      v.slack = (hex ? (4 * area + 26) / 3 : (area + 14) / 3) - edges;
      v.pass = r.check == Check::PerimeterArea ? *v.slack >= Ratio(0) : *v.slack == Ratio(0);
      break;
    case Check::CompetitiveRatio:
      if (missing(r.s_smart, "S_smart") || missing(r.s_opt, "S_opt")) return v;
      v.slack = Ratio(4, 3) - *v.ratio;
      v.pass = *v.slack >= Ratio(0);
      break;
    case Check::NarrowOptimal:
      if (missing(r.s_smart, "S_smart") || missing(r.s_opt, "S_opt")) return v;
      v.slack = Ratio(*r.s_opt - *r.s_smart);
      v.pass = *v.slack == Ratio(0);
      break;
    case Check::HexFamily:
      if (missing(r.s_smart, "S_smart") || missing(r.s_opt, "S_opt")) return v;
      v.slack = Ratio(4 * *r.s_opt - 7, 3) - *r.s_smart;
      v.pass = *v.slack == Ratio(0);
      break;
    case Check::TriFamily:
      if (missing(r.s_smart, "S_smart") || missing(r.s_opt, "S_opt")) return v;
      v.slack = Ratio(10 + 16 * r.level - *r.s_smart);
      v.pass = *v.slack == Ratio(0) && *r.s_opt == 10 + 12 * r.level;
      if (*r.s_opt != 10 + 12 * r.level) v.note = "S_opt differs from 10 + 12n";
      break;
  }
  return v;
}

void VerificationReport::append(const VerificationReport& other) {
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), [](const ReportRow& r) { return !evaluate(r).pass; }));
}

std::vector<ReportRow> VerificationReport::sorted() const {
  std::vector<ReportRow> out = rows_;
  std::stable_sort(out.begin(), out.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.suite, a.check, a.kind) < std::tie(b.suite, b.check, b.kind);
  });
  return out;
}

std::string VerificationReport::to_markdown() const {
  struct Group {
    std::size_t rows = 0;
    std::size_t failures = 0;
    std::optional<Ratio> min_slack;
    std::optional<Ratio> max_ratio;
  };
  const auto rows = sorted();
  std::map<std::tuple<std::string, Check, GridKind>, Group> groups;
  std::vector<std::pair<const ReportRow*, Verdict>> failed;
  for (const ReportRow& r : rows) {
    const Verdict v = evaluate(r);
    Group& g = groups[{r.suite, r.check, r.kind}];
    ++g.rows;
    if (!v.pass) {
      ++g.failures;
      failed.emplace_back(&r, v);
    }
    if (v.slack && (!g.min_slack || *v.slack < *g.min_slack)) g.min_slack = v.slack;
    if (v.ratio && (!g.max_ratio || *v.ratio > *g.max_ratio)) g.max_ratio = v.ratio;
  }

  std::ostringstream out;
  out << "# Verification report\n\n";
  out << "| suite | check | grid | rows | failures | min slack | max ratio |\n";
  out << "|---|---|---|---:|---:|---:|---:|\n";
  for (const auto& [key, g] : groups) {
    const auto& [suite, check, kind] = key;
    out << "| " << suite << " | " << to_string(check) << " | " << to_string(kind) << " | " << g.rows << " | "
        << g.failures << " | " << show(g.min_slack) << " | " << show(g.max_ratio) << " |\n";
  }
  out << "\nTotal: " << rows.size() << " rows, " << failed.size() << " failures.\n";
  if (!failed.empty()) {
    out << "\n## Failures\n";
    for (const auto& [r, v] : failed) {
      out << "\n### " << r->suite << " / " << to_string(r->check) << " / " << to_string(r->kind) << ": "
          << r->source << "\n\n";
      out << "C=" << r->area << ", E=" << r->perimeter << ", S_dfs=" << show(r->s_dfs)
          << ", S_smart=" << show(r->s_smart) << ", S_opt=" << show(r->s_opt) << ", level=" << r->level
          << ", measured=" << r->measured << ", slack=" << show(v.slack);
      if (!v.note.empty()) out << ", note: " << v.note;
      out << "\n\n```\n" << r->polygon << "```\n";
    }
  }
  return out.str();
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "# cellcover verification report, csv schema " << kCsvSchemaVersion << '\n';
  out << "suite,check,grid,source,C,E,S_dfs,S_smart,S_opt,level,measured,slack,ratio,pass,note\n";
  for (const ReportRow& r : sorted()) {
    const Verdict v = evaluate(r);
    out << r.suite << ',' << to_string(r.check) << ',' << to_string(r.kind) << ',' << field(r.source) << ','
        << r.area << ',' << r.perimeter << ',' << show(r.s_dfs) << ',' << show(r.s_smart) << ',' << show(r.s_opt)
        << ',' << (uses_level(r.check) ? std::to_string(r.level) : "") << ','
        << (uses_measured(r.check) ? std::to_string(r.measured) : "") << ',' << show(v.slack) << ','
        << show(v.ratio) << ',' << (v.pass ? "pass" : "FAIL") << ',' << field(v.note) << '\n';
  }
  return out.str();
}

std::vector<std::string> suite_names() {
  return {"bounds", "offsets", "shortest-paths", "competitive", "tightness", "all"};
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "bounds") return bounds_suite(options);
  if (name == "offsets") return offsets_suite(options);
  if (name == "shortest-paths") return shortest_paths_suite(options);
  if (name == "competitive") return competitive_suite(options);
  if (name == "tightness") return tightness_suite(options);
  if (name == "all") {
    VerificationReport all;
    for (const auto& suite : suite_names()) {
      if (suite != "all") all.append(run_suite(suite, options));
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace cellcover
