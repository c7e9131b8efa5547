#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cellcover/oracle.hpp"

namespace cellcover {

/// What a report row asserts. Each check is one inequality or identity over
/// the row's raw numbers.
enum class Check {
  DfsSteps,            // S_dfs == 2C - 2
  SmartBound,          // S_smart <= C + E/4 - 5/2 (hex), C + E - 4 (tri)
  SmartBoundTight,     // the same bound met with equality
  OffsetEdges,         // E(l-offset) <= E - 12l (hex), E - 6l (tri)
  Diameter,            // BFS diameter <= E/4 - 3/2 (hex), E - 3 (tri)
  PerimeterArea,       // E <= 4C/3 + 26/3 (hex), C/3 + 14/3 (tri)
  PerimeterAreaTight,  // the same bound met with equality
  CompetitiveRatio,    // S_smart / S_opt <= 4/3
  NarrowOptimal,       // S_smart == S_opt
  HexFamily,           // 3 S_smart == 4 S_opt - 7
  TriFamily,           // S_smart == 10 + 16n and S_opt == 10 + 12n
};

std::string_view to_string(Check check);

struct ReportRow {
  std::string suite;
  Check check = Check::SmartBound;
  GridKind kind = GridKind::Hex;
  std::string source;   // how the polygon was produced
  std::string polygon;  // serialized polygon, for reproduction
  std::int64_t area = 0;
  std::int64_t perimeter = 0;
  std::optional<std::int64_t> s_dfs;
  std::optional<std::int64_t> s_smart;
  std::optional<std::int64_t> s_opt;
  std::int64_t level = 0;     // offset depth l, or family parameter n
  std::int64_t measured = 0;  // offset perimeter or BFS diameter
  std::string error;          // set when a computation threw
};

/// Outcome of a row, always derived from the raw fields. `slack` is the
/// bound minus the measured value (0 for a met identity); `ratio` is
/// S_smart / S_opt when both are known.
struct Verdict {
  bool pass = false;
  std::optional<Ratio> slack;
  std::optional<Ratio> ratio;
  std::string note;
};

Verdict evaluate(const ReportRow& row);

class VerificationReport {
 public:
  void add(ReportRow row) { rows_.push_back(std::move(row)); }
  void append(const VerificationReport& other);

  const std::vector<ReportRow>& rows() const { return rows_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  /// Summary table per (suite, check, grid) plus every failing row with its
  /// polygon text.
  std::string to_markdown() const;

  /// One line per row behind a schema comment and a header line.
  std::string to_csv() const;

 private:
  std::vector<ReportRow> sorted() const;

  std::vector<ReportRow> rows_;
};

inline constexpr int kCsvSchemaVersion = 1;

struct SuiteOptions {
  /// Multiplies every random pool size.
  int widen = 1;
  /// Added to every manifest seed.
  std::uint64_t seed_shift = 0;
  int exact_ceiling = 18;
  std::uint64_t search_budget = 20'000'000;
};

/// Suites: bounds, offsets, shortest-paths, competitive, tightness, all.
/// Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options = {});

std::vector<std::string> suite_names();

}  // namespace cellcover
