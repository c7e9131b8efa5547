#include <doctest.h>

#include "cellcover/verify.hpp"

using namespace cellcover;

namespace {

ReportRow smart_row(GridKind kind, std::int64_t c, std::int64_t e, std::int64_t s) {
  ReportRow r;
  r.suite = "bounds";
  r.check = Check::SmartBound;
  r.kind = kind;
  r.source = "test";
  r.polygon = "grid hex\n0 0\n";
  r.area = c;
  r.perimeter = e;
  r.s_smart = s;
  return r;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("verdicts are recomputed from raw values") {
    // Hex bound C + E/4 - 5/2 for C=5, E=22 is 8.
    CHECK(evaluate(smart_row(GridKind::Hex, 5, 22, 8)).pass);
    CHECK(*evaluate(smart_row(GridKind::Hex, 5, 22, 8)).slack == Ratio(0));
    CHECK_FALSE(evaluate(smart_row(GridKind::Hex, 5, 22, 9)).pass);
    CHECK(*evaluate(smart_row(GridKind::Tri, 5, 7, 7)).slack == Ratio(1));

    ReportRow ratio = smart_row(GridKind::Hex, 10, 0, 13);
    ratio.check = Check::CompetitiveRatio;
    ratio.s_opt = 10;
    CHECK(evaluate(ratio).pass);
    CHECK(*evaluate(ratio).ratio == Ratio(13, 10));
    ratio.s_smart = 14;
    CHECK_FALSE(evaluate(ratio).pass);

    ReportRow broken = smart_row(GridKind::Hex, 5, 22, 8);
    broken.error = "boom";
    CHECK_FALSE(evaluate(broken).pass);
    ReportRow missing = smart_row(GridKind::Hex, 5, 22, 8);
    missing.s_smart.reset();
    CHECK_FALSE(evaluate(missing).pass);
  }

  TEST_CASE("family identities") {
    ReportRow hexfam = smart_row(GridKind::Hex, 10, 0, 11);
    hexfam.check = Check::HexFamily;
    hexfam.s_opt = 10;
    CHECK(evaluate(hexfam).pass);
    hexfam.s_smart = 12;
    CHECK_FALSE(evaluate(hexfam).pass);
    ReportRow trifam = smart_row(GridKind::Tri, 22, 0, 26);
    trifam.check = Check::TriFamily;
    trifam.level = 1;
    trifam.s_opt = 22;
    CHECK(evaluate(trifam).pass);
    trifam.s_opt = 23;
    CHECK_FALSE(evaluate(trifam).pass);
  }

  TEST_CASE("reports") {
    VerificationReport report;
    report.add(smart_row(GridKind::Tri, 5, 7, 7));
    report.add(smart_row(GridKind::Hex, 5, 22, 9));
    CHECK(report.failures() == 1);
    CHECK_FALSE(report.passed());
    const auto csv = report.to_csv();
    CHECK(csv.rfind("# cellcover verification report, csv schema 1\n", 0) == 0);
    CHECK(csv.find("suite,check,grid,source,C,E,S_dfs,S_smart,S_opt,level,measured,slack,ratio,pass,note") !=
          std::string::npos);
    // Sorted by grid within the check: hex first.
    CHECK(csv.find(",hex,") < csv.find(",tri,"));
    const auto md = report.to_markdown();
    CHECK(md.find("## Failures") != std::string::npos);
    CHECK(md.find("grid hex\n0 0\n") != std::string::npos);

    VerificationReport all;
    all.append(report);
    all.append(report);
    CHECK(all.rows().size() == 4);
  }

  TEST_CASE("suites") {
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
    CHECK(suite_names().size() == 6);
    CHECK(std::string(to_string(Check::NarrowOptimal)) == "narrow-optimal");
    const auto report = run_suite("shortest-paths");
    CHECK(report.rows().size() == 600);
    CHECK(report.passed());
  }
}
