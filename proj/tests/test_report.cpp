#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "orbitmat/errors.hpp"
#include "orbitmat/function_spec.hpp"
#include "orbitmat/local_function.hpp"
#include "orbitmat/matrix.hpp"
#include "orbitmat/report.hpp"
#include "orbitmat/svg.hpp"

using namespace orbitmat;

namespace {

std::vector<std::string> key_order(const std::string& json_text) {
  const auto parsed = nlohmann::ordered_json::parse(json_text);
  std::vector<std::string> keys;
  for (const auto& item : parsed.items()) {
    keys.push_back(item.key());
  }
  return keys;
}

}  // namespace

TEST_CASE("analyze the Collatz variant at n=50 with the oracle") {
  AnalyzeOptions options;
  options.verify = true;
  const auto report = run_analyze("collatz", 50, options);

  CHECK_FALSE(report.has_cycle);
  CHECK(report.degree_m == 18);
  CHECK(report.partition_pi ==
        std::vector<std::int64_t>{10, 4, 3, 3, 3, 3, 4, 2, 2, 2, 2, 2, 3, 2, 2, 1, 1, 1});
  CHECK(report.inverse_nnz == 348);
  CHECK(report.class_count == 10);
  CHECK(report.jnk_counts.front() == 40);
  CHECK(report.jnk_counts.back() == 0);
  CHECK(report.det == 1);
  CHECK(report.bound_check == true);
}

TEST_CASE("analyze a pure 2-cycle") {
  AnalyzeOptions options;
  options.verify = true;
  const auto report = run_analyze("table:1>2,2>1", 2, options);

  CHECK(report.has_cycle);
  CHECK(report.cycle_elements == std::vector<index_t>{2, 1});
  CHECK(report.det == 0);
  CHECK_FALSE(report.degree_m.has_value());
  CHECK(report.partition_pi.empty());
  CHECK_FALSE(report.inverse_nnz.has_value());
}

TEST_CASE("analyze the unit shift without the oracle") {
  const auto report = run_analyze("shift:t=1", 50);
  CHECK(report.inverse_nnz == 1275);
  CHECK(report.degree_m == 50);
  CHECK_FALSE(report.det.has_value());
}

TEST_CASE("report identities hold on every no-cycle run") {
  for (const char* text : {"collatz", "nextprime", "shift:t=2", "chapman"}) {
    const auto report = run_analyze(text, 37);
    REQUIRE_FALSE(report.has_cycle);
    const auto m = *report.degree_m;
    REQUIRE(report.jnk_counts.size() == m);
    std::int64_t cumulative = 0, weighted = 0;
    for (index_t k = 1; k <= m; ++k) {
      cumulative += report.partition_pi[k - 1];
      weighted += static_cast<std::int64_t>(k) * report.partition_pi[k - 1];
      REQUIRE(report.jnk_counts[k - 1] == report.n - cumulative);
    }
    REQUIRE(cumulative == report.n);
    REQUIRE(report.inverse_nnz == weighted);
    REQUIRE(report.class_count == report.n - report.jnk_counts[0]);
  }
}

TEST_CASE("count-only mode skips materialization but keeps the count") {
  AnalyzeOptions options;
  options.materialize_inverse = false;
  const auto report = run_analyze("collatz", 50, options);
  CHECK(report.inverse_nnz == 348);
}

TEST_CASE("golden report for the Collatz variant at n=8") {
  AnalyzeOptions options;
  options.verify = true;
  auto report = run_analyze("collatz", 8, options);
  report.timings.clear();  // timings are excluded from golden comparisons

  const std::string expected = R"({
  "spec_text": "collatz",
  "n": 8,
  "has_cycle": false,
  "det": 1,
  "degree_m": 6,
  "partition_pi": [
    3,
    1,
    1,
    1,
    1,
    1
  ],
  "jnk_counts": [
    5,
    4,
    3,
    2,
    1,
    0
  ],
  "inverse_nnz": 23,
  "class_count": 3,
  "bound_check": true,
  "timings": {}
}
)";
  CHECK(report_to_json(report) == expected);
}

TEST_CASE("reports round-trip through JSON with stable field order") {
  AnalyzeOptions options;
  options.verify = true;
  for (const auto& [text, n] : std::vector<std::pair<std::string, index_t>>{
           {"collatz", 50}, {"table:1>2,2>1", 2}, {"shift:t=-3", 12}}) {
    const auto report = run_analyze(text, n, options);
    const auto serialized = report_to_json(report);
    CHECK(report_from_json(serialized) == report);
    CHECK(report_to_json(report_from_json(serialized)) == serialized);

    const auto keys = key_order(serialized);
    REQUIRE(keys.size() >= 4);
    CHECK(keys[0] == "spec_text");
    CHECK(keys[1] == "n");
    CHECK(keys[2] == "has_cycle");
    CHECK(keys.back() == "timings");
  }
}

TEST_CASE("scan_for_cycle finds the first indicator flip") {
  CHECK(scan_for_cycle("rcwa:mod=2;0:1,0;1:3,-1;cut=2", 2, 64) == 10);
  CHECK(scan_for_cycle("table:1>2,2>1", 2, 5) == 2);
  CHECK_FALSE(scan_for_cycle("collatz", 2, 10000).has_value());
  CHECK_THROWS_AS(scan_for_cycle("collatz", 5, 4), Error);
}

TEST_CASE("analyze option conflicts") {
  AnalyzeOptions verify_large;
  verify_large.verify = true;
  CHECK_THROWS_AS(run_analyze("collatz", 513, verify_large), Error);

  AnalyzeOptions svg_of_cycle;
  svg_of_cycle.svg_inv_path = "/tmp/orbitmat_never_written.svg";
  CHECK_THROWS_AS(run_analyze("table:1>2,2>1", 2, svg_of_cycle), Error);

  AnalyzeOptions svg_without_inverse;
  svg_without_inverse.materialize_inverse = false;
  svg_without_inverse.svg_inv_path = "/tmp/orbitmat_never_written.svg";
  CHECK_THROWS_AS(run_analyze("collatz", 50, svg_without_inverse), Error);
}

TEST_CASE("svg output is deterministic and pinned") {
  SparseSignMatrix identity1;
  identity1.n = 1;
  identity1.columns = {{{1, +1}}};
  const std::string expected =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"10\" height=\"10\" viewBox=\"0 0 10 10\">\n"
      "<rect width=\"10\" height=\"10\" fill=\"#ffffff\"/>\n"
      "<rect x=\"0\" y=\"0\" width=\"10\" height=\"10\" fill=\"#d62728\"/>\n"
      "</svg>\n";
  CHECK(render_svg(identity1) == expected);

  const auto lf = localize(parse_spec("shift:t=-7"), 50);
  const auto ihat = build_ihat(lf);
  const auto once = render_svg(ihat);
  CHECK(render_svg(ihat) == once);

  // One background rect plus one per nonzero entry; both colors present.
  std::size_t rects = 0, at = 0;
  while ((at = once.find("<rect", at)) != std::string::npos) {
    ++rects;
    at += 5;
  }
  CHECK(rects == 1 + static_cast<std::size_t>(ihat.nnz()));
  CHECK(once.find("#d62728") != std::string::npos);
  CHECK(once.find("#1f77b4") != std::string::npos);

  // Row 1 renders at the top: the -1 at (1, 8) for x=8 -> 1 sits at y=0.
  CHECK(once.find("<rect x=\"70\" y=\"0\" width=\"10\" height=\"10\" fill=\"#1f77b4\"/>") !=
        std::string::npos);

  CHECK_THROWS_AS(render_svg(PartialMapMatrix(4097, std::vector<index_t>(4098, 0))), Error);
}
