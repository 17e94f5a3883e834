#include <fstream>
#include <sstream>

#include "displace/cli/json_io.hpp"
#include "displace/cli/scenario.hpp"
#include "displace/cli/suite.hpp"
#include "displace/core/errors.hpp"
#include "displace/hnn/free_group.hpp"
#include "displace/hnn/hnn.hpp"
#include "displace/linalg/gl.hpp"
#include "displace/perm/perm_group.hpp"
#include "displace/pl/pl_group.hpp"
#include "displace/wreath/wreath.hpp"
#include "doctest.h"

using namespace displace;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(DISPLACE_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void round_trip(const Element& x) {
  const Json j = element_to_json(x);
  CHECK(element_from_json(x.group(), j) == x);
  CHECK(element_to_json(element_from_json(x.group(), j)) == j);
}

Suite tiny_suite() {
  auto g = PermGroup::symmetric(3);
  Suite suite{"tiny", "test", {}};
  suite.checks.push_back({"pass", "", Verdict::Pass, [](const RunOptions&) { return PropertyReport{}; }});
  suite.checks.push_back({"expected-fail", "", Verdict::Fail, [](const RunOptions&) {
                            PropertyReport r;
                            r.fail("x");
                            return r;
                          }});
  suite.checks.push_back({"unexpected-pass", "", Verdict::Fail, [](const RunOptions&) { return PropertyReport{}; }});
  suite.checks.push_back({"throws", "", Verdict::Pass, [](const RunOptions&) -> PropertyReport {
                            throw InvalidArgument("boom");
                          }});
  return suite;
}

}  // namespace

TEST_CASE("suite registry") {
  const std::string listing = list_suites();
  for (const char* name : {"gl-block", "pl-tower", "bass-serre", "wreath-cznc", "mitosis"}) {
    CHECK(listing.find(name) != std::string::npos);
  }
  CHECK(listing == list_suites());
  CHECK_THROWS_AS(find_suite("nope"), InvalidArgument);
  const Suite all = find_suite("all");
  std::size_t total = 0;
  for (const auto& s : suite_registry()) total += s.checks.size();
  CHECK(all.checks.size() == total);
  CHECK(all.checks.front().id.rfind("wreath-cznc/", 0) == 0);
}

TEST_CASE("run_suite expectations") {
  const auto report = run_suite(tiny_suite(), RunOptions{});
  REQUIRE(report.results.size() == 4);
  CHECK(report.results[0].met);
  CHECK(report.results[1].met);
  CHECK_FALSE(report.results[2].met);
  CHECK_FALSE(report.results[3].met);
  CHECK(report.results[3].error.find("boom") != std::string::npos);
  CHECK(report.met() == 2);
  Suite budget{"b", "", {{"x", "", Verdict::Pass, [](const RunOptions&) -> PropertyReport {
                            throw BudgetExceeded("over");
                          }}}};
  CHECK_THROWS_AS(run_suite(budget, RunOptions{}), BudgetExceeded);
}

TEST_CASE("reports do not depend on the worker count") {
  RunOptions one;
  RunOptions three;
  three.jobs = 3;
  const Suite suite = find_suite("wreath-cznc");
  CHECK(suite_report_to_json(run_suite(suite, one)).dump() == suite_report_to_json(run_suite(suite, three)).dump());
}

TEST_CASE("scenario parse errors carry locations") {
  try {
    parse_scenario(read_data("malformed.json"));
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 42);
  }
  try {
    parse_scenario(read_data("bad-element.json"));
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(e.column() == 70);
    CHECK(std::string(e.what()).find("/checks/1/witness/t") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scenario("{\"name\": 3}"), ParseError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), Error);
}

TEST_CASE("a violated scenario runs and fails its expectation") {
  const auto scenario = parse_scenario(read_data("violated.json"));
  const auto report = run_suite(scenario.suite, RunOptions{});
  REQUIRE(report.results.size() == 1);
  CHECK_FALSE(report.all_met());
}

TEST_CASE("element JSON round trips") {
  auto s3 = symmetric_s3();
  round_trip(s3->parse("(1 2 3)"));
  auto w = WreathGroup::make(s3, 3);
  round_trip(w->element({{0, s3->parse("(1 2)")}, {2, s3->parse("(1 3)")}}, 1));
  round_trip(GeneralLinearGroup::instance()->element(RationalMatrix::from_ints({{2, 1}, {1, 1}})));
  round_trip(PLGroup::instance()->element(thompson_generators().second));
  auto b = HnnGroup::make_binate(s3->as_subgroup());
  round_trip(b->letter(0) * b->from_base(b->pair(s3->parse("(1 2)"), s3->parse("(2 3)"))) * b->letter(0, -1) *
             b->letter(0, -1));
  round_trip(FreeGroup::make(2)->parse("abA"));
  round_trip(b->base()->identity());
}

TEST_CASE("rationals from JSON") {
  CHECK(rational_from_json(Json("3/6")) == make_rational(1, 2));
  CHECK(rational_from_json(Json("-4")) == -4);
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK_THROWS(rational_from_json(Json(true)));
  CHECK_THROWS(rational_from_json(Json("1/0")));
}

TEST_CASE("line_column") {
  const std::string text = "ab\ncd\n";
  CHECK(line_column(text, 0) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(line_column(text, 4) == std::pair<std::size_t, std::size_t>{2, 2});
  const auto pos = json_value_positions("{\n  \"a\": [1, 2]\n}");
  CHECK(pos.at("/a/1") == std::pair<std::size_t, std::size_t>{2, 12});
}
