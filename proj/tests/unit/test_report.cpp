#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "report.hpp"
#include "zetabounds/errors.hpp"

using namespace zetabounds;
using namespace zetabounds::report;

namespace {

std::vector<json> sample_records() {
  TableRow ok;
  ok.table = 2;
  ok.row = "ee";
  ok.quantity = "Z";
  ok.printed = 2.439;
  ok.computed = 2.4391;
  ok.deviation = 2.4391 / 2.439 - 1;
  ok.checks = {{"within_tolerance", true}};
  TableRow bad = ok;
  bad.row = "3, with comma";
  bad.computed = 9.0;
  bad.checks = {{"within_tolerance", false}};
  bad.constraints = {{"alpha_below_half", false}, {"d_positive", true}};
  json trig = trig_record(TrigPoly{{3, 4, 1}}, TrigReport{}, "\"quoted\"");
  return {table_record(ok), table_record(bad), trig};
}

}  // namespace

TEST_CASE("records carry the stable fields") {
  for (const auto& r : sample_records()) {
    CHECK(r.contains("kind"));
    CHECK(r.contains("row"));
    CHECK(r.contains("status"));
    CHECK(r.contains("witness"));
  }
  const json t = sample_records()[0];
  for (const char* k : {"printed", "computed", "deviation", "constraints"}) CHECK(t.contains(k));
}

TEST_CASE("json lines round trip") {
  std::stringstream ss;
  Writer w(ss, Format::Json);
  for (const auto& r : sample_records()) w.write(r);
  const auto back = read_records(ss);
  REQUIRE(back.size() == 3);
  CHECK(back == sample_records());
  CHECK(summarize(back) == summarize(sample_records()));
}

TEST_CASE("csv round trip keeps the summary") {
  std::stringstream ss;
  Writer w(ss, Format::Csv);
  for (const auto& r : sample_records()) w.write(r);
  CHECK(ss.str().rfind("kind,row,quantity,printed,computed,deviation,status,failed_constraints,witness\n", 0) == 0);
  const auto back = read_records(ss);
  REQUIRE(back.size() == 3);
  CHECK(back[1]["row"] == "3, with comma");
  CHECK(back[1]["failed_constraints"] == "alpha_below_half");
  CHECK(back[2]["row"] == "\"quoted\"");
  CHECK(summarize(back) == summarize(sample_records()));
}

TEST_CASE("summary lines") {
  const std::string s = summarize(sample_records());
  CHECK(s.find("table: records=2 pass=1 fail=1 inconclusive=0 info=0") != std::string::npos);
  CHECK(s.find("trig_criteria: records=1 pass=0 fail=0 inconclusive=0 info=1") != std::string::npos);
  CHECK(s.find("overall: fail (first failure: table 3, with comma)") != std::string::npos);
  CHECK(summarize({}) == "overall: pass\n");
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
}
