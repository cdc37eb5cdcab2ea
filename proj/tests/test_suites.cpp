#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "compres/suites.hpp"

using namespace compres;
using namespace compres::verify;

namespace {

SuiteConfig small() {
  SuiteConfig c;
  c.nmax = 5;
  c.lmax = 4;
  c.oracle_cutoff = 4;
  c.ranks = {1};
  c.window = 1;
  c.specs = {engine::ground_field(), engine::group_algebra(2)};
  c.engine_cutoff = 2;
  c.random_pairs = 20;
  c.random_length = 4;
  return c;
}

}  // namespace

TEST_CASE("suite sizes") {
  SuiteConfig c = small();
  CHECK(clozel_suite(c).cases.size() == 8);
  c.nmax = 1;
  const Report comm = commutator_suite(c);
  CHECK(comm.pass());
  // closed form and alternative form for -5..1, R identity for 1.
  CHECK(comm.cases.size() == 2 * 7 + 1);
  c.lmax = 2;
  // two fixed values plus one sweep per w in {e, s, t, st, ts}
  CHECK(rpoly_suite(c).cases.size() == 7);
}

TEST_CASE("every suite passes on a small configuration") {
  const SuiteConfig c = small();
  for (const auto& name : suite_names()) {
    const Report r = run_suite(name, c);
    CHECK_MESSAGE(r.pass(), name);
    CHECK_MESSAGE(!r.cases.empty(), name);
    CHECK(r.failures() == 0);
  }
}

TEST_CASE("all concatenates with prefixes") {
  const Report r = run_suite("all", small());
  CHECK(r.suite == "all");
  std::size_t total = 0;
  for (const auto& name : suite_names()) total += run_suite(name, small()).cases.size();
  CHECK(r.cases.size() == total);
  CHECK(r.cases.front().id.find('.') != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  const SuiteConfig c = small();
  for (auto fmt : {Format::Text, Format::Json, Format::Csv}) {
    CHECK(render(hh0_suite(c), fmt) == render(hh0_suite(c), fmt));
    CHECK(render(hecke_suite(c), fmt) == render(hecke_suite(c), fmt));
  }
  SuiteConfig other = c;
  other.seed = c.seed + 1;
  CHECK(render(hh0_suite(c), Format::Json) != render(hh0_suite(other), Format::Json));
}

TEST_CASE("report formats") {
  Report r;
  r.suite = "demo";
  r.seed = 7;
  r.add({"one", "a claim", {{"n", "1"}}, "0", "0", true});
  r.add({"two", "b, \"quoted\"", {}, "1", "2", false});
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == 1);

  const auto j = nlohmann::json::parse(render(r, Format::Json));
  CHECK(j["suite"] == "demo");
  CHECK(j["seed"] == 7);
  CHECK(j["pass"] == false);
  REQUIRE(j["cases"].size() == 2);
  CHECK(j["cases"][0]["paper_anchor"] == "a claim");
  CHECK(j["cases"][0]["params"]["n"] == "1");
  CHECK(j["cases"][1]["actual"] == "2");

  const std::string csv = render(r, Format::Csv);
  CHECK(csv.rfind("suite,seed,id,paper_anchor,params,expected,actual,pass\n", 0) == 0);
  CHECK(csv.find("\"b, \"\"quoted\"\"\"") != std::string::npos);

  const std::string text = render(r, Format::Text);
  CHECK(text.find("PASS one") != std::string::npos);
  CHECK(text.find("FAIL two") != std::string::npos);
  CHECK(text.find("1/2 passed") != std::string::npos);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(run_suite("nonsense", small()), ConfigError);
  SuiteConfig c = small();
  c.ranks = {4};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small();
  c.nmax = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_THROWS_AS(parse_format("yaml"), ConfigError);
  CHECK(parse_format("csv") == Format::Csv);
}

TEST_CASE("ranges") {
  CHECK(parse_range("0..14") == std::pair{0, 14});
  CHECK(parse_range("-3..2") == std::pair{-3, 2});
  CHECK_THROWS_AS(parse_range("3..1"), ConfigError);
  CHECK_THROWS_AS(parse_range("3"), ConfigError);
  CHECK_THROWS_AS(parse_range("a..b"), ConfigError);
}

TEST_CASE("tables") {
  const Table rp = make_table("rpoly", 0, 3);
  CHECK(rp.rows.size() == 4);
  const Table cm = make_table("commutator", -1, 2);
  CHECK(cm.rows.size() == 4);
  const Table pr = make_table("pres", 0, 2);
  CHECK(pr.rows.size() == 3);
  CHECK_THROWS_AS(make_table("hecke", 0, 1), ConfigError);
  const std::string csv = render(rp, Format::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
