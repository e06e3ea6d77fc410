#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bilevel/series_io.hpp"
#include "bilevel/verifier.hpp"

using namespace bilevel;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("bilevel6_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("registry ids are unique and sorted") {
  const auto ids = check_ids();
  CHECK(ids.size() >= 60);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}

TEST_CASE("single checks") {
  FormCache forms;
  const CheckResult r = run_check("multiplicity.phi3.d1b1", 0, forms);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.expected == "1");
  CHECK(r.source == CheckSource::printed);
  CHECK_FALSE(r.seed.has_value());
  CHECK_THROWS_AS(run_check("unknown.check", 0, forms), Error);

  const CheckResult a = run_check("factorize.roundtrip", 42, forms), b = run_check("factorize.roundtrip", 42, forms);
  CHECK(a.status == CheckStatus::pass);
  REQUIRE(a.seed.has_value());
  CHECK(a.seed == b.seed);
  CHECK(a.actual == b.actual);
  CHECK(run_check("factorize.roundtrip", 43, forms).seed != a.seed);
}

TEST_CASE("subset report, determinism and summary tally") {
  FormCache f1, f2;
  const std::vector<std::string> ids = {"psl2.order", "jacobi.phi02.q0", "charpoly.zeta_samples", "psl2.order"};
  const Report r1 = run_checks(ids, 5, f1), r2 = run_checks(ids, 5, f2);
  REQUIRE(r1.checks.size() == 3);
  CHECK(r1.checks[0].id == "charpoly.zeta_samples");
  CHECK(r1.pass == 3);
  CHECK(r1.all_pass());
  CHECK(report_to_json(r1, false) == report_to_json(r2, false));
  CHECK_THROWS_AS(run_checks({"psl2.order", "bogus"}, 0, f1), Error);

  const auto j = nlohmann::json::parse(report_to_json(r1, true));
  CHECK(j["version"] == 1);
  CHECK(j["seed"] == 5);
  CHECK(j["summary"]["pass"] == 3);
  CHECK(j["checks"][0].contains("elapsed_ms"));
  CHECK_FALSE(nlohmann::json::parse(report_to_json(r1, false))["checks"][0].contains("elapsed_ms"));
}

TEST_CASE("corrupted cache produces a failure") {
  const auto dir = scratch_dir("cache");
  const auto written = build_cache(dir);
  CHECK(written.size() == cache_manifest().size());
  {
    FormCache warm(dir);
    CHECK(run_checks({"jacobi.phi02.q0", "lift_input.phi3.q0"}, 0, warm).all_pass());
  }
  const auto path = FormCache::file_for(dir, "phi02", kDefaultQprec);
  NamedSeries ns = read_series_file(path);
  QRSeries bad = ns.series;
  bad.add_term(0, 0, 1);
  write_series_file(path, "phi02", bad);
  FormCache corrupt(dir);
  const Report r = run_checks({"jacobi.phi02.q0", "lift_input.phi3.q0"}, 0, corrupt);
  CHECK(r.fail == 1);
  CHECK_FALSE(r.all_pass());
  CHECK(r.checks[0].actual == "r^-1 + 5 + r");

  std::ofstream(path) << "{not json";
  FormCache broken(dir);
  CHECK(run_check("jacobi.phi02.q0", 0, broken).status == CheckStatus::error);

  CHECK(clear_cache(dir) == static_cast<int>(cache_manifest().size()));
  CHECK(clear_cache(dir) == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("compact plus-minus rendering") {
  CHECK(display_series(standard_form("phi02", 2)) ==
        "(r^{±1}+4) + q(r^{±3}-8r^{±2}-r^{±1}+16) + O(q^{2})");
  CHECK(display_series(standard_form("phi3", 1)) == "(r^{±2}+6) + O(q^{1})");
  CHECK(display_slice(Slice{{-1, 1}, {0, -2}, {1, 1}}) == "r^{±1}-2");
  CHECK(display_slice(Slice{{-1, 3}, {2, -1}}) == "-r^{2}+3r^{-1}");
  CHECK(display_slice(Slice{}) == "0");
  CHECK(display_slice(Slice{{Rational(1, 2), 1}}) == "r^{1/2}");
}

TEST_CASE("expansions round-trip through the cache format") {
  for (const char* name : {"phi02", "phi3pp", "eta"}) {
    const QRSeries f = standard_form(name, 3);
    const NamedSeries back = series_from_json(series_to_json(name, f));
    CHECK(back.form == name);
    CHECK(back.series == f);
  }
}
