#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "bihyp/error.hpp"
#include "bihyp/verifier.hpp"

using namespace bihyp;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

const Json kCounterexample = Json::parse(R"({"lambda_predicate":{"rule":"abs_sum_lt","c":2.0}})");

}  // namespace

TEST_CASE("registry") {
  std::set<std::string> ids;
  for (const auto& e : registry()) {
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.default_instances.empty());
    CHECK_FALSE(e.statement.empty());
  }
  for (const char* id : {"T1.scaling", "T2.projection", "T4.decomposition", "T5.convexity", "T5-convexity-fail",
                         "T8.minkowski-sum", "T12.seminorm", "T14.unit-sets", "T15.gauge-seminorm", "S.sandwich",
                         "L.sup-family", "M.metric-axioms", "A.absorbing", "A.ei-stability"}) {
    CHECK(ids.count(id) == 1);
  }
  CHECK(error_of([] { (void)find_property("T99"); }) == ErrorCode::UnknownProperty);
  CHECK(registry_to_json().size() == registry().size());
}

TEST_CASE("counterexample sets fail as expected") {
  const RunOptions o{0, 1000, 1e-9};
  const auto d = verify("T4.decomposition", kCounterexample, o);
  CHECK(d.outcome.report.verdict == Verdict::Fail);
  CHECK(d.expected == Expectation::Fail);
  CHECK(d.outcome.witness_reverified == true);
  CHECK(d.as_expected());
  const auto c = verify("T5-convexity-fail", Json{{"set", kCounterexample}}, o);
  CHECK(c.outcome.report.verdict == Verdict::Fail);
  CHECK(c.as_expected());
  const auto s = verify("A.ei-stability", Json::parse(R"({"lambda_predicate":{"rule":"modulus_lt_or_one","c":0.5}})"), o);
  CHECK(s.outcome.report.verdict == Verdict::Fail);
  CHECK(s.as_expected());
}

TEST_CASE("instances from the statements pass") {
  const RunOptions o{0, 1000, 1e-9};
  const Json unit = Json::parse(R"({"product":{"ball":{"p":2,"r":1}},"dim":2})");
  CHECK(verify("T15.gauge-seminorm", unit, o).outcome.report.verdict == Verdict::SampledPass);
  Json j1 = Json::parse(R"({"set":{"product":{"ball":{"p":2,"r":1}},"dim":1},"lambdas":["j1"]})");
  const auto t1 = verify("T1.scaling", j1, o);
  CHECK(t1.outcome.report.verdict == Verdict::SampledPass);
  CHECK(t1.outcome.report.trials == 1000);
}

TEST_CASE("explicit expectations override the registry") {
  const RunOptions o{0, 200, 1e-9};
  Json inst{{"set", kCounterexample}, {"expect", "pass"}};
  const auto r = verify("T4.decomposition", inst, o);
  CHECK(r.expected == Expectation::Pass);
  CHECK_FALSE(r.as_expected());
  inst["expect"] = "maybe";
  CHECK(error_of([&] { (void)verify("T4.decomposition", inst, o); }) == ErrorCode::BadInstance);
}

TEST_CASE("bad instances") {
  const RunOptions o{0, 100, 1e-9};
  CHECK(error_of([&] { (void)verify("T1.scaling", Json::parse(R"({"set":{"product":3}})"), o); }) ==
        ErrorCode::BadInstance);
  CHECK(error_of([&] { (void)verify("T12.seminorm", Json::parse(R"({"dim":1})"), o); }) == ErrorCode::BadInstance);
  CHECK(error_of([&] { (void)verify("T1.scaling", Json::parse("[]"), o); }) == ErrorCode::BadInstance);
  CHECK(error_of([&] { (void)verify("T1.scaling", kCounterexample, o); }) == ErrorCode::BadInstance);
  CHECK(error_of([&] { (void)verify("nope", kCounterexample, o); }) == ErrorCode::UnknownProperty);
}

TEST_CASE("default suite is green and deterministic") {
  const RunOptions o{0, 300, 1e-9};
  const auto a = run_default_suite(o);
  CHECK(a.all_as_expected());
  for (const auto& r : a.results) {
    INFO(r.id);
    CHECK(r.as_expected());
    if (!r.outcome.report.passed()) CHECK(r.outcome.witness_reverified == true);
  }
  const auto b = run_default_suite(o);
  CHECK(verify_report_to_json(a).dump() == verify_report_to_json(b).dump());

  const auto other = run_default_suite({12345, 300, 1e-9});
  REQUIRE(other.results.size() == a.results.size());
  for (std::size_t k = 0; k < a.results.size(); ++k) {
    CHECK(other.results[k].outcome.report.passed() == a.results[k].outcome.report.passed());
  }
}

TEST_CASE("report json") {
  const auto r = verify("T4.decomposition", kCounterexample, {0, 100, 1e-9});
  const Json j = result_to_json(r);
  for (const char* key : {"id", "instance", "expected", "verdict", "as_expected", "trials", "seed", "witness",
                          "witness_reverified"}) {
    CHECK(j.contains(key));
  }
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(result_to_json(r, true).contains("wall_ms"));
  CHECK(j["expected"] == "Fail");
  CHECK(j["witness"]["kind"] == "Decomposition");
}

TEST_CASE("suite configs") {
  const auto ok = write_temp("bihyp_suite_ok.json", R"({"seed":3,"trials":200,"properties":["T4.decomposition"]})");
  const auto r = run_suite(ok);
  CHECK(r.options.seed == 3);
  CHECK(r.results.size() == find_property("T4.decomposition").default_instances.size());
  CHECK(r.all_as_expected());

  CHECK(error_of([] { (void)run_suite(write_temp("bihyp_suite_empty.json", "")); }) == ErrorCode::ConfigError);
  CHECK(error_of([] { (void)run_suite(write_temp("bihyp_suite_obj.json", "{}")); }) == ErrorCode::ConfigError);
  CHECK(error_of([] { (void)run_suite(write_temp("bihyp_suite_bad.json", "{seed")); }) == ErrorCode::ConfigError);
  CHECK(error_of([] { (void)run_suite(write_temp("bihyp_suite_key.json", R"({"sed":1})")); }) ==
        ErrorCode::ConfigError);
  CHECK(error_of([] { (void)run_suite(write_temp("bihyp_suite_trials.json", R"({"trials":0})")); }) ==
        ErrorCode::ConfigError);
  CHECK(error_of([] { (void)run_suite("/nonexistent/bihyp.json"); }) == ErrorCode::ConfigError);
  CHECK(error_of([] { (void)run_suite_config(Json::parse(R"({"properties":["X"]})")); }) ==
        ErrorCode::UnknownProperty);
}
