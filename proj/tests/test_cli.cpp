#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" BIHYP_EXE "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parsed(const Run& r) { return nlohmann::json::parse(r.out); }

std::string instance_file() {
  const auto p = std::filesystem::temp_directory_path() / "bihyp_cli_t4.json";
  std::ofstream(p) << R"({"lambda_predicate":{"rule":"abs_sum_lt","c":2.0}})";
  return p.string();
}

}  // namespace

TEST_CASE("arithmetic subcommands") {
  const auto m = run("mul j1 j2");
  CHECK(m.code == 0);
  CHECK(parsed(m)["canonical"] == nlohmann::json::array({0.0, 0.0, 0.0, 1.0}));
  CHECK(run("--format plain mul j1 j2").out == "0 + 0 j1 + 0 j2 + 1 j3\n");
  const auto c = run("canon '[4,0,0,0]'");
  CHECK(parsed(c)["canonical"] == nlohmann::json::array({1.0, 1.0, 1.0, 1.0}));
  const auto i = run("inv e1");
  CHECK(i.code == 1);
  CHECK(parsed(i)["error"] == "NotInvertible");
  const auto o = run("order e1 e2");
  CHECK(parsed(o)["strictly_precedes"] == false);
  CHECK(parsed(run(R"(metric '[{"canonical_norm":2}]' 1 0)"))["value"]["canonical"][0] == 0.25);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("--trials 0 verify").code == 2);
  CHECK(run("verify --instance x.json").code == 2);
  CHECK(run("verify --id T1.scaling", "BIHYP_SEED=abc").code == 2);
  const auto u = run("verify --id NOPE");
  CHECK(u.code == 1);
  CHECK(parsed(u)["error"] == "UnknownProperty");
}

TEST_CASE("verify with an instance file") {
  const auto r = run("--trials 1000 verify --id T4.decomposition --instance " + instance_file());
  REQUIRE(r.code == 0);
  const auto j = parsed(r);
  CHECK(j["all_as_expected"] == true);
  CHECK(j["results"][0]["verdict"] == "Fail");
  CHECK(j["results"][0]["witness_reverified"] == true);
  CHECK(j["results"][0]["witness"]["points"][0]["comps"][0][0] == 0.75);
}

TEST_CASE("seeds") {
  CHECK(parsed(run("--seed 9 verify --id T1.scaling --trials 50"))["seed"] == 9);
  CHECK(parsed(run("verify --id T1.scaling --trials 50", "BIHYP_SEED=11"))["seed"] == 11);
  CHECK(parsed(run("--seed 5 verify --id T1.scaling --trials 50", "BIHYP_SEED=11"))["seed"] == 5);
}

TEST_CASE("listing and determinism") {
  const auto l = parsed(run("verify --list"));
  REQUIRE(l.is_array());
  CHECK(l.size() > 10);
  const auto a = run("--trials 200 verify");
  const auto b = run("--trials 200 verify");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(parsed(a)["results"][0].contains("wall_ms"));
  CHECK(parsed(run("--trials 20 verify --id T1.scaling --timing"))["results"][0].contains("wall_ms"));
}
