#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bihyp/bihyperbolic.hpp"
#include "bihyp/error.hpp"
#include "bihyp/gauge.hpp"
#include "bihyp/json_io.hpp"
#include "bihyp/metric.hpp"
#include "bihyp/seminorm.hpp"
#include "bihyp/verifier.hpp"

using bihyp::Json;

namespace {

struct CliConfig {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  double tol = 1e-9;
  std::size_t truncation = bihyp::kDefaultTruncation;
};

/// A JSON literal, a path to a JSON file, or (for numbers) canonical text.
Json read_operand(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return Json::parse(buf.str());
    } catch (const Json::exception& e) {
      throw bihyp::Error(bihyp::ErrorCode::InvalidInput, arg + " is not valid JSON: " + e.what());
    }
  }
  try {
    return Json::parse(arg);
  } catch (const Json::exception&) {
    return Json(arg);
  }
}

bihyp::Bihyperbolic read_number(const std::string& arg) { return bihyp::number_from_json(read_operand(arg)); }

bihyp::HVector read_vector(const std::string& arg) { return bihyp::hvector_from_json(read_operand(arg)); }

void print_number(const bihyp::Bihyperbolic& b, const CliConfig& cfg) {
  if (cfg.format == "plain") {
    std::cout << bihyp::to_canonical_string(b) << '\n';
  } else {
    std::cout << bihyp::number_to_json(b).dump() << '\n';
  }
}

void print(const Json& j, const CliConfig& cfg) {
  std::cout << (cfg.format == "plain" ? j.dump(2) : j.dump()) << '\n';
}

void print_verify_plain(const bihyp::VerifyReport& r) {
  std::cout << "seed " << r.options.seed << ", trials " << r.options.trials << '\n';
  for (const auto& p : r.results) {
    std::cout << p.id << ' ' << bihyp::verdict_name(p.outcome.report.verdict) << " expected "
              << (p.expected ? std::string(bihyp::expectation_name(*p.expected)) : std::string("-"))
              << (p.as_expected() ? "" : "  UNEXPECTED") << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bihyperbolic numbers, H2-valued seminorms, gauges and a property verifier"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "plain"}));
  auto* seed_opt = app.add_option("--seed", cfg.seed, "Random seed (default 0, or BIHYP_SEED)");
  app.add_option("--trials", cfg.trials, "Trials per check")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "Relative slack for inequality checks")->check(CLI::PositiveNumber);
  app.add_option("--truncation", cfg.truncation, "Number of metric series terms")->check(CLI::PositiveNumber);

  std::string a;
  std::string b;
  std::string c;

  auto* canon = app.add_subcommand("canon", "Canonical coordinates of a number");
  canon->add_option("number", a)->required();
  auto* idem = app.add_subcommand("idem", "Idempotent coordinates of a number");
  idem->add_option("number", a)->required();
  std::vector<std::string> factors;
  auto* mul = app.add_subcommand("mul", "Product of two or more numbers");
  mul->add_option("numbers", factors)->required()->expected(2, -1);
  auto* inv = app.add_subcommand("inv", "Multiplicative inverse");
  inv->add_option("number", a)->required();
  auto* mod = app.add_subcommand("mod", "H2-valued modulus");
  mod->add_option("number", a)->required();
  auto* order = app.add_subcommand("order", "Compare two numbers in the partial order");
  order->add_option("a", a)->required();
  order->add_option("b", b)->required();
  auto* gauge = app.add_subcommand("gauge", "H2-valued gauge of a product set at a point");
  gauge->add_option("set", a)->required();
  gauge->add_option("point", b)->required();
  auto* seval = app.add_subcommand("seminorm-eval", "Evaluate a seminorm at a vector");
  seval->add_option("seminorm", a)->required();
  seval->add_option("vector", b)->required();
  auto* metric = app.add_subcommand("metric", "Metric induced by a seminorm family");
  metric->add_option("family", a)->required();
  metric->add_option("x", b)->required();
  metric->add_option("y", c)->required();

  auto* verify = app.add_subcommand("verify", "Run registered property checks");
  std::string id;
  std::string instance;
  std::string suite;
  bool list = false;
  bool timing = false;
  verify->add_option("--id", id, "Property id");
  verify->add_option("--instance", instance, "Instance JSON or file (requires --id)")->needs(verify->get_option("--id"));
  verify->add_option("--suite", suite, "Suite config file")->excludes(verify->get_option("--id"));
  verify->add_flag("--list", list, "Print the property registry");
  verify->add_flag("--timing", timing, "Include wall time per result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << "usage error: a subcommand is required\n" << app.help();
    return 2;
  }

  const char* env = std::getenv("BIHYP_SEED");
  if (seed_opt->count() == 0 && env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || *env == '-') {
      std::cerr << "usage error: BIHYP_SEED must be a nonnegative integer\n";
      return 2;
    }
    cfg.seed = v;
  }

  try {
    if (*canon) {
      const auto x = read_number(a);
      if (cfg.format == "plain") {
        std::cout << bihyp::to_canonical_string(x) << '\n';
      } else {
        const auto cc = x.to_canonical();
        std::cout << Json{{"canonical", {cc.x, cc.y, cc.z, cc.w}}, {"text", bihyp::to_canonical_string(x)}}.dump()
                  << '\n';
      }
    } else if (*idem) {
      const auto& l = read_number(a).lambda();
      print(Json{{"idempotent", l}}, cfg);
    } else if (*mul) {
      bihyp::Bihyperbolic p = bihyp::Bihyperbolic::one();
      for (const auto& f : factors) p *= read_number(f);
      print_number(p, cfg);
    } else if (*inv) {
      print_number(bihyp::inverse(read_number(a)), cfg);
    } else if (*mod) {
      print_number(bihyp::modulus(read_number(a)), cfg);
    } else if (*order) {
      const auto x = read_number(a);
      const auto y = read_number(b);
      const auto rel = bihyp::compare(x, y);
      if (cfg.format == "plain") {
        std::cout << bihyp::ordering_name(rel.kind) << (rel.strict ? " (strict)" : "") << '\n';
      } else {
        print(Json{{"relation", bihyp::ordering_name(rel.kind)},
                   {"strict", rel.strict},
                   {"precedes", bihyp::precedes(x, y)},
                   {"strictly_precedes", bihyp::strictly_precedes(x, y)}},
              cfg);
      }
    } else if (*gauge) {
      const bihyp::H2Set s = bihyp::set_from_json(read_operand(a));
      print(bihyp::gauge_to_json(bihyp::h2_gauge(s.product(), read_vector(b), cfg.tol)), cfg);
    } else if (*seval) {
      const auto p = bihyp::seminorm_from_json(read_operand(a));
      print(Json{{"value", bihyp::number_to_json(bihyp::eval(p, read_vector(b)))}}, cfg);
    } else if (*metric) {
      const bihyp::H2Metric m{bihyp::family_from_json(read_operand(a)), cfg.truncation};
      print(Json{{"value", bihyp::number_to_json(bihyp::metric_eval(m, read_vector(b), read_vector(c)))},
                 {"truncation", cfg.truncation}},
            cfg);
    } else if (*verify) {
      if (list) {
        print(bihyp::registry_to_json(), cfg);
        return 0;
      }
      const bihyp::RunOptions opts{cfg.seed, cfg.trials, cfg.tol};
      bihyp::VerifyReport report;
      if (!suite.empty()) {
        report = bihyp::run_suite(suite);
      } else if (!id.empty() && !instance.empty()) {
        report = {opts, {bihyp::verify(id, read_operand(instance), opts)}};
      } else if (!id.empty()) {
        report = bihyp::run_default_suite(opts, {id});
      } else {
        report = bihyp::run_default_suite(opts);
      }
      if (cfg.format == "plain") {
        print_verify_plain(report);
      } else {
        std::cout << bihyp::verify_report_to_json(report, timing).dump() << '\n';
      }
      return report.all_as_expected() ? 0 : 1;
    }
  } catch (const bihyp::Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    std::cout << Json{{"error", e.name()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
