#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bihyp/json_io.hpp"
#include "bihyp/report.hpp"

namespace bihyp {

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  double tol = 1e-9;
};

enum class Expectation { Pass, Fail };

/// Verdict of a check together with whether its witness re-checked.
struct Outcome {
  CheckReport report;
  std::optional<bool> witness_reverified;
};

struct PropertyEntry {
  std::string id;
  /// Statement being checked, as a formula.
  std::string statement;
  std::vector<Json> default_instances;
  /// Expected verdict on an instance, when the registry can tell.
  std::function<std::optional<Expectation>(const Json&)> expectation;
  std::function<Outcome(const Json&, const RunOptions&)> run;
};

const std::vector<PropertyEntry>& registry();
/// Throws UnknownProperty.
const PropertyEntry& find_property(const std::string& id);

struct PropertyResult {
  std::string id;
  Json instance;
  Outcome outcome;
  std::optional<Expectation> expected;
  double wall_ms = 0.0;

  /// Verdict matches the expectation (Fail entries must also re-verify).
  [[nodiscard]] bool as_expected() const;
};

struct VerifyReport {
  RunOptions options;
  std::vector<PropertyResult> results;

  [[nodiscard]] bool all_as_expected() const;
};

/// Runs one property on one instance. A bare set descriptor is accepted as
/// {"set": descriptor}. Throws UnknownProperty or BadInstance.
PropertyResult verify(const std::string& id, const Json& instance, const RunOptions& options);

/// Every default instance of the listed properties (all when empty).
VerifyReport run_default_suite(const RunOptions& options, const std::vector<std::string>& ids = {});

/// Suite driven by a JSON config {"seed", "trials", "tol", "properties"}.
/// Throws ConfigError on an unreadable, empty or malformed config.
VerifyReport run_suite(const std::filesystem::path& config);
VerifyReport run_suite_config(const Json& config);

/// Wall time is left out unless requested so that reports are byte-stable.
Json result_to_json(const PropertyResult& r, bool include_time = false);
Json verify_report_to_json(const VerifyReport& r, bool include_time = false);
Json registry_to_json();

std::string_view expectation_name(Expectation e) noexcept;

}  // namespace bihyp
