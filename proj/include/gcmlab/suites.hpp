#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace gcm {

// Shared knobs for the verification suites. lambda empty means the default
// spectrum (-1, -2, ..., -n). Every suite derives all randomness from seed via
// decorrelated per-trial streams, so reports are byte-identical across runs
// and across worker-thread counts.
struct SuiteConfig {
  int n = 2;
  std::vector<double> lambda;
  int trials = 20;
  double tol = 2e-5;       // commutativity threshold
  double fd_step = 1e-5;
  int order = 6;           // series truncation order
  std::uint64_t seed = 7;

  std::vector<double> lam() const;           // resolved spectrum
  nlohmann::ordered_json to_json() const;
  static SuiteConfig from_json(const nlohmann::json& j);  // throws ParseError
};

// Every run_* returns a report with "schema_version", "suite", "config",
// suite-specific payload, and a final boolean "pass".
nlohmann::ordered_json run_commute_suite(const SuiteConfig& cfg);
nlohmann::ordered_json run_independence_suite(const SuiteConfig& cfg);
nlohmann::ordered_json run_reduced_suite(const SuiteConfig& cfg);
nlohmann::ordered_json run_patterns_suite(const SuiteConfig& cfg);
nlohmann::ordered_json run_yangian_suite(const SuiteConfig& cfg);

// All of the above keyed by suite name, plus an aggregate "pass".
nlohmann::ordered_json run_all_suites(const SuiteConfig& cfg);

// Dispatch by name ("commute", "independence", "reduced", "patterns",
// "yangian", "all"); throws UnknownLabel otherwise.
nlohmann::ordered_json run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<std::string> suite_names();

}  // namespace gcm
