#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capelli/verify/check.hpp"

namespace capelli {

struct SuiteEntry {
  std::string id;
  ParamMap params;
};

// Parsed suite configuration. The YAML document has flat keys for the bounds and a `checks` list:
//
//   parallelism: 2
//   seed: 7
//   max_tensor_dim: 4096
//   max_terms: 5000000
//   time_budget_ms: 600000
//   default_grid: false
//   checks:
//     - id: huks-even
//       params: {n: 4}
//     - id: lemma-claim
//       grid: {n: [2, 3], r: [3, 4]}
//
// A `grid` expands to the cartesian product of its value lists, on top of the fixed `params`.
struct SuiteConfig {
  int parallelism = 1;
  // Injected as the `seed` parameter of checks that have one, unless the entry sets it.
  std::uint64_t seed = 1;
  Budget budget;
  std::vector<SuiteEntry> checks;
};

// Throws UsageError for malformed documents, unknown keys, unknown check ids or parameters.
SuiteConfig parse_suite_config(const std::string& yaml_text);
SuiteConfig load_suite_config(const std::string& path);

// Every non-mutation check over the parameter ranges the test plan asks for.
std::vector<SuiteEntry> default_grid();
SuiteConfig default_suite_config();

// Environment variable naming the config used when none is given on the command line.
inline constexpr const char* kSuiteConfigEnv = "CAPELLI_SUITE_CONFIG";

struct SuiteSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t total() const { return pass + fail + skipped; }
};

struct SuiteResult {
  std::vector<CheckReport> reports;  // in the declared order
  SuiteSummary summary;
};

SuiteSummary summarize(const std::vector<CheckReport>& reports);

// Runs the entries on `parallelism` worker threads. A UsageError from any entry is rethrown after
// all workers stop.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace capelli
