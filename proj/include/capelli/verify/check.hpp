#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "capelli/verify/report.hpp"

namespace capelli {

// Per-check resource bounds. Exceeding any of them turns the check into a skip.
struct Budget {
  std::size_t max_tensor_dim = 4096;
  std::size_t max_terms = 5'000'000;
  double time_budget_ms = 600'000;
};

class CheckContext {
 public:
  explicit CheckContext(Budget budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  const Budget& budget() const { return budget_; }
  // Each throws ResourceExceeded with a reason naming the bound.
  void require_dim(std::size_t dim) const;
  void require_terms(std::size_t terms) const;
  void checkpoint() const;
  double elapsed_ms() const;

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
};

using ParamMap = std::map<std::string, std::string>;

struct ParamSpec {
  std::string name;
  std::string default_value;
  std::string help;
};

struct CheckDef {
  std::string id;
  std::string summary;
  std::vector<ParamSpec> params;
  // Negative controls: expected to fail, never part of the default grid.
  bool mutation = false;
  std::function<void(const ParamMap&, CheckContext&, CheckReport&)> run;
};

// All checks, in listing order.
const std::vector<CheckDef>& registry();
// Throws UsageError for an unknown id.
const CheckDef& find_check(const std::string& id);
// Fills defaults; throws UsageError for keys outside the schema.
ParamMap resolve_params(const CheckDef& def, const ParamMap& given);

// Runs one check. Precondition violations propagate as UsageError; resource overruns become
// status=skipped with the reason recorded.
CheckReport run_check(const std::string& id, const ParamMap& params = {}, const Budget& budget = {});

// The caveat attached to every report whose algebra has an H matrix or scalar.
extern const char* const kCentralHNote;

}  // namespace capelli
