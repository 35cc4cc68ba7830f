#include "capelli/verify/suite.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "capelli/exactalg/errors.hpp"

namespace capelli {

namespace {

std::string scalar_text(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) throw UsageError(what + " must be a scalar");
  return node.Scalar();
}

template <typename T>
T scalar_as(const YAML::Node& node, const std::string& what) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw UsageError(what + " has the wrong type");
  }
}

// Flow sequences such as [2,1] are kept as parameter text rather than treated as grid axes.
std::string param_text(const YAML::Node& node, const std::string& what) {
  if (node.IsScalar()) return node.Scalar();
  if (node.IsSequence()) {
    YAML::Emitter out;
    out << YAML::Flow << node;
    std::string s = out.c_str();
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
  }
  throw UsageError(what + " must be a scalar or a list");
}

void expand_grid(const std::vector<std::pair<std::string, std::vector<std::string>>>& axes, std::size_t k, ParamMap& current,
                 const std::string& id, std::vector<SuiteEntry>& out) {
  if (k == axes.size()) {
    out.push_back({id, current});
    return;
  }
  for (const auto& value : axes[k].second) {
    current[axes[k].first] = value;
    expand_grid(axes, k + 1, current, id, out);
  }
  current.erase(axes[k].first);
}

void parse_entry(const YAML::Node& node, std::size_t index, std::vector<SuiteEntry>& out) {
  const std::string where = "checks[" + std::to_string(index) + "]";
  if (!node.IsMap()) throw UsageError(where + " must be a mapping");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (key != "id" && key != "params" && key != "grid") throw UsageError(where + ": unknown key '" + key + "'");
  }
  if (!node["id"]) throw UsageError(where + ": missing id");
  const std::string id = scalar_text(node["id"], where + ".id");
  const CheckDef& def = find_check(id);
  ParamMap fixed;
  if (const auto params = node["params"]) {
    if (!params.IsMap()) throw UsageError(where + ".params must be a mapping");
    for (const auto& kv : params) {
      const std::string key = kv.first.as<std::string>();
      fixed[key] = param_text(kv.second, where + ".params." + key);
    }
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  if (const auto grid = node["grid"]) {
    if (!grid.IsMap()) throw UsageError(where + ".grid must be a mapping");
    for (const auto& kv : grid) {
      const std::string key = kv.first.as<std::string>();
      if (!kv.second.IsSequence() || kv.second.size() == 0) throw UsageError(where + ".grid." + key + " must be a non-empty list");
      std::vector<std::string> values;
      for (const auto& v : kv.second) values.push_back(param_text(v, where + ".grid." + key));
      axes.emplace_back(key, std::move(values));
    }
  }
  std::vector<SuiteEntry> expanded;
  expand_grid(axes, 0, fixed, id, expanded);
  for (auto& e : expanded) {
    resolve_params(def, e.params);
    out.push_back(std::move(e));
  }
}

// Builder for the default grid.
class Grid {
 public:
  Grid& add(const std::string& id, ParamMap params = {}) {
    entries_.push_back({id, std::move(params)});
    return *this;
  }
  std::vector<SuiteEntry> take() { return std::move(entries_); }

 private:
  std::vector<SuiteEntry> entries_;
};

const std::vector<std::string> kHmodes{"symbolic", "identity", "scalar-h"};

std::string str(int v) { return std::to_string(v); }

}  // namespace

SuiteConfig parse_suite_config(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw UsageError(std::string("malformed suite config: ") + e.what());
  }
  SuiteConfig config;
  if (root.IsNull()) return config;
  if (!root.IsMap()) throw UsageError("suite config must be a mapping");
  static const std::set<std::string> known{"parallelism", "seed", "max_tensor_dim", "max_terms", "time_budget_ms", "default_grid", "checks"};
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (!known.count(key)) throw UsageError("unknown suite config key '" + key + "'");
  }
  if (root["parallelism"]) config.parallelism = scalar_as<int>(root["parallelism"], "parallelism");
  if (config.parallelism < 1) throw UsageError("parallelism must be >= 1");
  if (root["seed"]) config.seed = scalar_as<std::uint64_t>(root["seed"], "seed");
  if (root["max_tensor_dim"]) config.budget.max_tensor_dim = scalar_as<std::size_t>(root["max_tensor_dim"], "max_tensor_dim");
  if (root["max_terms"]) config.budget.max_terms = scalar_as<std::size_t>(root["max_terms"], "max_terms");
  if (root["time_budget_ms"]) config.budget.time_budget_ms = scalar_as<double>(root["time_budget_ms"], "time_budget_ms");
  if (root["default_grid"] && scalar_as<bool>(root["default_grid"], "default_grid")) config.checks = default_grid();
  if (const auto checks = root["checks"]) {
    if (!checks.IsSequence()) throw UsageError("checks must be a list");
    for (std::size_t k = 0; k < checks.size(); ++k) parse_entry(checks[k], k, config.checks);
  }
  return config;
}

SuiteConfig load_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read suite config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_suite_config(ss.str());
}

std::vector<SuiteEntry> default_grid() {
  Grid g;
  for (int n = 1; n <= 3; ++n) g.add("classical-capelli", {{"n", str(n)}});

  for (const auto& h : kHmodes) {
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m)
        for (int s = 1; s <= 2; ++s)
          for (int r = 1; r <= 3; ++r)
            g.add("capelli-general", {{"n", str(n)}, {"m", str(m)}, {"s", str(s)}, {"r", str(r)}, {"hmode", h}});
    g.add("capelli-general", {{"n", "3"}, {"m", "2"}, {"s", "2"}, {"r", "2"}, {"hmode", h}});
    g.add("capelli-general", {{"n", "2"}, {"m", "3"}, {"s", "2"}, {"r", "2"}, {"hmode", h}});
  }

  for (const auto* id : {"williamson", "okounkov"})
    for (const auto& h : kHmodes)
      for (const auto* shape : {"[1]", "[2]", "[1,1]", "[3]", "[2,1]", "[1,1,1]"}) g.add(id, {{"lambda", shape}, {"hmode", h}});

  for (const auto* id : {"turnbull-sym", "turnbull-anti"})
    for (const auto& h : kHmodes)
      for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m)
          for (int r = 1; r <= std::min(n, 3); ++r) g.add(id, {{"n", str(n)}, {"m", str(m)}, {"r", str(r)}, {"hmode", h}});

  g.add("huks-even", {{"n", "2"}}).add("huks-even", {{"n", "4"}});
  for (const auto* side : {"X", "Y"}) g.add("huks-odd", {{"n", "1"}, {"side", side}}).add("huks-odd", {{"n", "3"}, {"side", side}});

  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {2, 4}, {3, 3}, {3, 1}, {1, 3}})
    g.add("pfaffian-laplace", {{"m", str(m)}, {"n", str(n)}});
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{4, 2}, {3, 1}, {2, 2}, {3, 3}, {2, 4}, {1, 3}})
    g.add("pfaffian-corollary", {{"m", str(m)}, {"n", str(n)}});
  g.add("pfaffian-congruence", {{"n", "4"}}).add("pfaffian-permutation", {{"n", "4"}});
  g.add("pfaffian-alternating", {{"n", "4"}, {"r", "2"}});
  g.add("pfaffian-minor-sums", {{"n", "4"}, {"p", "all"}});
  g.add("pfaffian-fg-action", {{"m", "2"}, {"n", "2"}}).add("pfaffian-fg-action", {{"m", "2"}, {"n", "4"}});
  g.add("pfaffian-definition", {{"size", "all"}});

  for (const auto* kind : {"sym", "anti"})
    for (int n = 1; n <= 3; ++n)
      for (int r = 2; r <= 3; ++r) g.add("lemma-axq-sxq", {{"kind", kind}, {"n", str(n)}, {"r", str(r)}, {"i", "all"}});
  for (int n = 1; n <= 3; ++n)
    for (int r = 3; r <= 4; ++r) g.add("lemma-claim", {{"n", str(n)}, {"r", str(r)}, {"triple", "all"}});
  for (int m = 2; m <= 4; ++m) g.add("lemma-huks-exp", {{"n", "4"}, {"m", str(m)}});
  g.add("lemma-huks-phi-psi", {{"n", "4"}, {"p", "all"}});
  for (const auto* side : {"X", "Y"})
    for (int m = 2; m <= 3; ++m) g.add("lemma-odd-exp", {{"n", "3"}, {"m", str(m)}, {"side", side}});
  g.add("lemma-odd-anti", {{"n", "3"}, {"k", "1"}});

  g.add("engine-associativity").add("engine-idempotence").add("engine-symmetry");
  for (const auto& h : kHmodes) g.add("engine-derived-xh", {{"hmode", h}});
  g.add("engine-derived-xh", {{"n", "3"}, {"m", "3"}, {"s", "2"}});
  g.add("cross-coldet-antisym").add("cross-permanent-sym").add("cross-character-trace");
  return g.take();
}

SuiteConfig default_suite_config() {
  SuiteConfig config;
  config.checks = default_grid();
  return config;
}

SuiteSummary summarize(const std::vector<CheckReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case CheckStatus::Pass: ++s.pass; break;
      case CheckStatus::Fail: ++s.fail; break;
      case CheckStatus::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

SuiteResult run_suite(const SuiteConfig& config) {
  const std::size_t count = config.checks.size();
  std::vector<CheckReport> reports(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        const SuiteEntry& entry = config.checks[k];
        ParamMap params = entry.params;
        const CheckDef& def = find_check(entry.id);
        for (const auto& p : def.params)
          if (p.name == "seed" && !params.count("seed")) params["seed"] = std::to_string(config.seed);
        reports[k] = run_check(entry.id, params, config.budget);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(config.parallelism, 1)), std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  SuiteResult result;
  result.reports = std::move(reports);
  result.summary = summarize(result.reports);
  return result;
}

}  // namespace capelli
