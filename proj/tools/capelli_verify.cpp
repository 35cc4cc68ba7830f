// Command-line front end for the identity checks.
//
//   capelli-verify list [--json]
//   capelli-verify check <id> [--<param> <value>]... [--json]
//   capelli-verify suite [--config path] [--json path] [--jobs n]
//   capelli-verify --model-notes
//
// Exit status: 0 when nothing failed, 1 when some check failed, 2 on usage or config errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "capelli/exactalg/errors.hpp"
#include "capelli/verify/check.hpp"
#include "capelli/verify/suite.hpp"

namespace {

using namespace capelli;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string params_text(const ParamMap& params) {
  std::string s;
  for (const auto& [k, v] : params) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

std::string status_tag(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "?";
}

void print_line(std::ostream& out, const CheckReport& r) {
  std::ostringstream ms;
  ms.precision(1);
  ms << std::fixed << r.elapsed_ms;
  out << status_tag(r.status) << "  " << r.check_id << "  " << params_text(r.params) << "  (" << ms.str() << " ms)\n";
  if (r.witness) {
    const auto& w = *r.witness;
    out << "      witness " << w.monomial << ": lhs " << w.lhs_coefficient << ", rhs " << w.rhs_coefficient;
    const auto& loc = w.location;
    if (!loc.sigma.empty() || !loc.out_index.empty() || !loc.in_index.empty())
      out << " at [" << loc.sigma << "] " << loc.out_index << " " << loc.in_index;
    out << "\n";
  }
  if (r.status == CheckStatus::Skipped) out << "      " << r.skip_reason << "\n";
}

void print_report(std::ostream& out, const CheckReport& r) {
  print_line(out, r);
  out << "      terms lhs " << r.term_counts.lhs << ", rhs " << r.term_counts.rhs << "\n";
  for (const auto& note : r.model_notes) out << "      note: " << note << "\n";
}

// "--key value" or "--key=value" pairs left over after CLI11 parsing.
ParamMap parse_param_args(const std::vector<std::string>& extras) {
  ParamMap out;
  for (std::size_t k = 0; k < extras.size(); ++k) {
    const std::string& arg = extras[k];
    if (arg.rfind("--", 0) != 0 || arg.size() < 3) throw UsageError("unexpected argument '" + arg + "'");
    std::string key = arg.substr(2), value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (k + 1 >= extras.size()) throw UsageError("parameter --" + key + " needs a value");
      value = extras[++k];
    }
    if (out.count(key)) throw UsageError("parameter --" + key + " given twice");
    out[key] = value;
  }
  return out;
}

int cmd_list(bool json) {
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& def : registry()) {
      nlohmann::json params = nlohmann::json::array();
      for (const auto& p : def.params) params.push_back({{"name", p.name}, {"default", p.default_value}, {"help", p.help}});
      arr.push_back({{"id", def.id}, {"summary", def.summary}, {"mutation", def.mutation}, {"params", params}});
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& def : registry()) {
    std::cout << def.id << (def.mutation ? "  [negative control]" : "") << "\n    " << def.summary << "\n";
    for (const auto& p : def.params) std::cout << "    --" << p.name << " (default " << p.default_value << "): " << p.help << "\n";
  }
  return 0;
}

int cmd_check(const std::string& id, const std::vector<std::string>& extras, bool json) {
  const CheckReport r = run_check(id, parse_param_args(extras));
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    print_report(std::cout, r);
  return r.status == CheckStatus::Fail ? kExitFail : 0;
}

int cmd_suite(const std::string& config_path, const std::string& json_path, int jobs) {
  SuiteConfig config;
  if (!config_path.empty()) {
    config = load_suite_config(config_path);
  } else if (const char* env = std::getenv(kSuiteConfigEnv); env && *env) {
    config = load_suite_config(env);
  } else {
    config = default_suite_config();
  }
  if (jobs > 0) config.parallelism = jobs;
  const SuiteResult result = run_suite(config);
  for (const auto& r : result.reports) print_line(std::cout, r);
  const auto& s = result.summary;
  std::cout << "summary: " << s.total() << " checks, " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
  if (!json_path.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : result.reports) arr.push_back(to_json(r));
    const std::string text = arr.dump(2) + "\n";
    if (json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(json_path);
      if (!out) throw UsageError("cannot write '" + json_path + "'");
      out << text;
    }
  }
  return s.fail > 0 ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Capelli-type identities"};
  app.require_subcommand(0, 1);
  bool model_notes = false;
  app.add_flag("--model-notes", model_notes, "Print the modeling caveat attached to reports");

  auto* list = app.add_subcommand("list", "List checks and their parameters");
  bool list_json = false;
  list->add_flag("--json", list_json, "Machine-readable listing");

  auto* check = app.add_subcommand("check", "Run one check; parameters are passed as --name value");
  std::string check_id;
  bool check_json = false;
  check->add_option("id", check_id, "Check id")->required();
  check->add_flag("--json", check_json, "Print the report as JSON");
  check->allow_extras();

  auto* suite = app.add_subcommand("suite", "Run a suite of checks");
  std::string config_path, json_path;
  int jobs = 0;
  suite->add_option("--config", config_path, std::string("YAML suite config; defaults to $") + kSuiteConfigEnv + " or the built-in grid");
  suite->add_option("--json", json_path, "Write the reports as a JSON array to this path ('-' for stdout)");
  suite->add_option("--jobs", jobs, "Worker threads, overriding the config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (model_notes) {
      std::cout << kCentralHNote << "\n";
      return 0;
    }
    if (*list) return cmd_list(list_json);
    if (*check) return cmd_check(check_id, check->remaining(), check_json);
    if (*suite) return cmd_suite(config_path, json_path, jobs);
    std::cout << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
