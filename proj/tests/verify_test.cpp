#include <random>
#include <set>

#include <gtest/gtest.h>

#include "capelli/exactalg/errors.hpp"
#include "capelli/verify/check.hpp"
#include "capelli/verify/report.hpp"
#include "capelli/verify/suite.hpp"

using namespace capelli;
using nlohmann::json;

namespace {

CheckReport sample_report(bool failing) {
  CheckReport r;
  r.check_id = "huks-even";
  r.params = {{"n", "4"}};
  r.status = failing ? CheckStatus::Fail : CheckStatus::Pass;
  if (failing) r.witness = Witness{"X[1,1]*h*Y[1,2]", "-1", "0", {"(1,2)", "(1,2)", "(2,1)"}};
  r.term_counts = {12, 11};
  r.elapsed_ms = 3.25;
  r.model_notes = {"algebra HUKS(n=4,antisym=Y;H=scalar-h)"};
  return r;
}

std::string random_text(std::mt19937_64& rng) {
  static const std::string alphabet = "abcXYZ019[](),*^ =-/";
  std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, alphabet.size() - 1);
  std::string s(len(rng), ' ');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

}  // namespace

// ---------------------------------------------------------------- report schema

TEST(Report, JsonRoundTrip) {
  for (bool failing : {false, true}) {
    const CheckReport r = sample_report(failing);
    const json j = to_json(r);
    EXPECT_TRUE(validate_report_json(j).empty());
    EXPECT_EQ(report_from_json(j), r);
  }
  EXPECT_TRUE(to_json(sample_report(false))["witness"].is_null());
}

TEST(Report, RoundTripPropertyOnRandomContent) {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> status(0, 2), count(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    CheckReport r;
    r.check_id = "c" + random_text(rng);
    for (int k = count(rng); k > 0; --k) r.params[random_text(rng)] = random_text(rng);
    r.status = static_cast<CheckStatus>(status(rng));
    if (r.status == CheckStatus::Fail)
      r.witness = Witness{random_text(rng), random_text(rng), random_text(rng), {random_text(rng), random_text(rng), random_text(rng)}};
    if (r.status == CheckStatus::Skipped) r.skip_reason = random_text(rng);
    r.term_counts = {static_cast<std::size_t>(count(rng)), static_cast<std::size_t>(count(rng))};
    r.elapsed_ms = count(rng) * 0.5;
    for (int k = count(rng); k > 0; --k) r.model_notes.push_back(random_text(rng));
    const json j = json::parse(to_json(r).dump());
    ASSERT_TRUE(validate_report_json(j).empty()) << j.dump();
    ASSERT_EQ(report_from_json(j), r);
  }
}

TEST(Report, ValidationFindsSchemaViolations) {
  json j = to_json(sample_report(true));
  json missing = j;
  missing.erase("term_counts");
  EXPECT_FALSE(validate_report_json(missing).empty());
  json bad_status = j;
  bad_status["status"] = "ok";
  EXPECT_FALSE(validate_report_json(bad_status).empty());
  json pass_with_witness = j;
  pass_with_witness["status"] = "pass";
  EXPECT_FALSE(validate_report_json(pass_with_witness).empty());
  json fail_without_witness = j;
  fail_without_witness["witness"] = nullptr;
  EXPECT_FALSE(validate_report_json(fail_without_witness).empty());
  json wrong_type = j;
  wrong_type["elapsed_ms"] = "fast";
  EXPECT_FALSE(validate_report_json(wrong_type).empty());
  EXPECT_THROW(report_from_json(bad_status), UsageError);
}

TEST(Report, StripTimingRecursesIntoArrays) {
  json arr = json::array({to_json(sample_report(false)), to_json(sample_report(true))});
  const json stripped = strip_timing(arr);
  for (const auto& r : stripped) EXPECT_FALSE(r.contains("elapsed_ms"));
  EXPECT_TRUE(stripped[1].contains("witness"));
}

// ---------------------------------------------------------------- registry and checks

TEST(Registry, IdsAreUniqueAndMutationsCounted) {
  std::set<std::string> ids;
  int mutations = 0;
  for (const auto& def : registry()) {
    EXPECT_TRUE(ids.insert(def.id).second) << def.id;
    mutations += def.mutation ? 1 : 0;
    EXPECT_EQ(def.mutation, def.id.rfind("mutation-", 0) == 0) << def.id;
  }
  EXPECT_EQ(mutations, 8);
}

TEST(Registry, UnknownIdAndParamAreUsageErrors) {
  EXPECT_THROW(find_check("no-such-check"), UsageError);
  EXPECT_THROW(run_check("huks-even", {{"side", "X"}}), UsageError);
  EXPECT_THROW(run_check("huks-even", {{"n", "3"}}), UsageError);
  EXPECT_THROW(run_check("pfaffian-laplace", {{"m", "2"}, {"n", "1"}}), UsageError);
  EXPECT_THROW(run_check("huks-odd", {{"n", "x"}}), UsageError);
}

TEST(Checks, DefaultsPassAndMutationsFailWithSoundWitness) {
  for (const auto& def : registry()) {
    const CheckReport r = run_check(def.id);
    EXPECT_TRUE(validate_report_json(to_json(r)).empty()) << def.id;
    if (!def.mutation) {
      EXPECT_EQ(r.status, CheckStatus::Pass) << def.id;
      continue;
    }
    ASSERT_EQ(r.status, CheckStatus::Fail) << def.id;
    ASSERT_TRUE(r.witness.has_value()) << def.id;
    EXPECT_FALSE(r.witness->monomial.empty()) << def.id;
    EXPECT_NE(r.witness->lhs_coefficient, r.witness->rhs_coefficient) << def.id;
  }
}

TEST(Checks, SpecExamples) {
  EXPECT_EQ(run_check("lemma-axq-sxq", {{"kind", "sym"}, {"n", "2"}, {"r", "2"}, {"i", "2"}}).status, CheckStatus::Pass);
  EXPECT_EQ(run_check("lemma-claim", {{"n", "2"}, {"triple", "(1,2,3)"}}).status, CheckStatus::Pass);
  EXPECT_EQ(run_check("lemma-huks-exp", {{"n", "2"}, {"m", "2"}}).status, CheckStatus::Pass);
  EXPECT_EQ(run_check("huks-odd", {{"n", "1"}}).status, CheckStatus::Pass);
  EXPECT_EQ(run_check("mutation-huks-even-shift", {{"n", "2"}}).status, CheckStatus::Fail);
  EXPECT_EQ(run_check("mutation-capelli-jm-shift", {{"n", "2"}, {"m", "2"}, {"s", "2"}, {"r", "2"}}).status, CheckStatus::Fail);
  EXPECT_EQ(run_check("mutation-classical-zero-shift", {{"n", "2"}}).status, CheckStatus::Fail);
  EXPECT_EQ(run_check("turnbull-anti", {{"n", "3"}, {"m", "2"}, {"r", "2"}, {"hmode", "scalar-h"}}).status, CheckStatus::Pass);
  EXPECT_EQ(run_check("pfaffian-corollary", {{"m", "2"}, {"n", "4"}}).status, CheckStatus::Pass);
}

TEST(Checks, WilliamsonRecordsEveryReading) {
  const CheckReport r = run_check("williamson", {{"lambda", "[2,1]"}});
  EXPECT_EQ(r.status, CheckStatus::Pass);
  int readings = 0;
  for (const auto& note : r.model_notes) readings += note.find(" reading: ") != std::string::npos ? 1 : 0;
  EXPECT_EQ(readings, 3);
}

TEST(Checks, CentralHNoteOnlyWhereHExists) {
  auto has_note = [](const CheckReport& r) {
    for (const auto& n : r.model_notes)
      if (n == kCentralHNote) return true;
    return false;
  };
  EXPECT_TRUE(has_note(run_check("turnbull-sym")));
  EXPECT_FALSE(has_note(run_check("classical-capelli")));
  EXPECT_FALSE(has_note(run_check("pfaffian-laplace")));
}

TEST(Checks, BudgetOverrunsBecomeSkips) {
  Budget tiny;
  tiny.max_tensor_dim = 8;
  const CheckReport r = run_check("lemma-huks-exp", {{"n", "4"}, {"m", "3"}}, tiny);
  EXPECT_EQ(r.status, CheckStatus::Skipped);
  EXPECT_FALSE(r.skip_reason.empty());
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_TRUE(validate_report_json(to_json(r)).empty());

  Budget few_terms;
  few_terms.max_terms = 3;
  EXPECT_EQ(run_check("huks-even", {{"n", "4"}}, few_terms).status, CheckStatus::Skipped);

  Budget no_time;
  no_time.time_budget_ms = 0;
  EXPECT_EQ(run_check("turnbull-anti", {{"n", "3"}}, no_time).status, CheckStatus::Skipped);
}

TEST(Checks, SeededChecksAreReproducible) {
  const auto a = run_check("engine-symmetry", {{"seed", "5"}});
  const auto b = run_check("engine-symmetry", {{"seed", "5"}});
  EXPECT_EQ(strip_timing(to_json(a)), strip_timing(to_json(b)));
  EXPECT_EQ(run_check("engine-associativity", {{"seed", "99"}, {"triples", "200"}}).status, CheckStatus::Pass);
}

// ---------------------------------------------------------------- suite

TEST(Suite, EmptyConfigRunsNothing) {
  for (const char* text : {"", "parallelism: 2\n", "checks: []\n"}) {
    const SuiteConfig c = parse_suite_config(text);
    EXPECT_TRUE(c.checks.empty());
    const SuiteResult r = run_suite(c);
    EXPECT_TRUE(r.reports.empty());
    EXPECT_EQ(r.summary.total(), 0u);
  }
}

TEST(Suite, OneMutationFailsExactlyThatCheck) {
  const SuiteConfig c = parse_suite_config(R"(
parallelism: 2
checks:
  - id: huks-even
    params: {n: 2}
  - id: mutation-huks-even-shift
    params: {n: 2}
  - id: lemma-claim
    params: {n: 2, r: 3}
)");
  const SuiteResult r = run_suite(c);
  ASSERT_EQ(r.reports.size(), 3u);
  EXPECT_EQ(r.summary.fail, 1u);
  EXPECT_EQ(r.summary.pass, 2u);
  EXPECT_EQ(r.reports[1].check_id, "mutation-huks-even-shift");
  EXPECT_EQ(r.reports[1].status, CheckStatus::Fail);
}

TEST(Suite, GridExpandsInDeclaredOrder) {
  const SuiteConfig c = parse_suite_config(R"(
seed: 7
max_tensor_dim: 100
checks:
  - id: okounkov
    params: {lambda: [2,1]}
    grid: {hmode: [symbolic, identity]}
  - id: lemma-claim
    grid: {n: [1, 2], r: [3, 4]}
  - id: engine-symmetry
)");
  ASSERT_EQ(c.checks.size(), 7u);
  EXPECT_EQ(c.checks[0].params.at("lambda"), "[2,1]");
  EXPECT_EQ(c.checks[1].params.at("hmode"), "identity");
  EXPECT_EQ(c.checks[2].params.at("n"), "1");
  EXPECT_EQ(c.checks[3].params.at("r"), "4");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.budget.max_tensor_dim, 100u);
  const SuiteResult r = run_suite(c);
  EXPECT_EQ(r.reports.back().params.at("seed"), "7");
  EXPECT_EQ(r.reports[0].status, CheckStatus::Pass);
  EXPECT_EQ(r.summary.fail, 0u);
}

TEST(Suite, MalformedConfigsAreUsageErrors) {
  EXPECT_THROW(parse_suite_config("checks: [\n"), UsageError);
  EXPECT_THROW(parse_suite_config("colour: blue\n"), UsageError);
  EXPECT_THROW(parse_suite_config("- 1\n- 2\n"), UsageError);
  EXPECT_THROW(parse_suite_config("checks:\n  - id: nope\n"), UsageError);
  EXPECT_THROW(parse_suite_config("checks:\n  - id: huks-even\n    params: {q: 1}\n"), UsageError);
  EXPECT_THROW(parse_suite_config("checks:\n  - params: {n: 1}\n"), UsageError);
  EXPECT_THROW(parse_suite_config("parallelism: 0\n"), UsageError);
  EXPECT_THROW(parse_suite_config("checks:\n  - id: huks-even\n    grid: {n: 4}\n"), UsageError);
  // Valid syntax, invalid value: reported when the check runs.
  const SuiteConfig c = parse_suite_config("checks:\n  - id: huks-even\n    params: {n: 3}\n");
  EXPECT_THROW(run_suite(c), UsageError);
}

TEST(Suite, ReportsIndependentOfParallelism) {
  const std::string body = R"(
checks:
  - id: turnbull-sym
    grid: {n: [2, 3], r: [1, 2]}
  - id: mutation-claim-drop-q
  - id: pfaffian-laplace
    grid: {m: [1, 3], n: [1, 3]}
  - id: engine-symmetry
)";
  const SuiteResult serial = run_suite(parse_suite_config("parallelism: 1\n" + body));
  const SuiteResult parallel = run_suite(parse_suite_config("parallelism: 4\n" + body));
  ASSERT_EQ(serial.reports.size(), parallel.reports.size());
  for (std::size_t k = 0; k < serial.reports.size(); ++k)
    EXPECT_EQ(strip_timing(to_json(serial.reports[k])), strip_timing(to_json(parallel.reports[k])));
}

TEST(Suite, DefaultGridCoversEveryCheckWithoutMutations) {
  const auto grid = default_grid();
  std::set<std::string> covered;
  for (const auto& e : grid) {
    const CheckDef& def = find_check(e.id);
    EXPECT_FALSE(def.mutation) << e.id;
    EXPECT_NO_THROW(resolve_params(def, e.params)) << e.id;
    covered.insert(e.id);
  }
  for (const auto& def : registry())
    if (!def.mutation) EXPECT_TRUE(covered.count(def.id)) << def.id;
}
