#include "capelli/verify/report.hpp"

#include "capelli/exactalg/errors.hpp"

namespace capelli {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw UsageError("unknown status '" + s + "'");
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"monomial", w.monomial},
                    {"lhs_coefficient", w.lhs_coefficient},
                    {"rhs_coefficient", w.rhs_coefficient},
                    {"location", {{"sigma", w.location.sigma}, {"out_index", w.location.out_index}, {"in_index", w.location.in_index}}}};
  } else {
    j["witness"] = nullptr;
  }
  j["term_counts"] = {{"lhs", r.term_counts.lhs}, {"rhs", r.term_counts.rhs}};
  j["elapsed_ms"] = r.elapsed_ms;
  j["model_notes"] = r.model_notes;
  j["skip_reason"] = r.skip_reason;
  return j;
}

std::vector<std::string> validate_report_json(const nlohmann::json& j) {
  std::vector<std::string> problems;
  if (!j.is_object()) return {"report is not an object"};
  auto need = [&](const char* key, auto pred, const char* what) {
    if (!j.contains(key)) {
      problems.push_back(std::string("missing field ") + key);
      return false;
    }
    if (!pred(j.at(key))) {
      problems.push_back(std::string(key) + " is not " + what);
      return false;
    }
    return true;
  };
  need("check_id", [](const auto& v) { return v.is_string() && !v.template get<std::string>().empty(); }, "a non-empty string");
  if (need("params", [](const auto& v) { return v.is_object(); }, "an object")) {
    for (const auto& [k, v] : j.at("params").items())
      if (!v.is_string()) problems.push_back("param " + k + " is not a string");
  }
  bool status_ok = need("status", [](const auto& v) { return v.is_string(); }, "a string");
  std::string status;
  if (status_ok) {
    status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail" && status != "skipped") {
      problems.push_back("status '" + status + "' is not one of pass/fail/skipped");
      status_ok = false;
    }
  }
  if (need("witness", [](const auto& v) { return v.is_null() || v.is_object(); }, "null or an object")) {
    const auto& w = j.at("witness");
    if (w.is_object()) {
      for (const char* key : {"monomial", "lhs_coefficient", "rhs_coefficient"})
        if (!w.contains(key) || !w.at(key).is_string()) problems.push_back(std::string("witness.") + key + " missing or not a string");
      if (!w.contains("location") || !w.at("location").is_object()) {
        problems.push_back("witness.location missing or not an object");
      } else {
        for (const char* key : {"sigma", "out_index", "in_index"})
          if (!w.at("location").contains(key) || !w.at("location").at(key).is_string())
            problems.push_back(std::string("witness.location.") + key + " missing or not a string");
      }
    }
    if (status_ok && (status == "fail") != w.is_object()) problems.push_back("witness must be present exactly when status is fail");
  }
  if (need("term_counts", [](const auto& v) { return v.is_object(); }, "an object")) {
    for (const char* key : {"lhs", "rhs"})
      if (!j.at("term_counts").contains(key) || !j.at("term_counts").at(key).is_number_unsigned())
        problems.push_back(std::string("term_counts.") + key + " missing or not a non-negative integer");
  }
  need("elapsed_ms", [](const auto& v) { return v.is_number() && v.template get<double>() >= 0; }, "a non-negative number");
  if (need("model_notes", [](const auto& v) { return v.is_array(); }, "an array")) {
    for (const auto& note : j.at("model_notes"))
      if (!note.is_string()) problems.push_back("model_notes entry is not a string");
  }
  need("skip_reason", [](const auto& v) { return v.is_string(); }, "a string");
  return problems;
}

CheckReport report_from_json(const nlohmann::json& j) {
  const auto problems = validate_report_json(j);
  if (!problems.empty()) throw UsageError("invalid report: " + problems.front());
  CheckReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.status = parse_status(j.at("status").get<std::string>());
  if (const auto& w = j.at("witness"); w.is_object()) {
    r.witness = Witness{w.at("monomial").get<std::string>(),
                        w.at("lhs_coefficient").get<std::string>(),
                        w.at("rhs_coefficient").get<std::string>(),
                        {w.at("location").at("sigma").get<std::string>(), w.at("location").at("out_index").get<std::string>(),
                         w.at("location").at("in_index").get<std::string>()}};
  }
  r.term_counts = {j.at("term_counts").at("lhs").get<std::size_t>(), j.at("term_counts").at("rhs").get<std::size_t>()};
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.model_notes = j.at("model_notes").get<std::vector<std::string>>();
  r.skip_reason = j.at("skip_reason").get<std::string>();
  return r;
}

nlohmann::json strip_timing(nlohmann::json j) {
  if (j.is_array()) {
    for (auto& e : j) e = strip_timing(e);
  } else if (j.is_object()) {
    j.erase("elapsed_ms");
  }
  return j;
}

}  // namespace capelli
