#include "capelli/verify/check.hpp"

#include "internal.hpp"

namespace capelli {

const char* const kCentralHNote =
    "H modeled as central: it commutes with X, Y, H and h; identities are verified in this model only";

void CheckContext::require_dim(std::size_t dim) const {
  if (dim > budget_.max_tensor_dim)
    throw ResourceExceeded("tensor dimension " + std::to_string(dim) + " exceeds max_tensor_dim " +
                           std::to_string(budget_.max_tensor_dim));
}

void CheckContext::require_terms(std::size_t terms) const {
  if (terms > budget_.max_terms)
    throw ResourceExceeded("term count " + std::to_string(terms) + " exceeds max_terms " + std::to_string(budget_.max_terms));
}

void CheckContext::checkpoint() const {
  if (elapsed_ms() > budget_.time_budget_ms)
    throw ResourceExceeded("time budget of " + std::to_string(static_cast<long>(budget_.time_budget_ms)) + " ms exceeded");
}

double CheckContext::elapsed_ms() const {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    detail::register_theorems(d);
    detail::register_turnbull_huks(d);
    detail::register_lemmas(d);
    detail::register_pfaffian(d);
    detail::register_engine(d);
    return d;
  }();
  return defs;
}

const CheckDef& find_check(const std::string& id) {
  for (const auto& def : registry())
    if (def.id == id) return def;
  throw UsageError("unknown check '" + id + "'");
}

ParamMap resolve_params(const CheckDef& def, const ParamMap& given) {
  ParamMap out;
  for (const auto& p : def.params) out[p.name] = p.default_value;
  for (const auto& [key, value] : given) {
    if (!out.count(key)) throw UsageError("check '" + def.id + "' has no parameter '" + key + "'");
    out[key] = value;
  }
  return out;
}

CheckReport run_check(const std::string& id, const ParamMap& params, const Budget& budget) {
  const CheckDef& def = find_check(id);
  CheckReport report;
  report.check_id = id;
  report.params = resolve_params(def, params);
  CheckContext ctx(budget);
  try {
    def.run(report.params, ctx, report);
  } catch (const ResourceExceeded& e) {
    report.status = CheckStatus::Skipped;
    report.witness.reset();
    report.skip_reason = e.what();
  }
  report.elapsed_ms = ctx.elapsed_ms();
  return report;
}

}  // namespace capelli
