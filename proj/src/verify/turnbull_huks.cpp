#include "internal.hpp"

namespace capelli::detail {

namespace {

enum class TurnbullKind { SymDet, AntiPer };

// Slots 1..t still in C^m, the rest already in C^n.
MixedSpace mixed_domain(int t, int r, int m, int n) {
  std::vector<int> dims;
  for (int k = 1; k <= r; ++k) dims.push_back(k <= t ? m : n);
  return MixedSpace(dims);
}

void run_turnbull(const ParamMap& pm, CheckContext& ctx, CheckReport& rep, TurnbullKind kind, bool sign_flip) {
  const Params p(pm);
  const int n = p.integer("n"), m = p.integer("m"), r = p.integer("r");
  const bool sym = kind == TurnbullKind::SymDet;
  if (n < 1 || m < 1 || r < 1) throw UsageError("turnbull needs n, m, r >= 1");
  if (sym && r > n) throw UsageError("the symmetric case needs r <= n");
  std::size_t dim = 1;
  for (int k = 0; k < r; ++k) dim *= static_cast<std::size_t>(std::max(n, m));
  ctx.require_dim(dim);
  const auto spec = sym ? RelationSpec::turnbull_sym(n, m, p.hmode()) : RelationSpec::turnbull_anti(n, m, p.hmode());
  const auto x = x_matrix(spec), y = y_matrix(spec), h = h_matrix(spec);
  const Rational sign = sign_flip ? -1 : 1;
  const auto kind_sym = sym ? SymmetrizerKind::Antisymmetric : SymmetrizerKind::Symmetric;

  // Operator form: A_r (X_1Y_1 + (r-1)H_1)...(X_rY_r) = A_r X_1...X_r Y_1...Y_r, compared on the rows
  // of A_r that determine the product.
  Verdict v(ctx);
  const TensorOperator rows = determining_rows(kind_sym, range(1, r), MixedSpace::uniform(n, r));
  std::vector<TensorOperator> lhs_factors{rows};
  for (int t = 1; t <= r; ++t) {
    const MixedSpace dom = mixed_domain(t, r, m, n);
    lhs_factors.push_back(xy_factor(x, y, t, dom, spec) + embed_matrix(h, t, dom) * (sign * Rational(r - t)));
  }
  std::vector<Slotted> chain;
  for (int t = 1; t <= r; ++t) chain.push_back({&x, t});
  for (int t = 1; t <= r; ++t) chain.push_back({&y, t});
  std::vector<TensorOperator> rhs_factors{rows};
  for (auto& op : embed_chain(chain, MixedSpace::uniform(m, r))) rhs_factors.push_back(std::move(op));
  v.same(compose_all(lhs_factors, spec), compose_all(rhs_factors, spec), sym ? "A_r" : "S_r");
  ctx.checkpoint();

  // Scalar form over sorted index sets.
  const auto flavor = sym ? IndexFlavor::Strict : IndexFlavor::NonDecreasing;
  const auto is = multi_indices(n, r, flavor);
  const auto ls = multi_indices(m, r, flavor);
  const auto js = multi_indices(n, r, flavor);
  auto fn = [&](const PolyMatrix& a) { return sym ? column_det(a, spec) : permanent_rowperm(a, spec); };
  const PolyMatrix xy = multiply(x, y, spec);
  std::map<std::pair<std::size_t, std::size_t>, NCPoly> fx, fy;
  for (std::size_t a = 0; a < is.size(); ++a)
    for (std::size_t b = 0; b < js.size(); ++b) fx[{a, b}] = fn(x.sub(is[a], js[b]));
  for (std::size_t b = 0; b < js.size(); ++b)
    for (std::size_t c = 0; c < ls.size(); ++c) fy[{b, c}] = fn(y.sub(js[b], ls[c]));
  for (std::size_t a = 0; a < is.size(); ++a)
    for (std::size_t c = 0; c < ls.size(); ++c) {
      PolyMatrix mat = xy.sub(is[a], ls[c]);
      const PolyMatrix hs = h.sub(is[a], ls[c]);
      for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t col = 0; col < mat.cols(); ++col)
          mat.at(i, col) += hs.at(i, col) * (sign * Rational(r - 1 - static_cast<long>(col)));
      NCPoly rhs;
      for (std::size_t b = 0; b < js.size(); ++b) {
        const Rational coeff = sym ? Rational(1) : Rational(1) / v_multiplicity(js[b]);
        multiply_add(rhs, fx[{a, b}], fy[{b, c}], spec, coeff);
      }
      v.same(fn(mat), rhs, {"", index_string(is[a]), index_string(ls[c])});
    }
  v.finish(rep);
  add_model_note(rep, spec);
  rep.model_notes.push_back("scalar form compared on " + std::to_string(is.size() * ls.size()) + " index pairs");
  if (ls.empty()) rep.model_notes.push_back("r > m: no strictly increasing column sets, scalar form is vacuous");
  if (spec.hmode() == HMode::Identity) rep.model_notes.push_back("H = I specialization");
  if (spec.hmode() == HMode::ScalarH) rep.model_notes.push_back("H = hI specialization");
  if (sign_flip) rep.model_notes.push_back("mutation: diagonal shifts enter with the wrong sign");
}

enum class HuksParity { Even, Odd };

void run_huks(const ParamMap& pm, CheckContext& ctx, CheckReport& rep, HuksParity parity, bool odd_shift_on_even) {
  const Params p(pm);
  const int n = p.integer("n");
  if (n < 1) throw UsageError("huks needs n >= 1");
  if (parity == HuksParity::Even && n % 2 != 0) throw UsageError("huks-even needs even n");
  if (parity == HuksParity::Odd && n % 2 == 0) throw UsageError("huks-odd needs odd n");
  // The even theorem assumes Y antisymmetric; the odd one allows either side.
  const auto side = parity == HuksParity::Even ? AntisymSide::Y : p.side();
  const auto spec = RelationSpec::huks(n, side);
  const auto x = x_matrix(spec), y = y_matrix(spec);
  const NCPoly h = h_matrix(spec).at(0, 0);
  // Column t (1-based) is shifted by n-1-t in the even case and by n-t in the odd case.
  const bool odd_shift = parity == HuksParity::Odd || odd_shift_on_even;
  PolyMatrix mat = multiply(x, y, spec);
  std::string shifts;
  for (int t = 1; t <= n; ++t) {
    const int shift = odd_shift ? n - t : n - 1 - t;
    mat.at(static_cast<std::size_t>(t - 1), static_cast<std::size_t>(t - 1)) += h * Rational(shift);
    shifts += (t > 1 ? "," : "") + std::to_string(shift);
  }
  const NCPoly lhs = column_det(mat, spec);
  ctx.checkpoint();
  const NCPoly rhs = multiply(column_det(x, spec), column_det(y, spec), spec);
  Verdict v(ctx);
  v.same(lhs, rhs, {"", "det", ""});
  if (parity == HuksParity::Odd) {
    v.same(lhs, NCPoly(), {"", "lhs-is-zero", ""});
    v.same(rhs, NCPoly(), {"", "rhs-is-zero", ""});
  }
  v.finish(rep);
  add_model_note(rep, spec);
  rep.model_notes.push_back("diagonal shift h*diag(" + shifts + ")");
  if (odd_shift_on_even) rep.model_notes.push_back("mutation: odd-case shifts used for even n");
}

std::vector<ParamSpec> turnbull_params() {
  return {{"n", "2", "size of X"}, {"m", "2", "columns of Y"}, {"r", "2", "tensor degree"},
          {"hmode", "symbolic", "symbolic | identity | scalar-h"}};
}

}  // namespace

void register_turnbull_huks(std::vector<CheckDef>& defs) {
  defs.push_back({"turnbull-sym", "A_r(X_1Y_1+(r-1)H_1)...(X_rY_r) = A_r X...Y... for symmetric X, operator and det forms",
                  turnbull_params(), false,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_turnbull(p, c, r, TurnbullKind::SymDet, false); }});
  defs.push_back({"turnbull-anti", "S_r(X_1Y_1+(r-1)H_1)...(X_rY_r) = S_r X...Y... for antisymmetric X, operator and per forms",
                  turnbull_params(), false,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_turnbull(p, c, r, TurnbullKind::AntiPer, false); }});
  defs.push_back({"huks-even", "det(XY + h diag(n-2,...,0,-1)) = det X det Y for even n",
                  {{"n", "2", "even size; Y is antisymmetric"}}, false,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_huks(p, c, r, HuksParity::Even, false); }});
  defs.push_back({"huks-odd", "det(XY + h diag(n-1,...,0)) = det X det Y = 0 for odd n",
                  {{"n", "3", "odd size"}, {"side", "Y", "antisymmetric factor: X | Y"}}, false,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_huks(p, c, r, HuksParity::Odd, false); }});

  defs.push_back({"mutation-huks-even-shift", "negative control: even case with shifts diag(n-1,...,0)",
                  {{"n", "2", "even size; Y is antisymmetric"}}, true,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_huks(p, c, r, HuksParity::Even, true); }});
  defs.push_back({"mutation-turnbull-sym-sign", "negative control: symmetric Turnbull with negated shifts",
                  turnbull_params(), true,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_turnbull(p, c, r, TurnbullKind::SymDet, true); }});
  auto anti_params = turnbull_params();
  anti_params[0].default_value = "3";
  defs.push_back({"mutation-turnbull-anti-sign", "negative control: antisymmetric Turnbull with negated shifts", anti_params, true,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_turnbull(p, c, r, TurnbullKind::AntiPer, true); }});
}

}  // namespace capelli::detail
