#include "internal.hpp"

#include <algorithm>
#include <functional>

#include "capelli/exactalg/weyl.hpp"

namespace capelli::detail {

namespace {

// ---------------------------------------------------------------- classical

WordSum expand_words(const std::vector<std::vector<Word>>& factors) {
  WordSum out{Word{1, {}}};
  for (const auto& factor : factors) {
    WordSum next;
    for (const auto& w : out)
      for (const auto& f : factor) {
        Word c{w.coeff * f.coeff, w.symbols};
        c.symbols.insert(c.symbols.end(), f.symbols.begin(), f.symbols.end());
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

void run_classical(const ParamMap& pm, CheckContext& ctx, CheckReport& rep, bool zero_shift) {
  const Params p(pm);
  const int n = p.integer("n");
  if (n < 1 || n > 3) throw UsageError("classical-capelli needs 1 <= n <= 3");
  const auto spec = RelationSpec::weyl(n);
  const auto x = x_matrix(spec);
  const auto dt = y_matrix(spec);
  auto shift = [&](int col) { return zero_shift ? 0 : n - col; };  // 1-based column

  PolyMatrix m = multiply(x, dt, spec);
  for (int t = 1; t <= n; ++t) m.at(static_cast<std::size_t>(t - 1), static_cast<std::size_t>(t - 1)) += NCPoly(shift(t));
  const NCPoly lhs = column_det(m, spec);
  const NCPoly rhs = multiply(column_det(x, spec), column_det(dt, spec), spec);

  Verdict v(ctx);
  v.same(lhs, rhs, {"", "normal-form", ""});

  // Unnormalized expansions of both sides, for the differential action.
  WordSum lhs_words, rhs_words;
  const auto perms = Permutation::all(n);
  for (const auto& sigma : perms) {
    std::vector<std::vector<Word>> cols;
    for (int t = 1; t <= n; ++t) {
      std::vector<Word> entry;
      for (int j = 1; j <= n; ++j) entry.push_back({1, {GeneratorSymbol::x(sigma(t), j), GeneratorSymbol::y(j, t)}});
      if (sigma(t) == t && shift(t) != 0) entry.push_back({shift(t), {}});
      cols.push_back(std::move(entry));
    }
    for (auto& w : expand_words(cols)) {
      w.coeff *= sigma.sign();
      lhs_words.push_back(std::move(w));
    }
  }
  for (const auto& sigma : perms)
    for (const auto& tau : perms) {
      Word w{sigma.sign() * tau.sign(), {}};
      for (int t = 1; t <= n; ++t) w.symbols.push_back(GeneratorSymbol::x(sigma(t), t));
      for (int t = 1; t <= n; ++t) w.symbols.push_back(GeneratorSymbol::y(tau(t), t));
      rhs_words.push_back(std::move(w));
    }
  const auto basis = weyl_polynomial_basis(spec, n);
  for (const auto& f : basis) {
    const NCPoly a = apply_weyl(lhs_words, f, spec);
    const NCPoly b = apply_weyl(rhs_words, f, spec);
    v.same(a, b, {"", "action", f.to_string()});
    // The normal form must act exactly like the expansion it came from.
    v.same(apply_weyl(lhs, f, spec), a, {"", "normal-form-action", f.to_string()});
  }
  v.finish(rep);
  rep.model_notes.push_back("algebra " + spec.describe() + "; D^t realized as the Y block (d_ij = Y_ji)");
  rep.model_notes.push_back("differential action compared on " + std::to_string(basis.size()) +
                            " monomials of degree <= " + std::to_string(n));
  if (zero_shift) rep.model_notes.push_back("mutation: diagonal shift replaced by zero");
}

// ---------------------------------------------------------------- Capelli general

struct CapelliData {
  RelationSpec spec;
  int r;
  PolyMatrix x, y, h;
  CapelliData(const RelationSpec& sp, int r_) : spec(sp), r(r_), x(x_matrix(sp)), y(y_matrix(sp)), h(h_matrix(sp)) {}

  // Slots 1..t in C^s, the rest in C^n.
  MixedSpace factor_domain(int t) const {
    std::vector<int> dims;
    for (int k = 1; k <= r; ++k) dims.push_back(k <= t ? spec.s() : spec.n());
    return MixedSpace(dims);
  }
  GroupOperator shifted_factor(int t, const GroupAlgebraElement* z) const {
    const MixedSpace dom = factor_domain(t);
    GroupOperator f = GroupOperator::lift(r, xy_factor(x, y, t, dom, spec));
    if (z && !z->is_zero()) f -= GroupOperator::tensor(*z, embed_matrix(h, t, dom));
    return f;
  }
  TensorOperator x_then_y() const {
    std::vector<Slotted> chain;
    for (int t = 1; t <= r; ++t) chain.push_back({&x, t});
    for (int t = 1; t <= r; ++t) chain.push_back({&y, t});
    return compose_all(embed_chain(chain, MixedSpace::uniform(spec.s(), r)), spec);
  }
};

// (X_1Y_1)(X_2Y_2 - z_2 H_2)...(X_rY_r - z_r H_r) eps(s)
GroupOperator capelli_expr1(const CapelliData& d, bool jm_plus_one) {
  GroupOperator acc = epsilon_r(d.r, d.spec.s());
  for (int t = d.r; t >= 1; --t) {
    GroupAlgebraElement z = jucys_murphy(t, d.r);
    if (jm_plus_one && t >= 2) z += GroupAlgebraElement::of(Permutation::identity(d.r));
    acc = compose(d.shifted_factor(t, &z), acc, d.spec);
  }
  return acc;
}

// eps(n)(X_1Y_1 - z'_1 H_1)...(X_rY_r)
GroupOperator capelli_expr2(const CapelliData& d) {
  GroupOperator acc = d.shifted_factor(d.r, nullptr);
  for (int t = d.r - 1; t >= 1; --t) {
    const GroupAlgebraElement z = jucys_murphy(t, d.r, true);
    acc = compose(d.shifted_factor(t, &z), acc, d.spec);
  }
  return compose(epsilon_r(d.r, d.spec.n()), acc, d.spec);
}

void check_dims(CheckContext& ctx, std::initializer_list<int> dims, int r) {
  std::size_t total = 1;
  const int big = std::max(dims);
  for (int k = 0; k < r; ++k) total *= static_cast<std::size_t>(big);
  ctx.require_dim(total);
}

void run_capelli_general(const ParamMap& pm, CheckContext& ctx, CheckReport& rep, bool jm_plus_one) {
  const Params p(pm);
  const int n = p.integer("n"), m = p.integer("m"), s = p.integer("s"), r = p.integer("r");
  if (n < 1 || m < 1 || s < 1 || r < 1) throw UsageError("capelli-general needs n, m, s, r >= 1");
  if (r > 6) throw UsageError("capelli-general supports r <= 6");
  check_dims(ctx, {n, m, s}, r);
  const CapelliData d(RelationSpec::capelli(n, m, s, p.hmode()), r);

  std::vector<GroupOperator> expr;
  expr.push_back(capelli_expr1(d, jm_plus_one));
  ctx.checkpoint();
  expr.push_back(capelli_expr2(d));
  ctx.checkpoint();
  const TensorOperator xy = d.x_then_y();
  expr.push_back(compose(xy, epsilon_r(r, s), d.spec));
  expr.push_back(compose(epsilon_r(r, n), xy, d.spec));

  Verdict v(ctx);
  for (std::size_t a = 0; a < expr.size(); ++a)
    for (std::size_t b = a + 1; b < expr.size(); ++b) {
      const bool was_ok = v.ok();
      v.same(expr[a], expr[b]);
      if (was_ok && !v.ok())
        rep.model_notes.push_back("first mismatch between expressions " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
    }
  v.finish(rep);
  add_model_note(rep, d.spec);
  if (m == 1 && r > 1) rep.model_notes.push_back("m = 1: X_1H_2 = H_2X_1 is assumed; it holds automatically because H is central");
  if (jm_plus_one) rep.model_notes.push_back("mutation: z_k replaced by z_k + 1 in the first expression");
}

// ---------------------------------------------------------------- Williamson

std::vector<std::vector<int>> index_choices(const Params& p, const std::string& key, int ambient, int r) {
  if (p.is_all(key)) return multi_indices(ambient, r, IndexFlavor::Arbitrary);
  const auto k = p.int_list(key);
  if (static_cast<int>(k.size()) != r) throw UsageError("parameter '" + key + "' needs " + std::to_string(r) + " entries");
  for (int i : k)
    if (i < 1 || i > ambient) throw UsageError("parameter '" + key + "' has an entry outside [1," + std::to_string(ambient) + "]");
  return {k};
}

void compare_matrices(Verdict& v, const PolyMatrix& lhs, const PolyMatrix& rhs, const std::vector<int>& i, const std::vector<int>& k) {
  for (std::size_t a = 0; a < lhs.rows(); ++a)
    for (std::size_t b = 0; b < lhs.cols(); ++b)
      v.same(lhs.at(a, b), rhs.at(a, b),
             {"phi[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]", index_string(i), index_string(k)});
}

void run_williamson(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const Partition shape = p.partition("lambda");
  const int r = partition_size(shape);
  const int n = p.integer("n"), m = p.integer("m"), s = p.integer("s");
  if (n < 1 || m < 1 || s < 1) throw UsageError("williamson needs n, m, s >= 1");
  check_dims(ctx, {n, m, s}, r);
  const SeminormalRep rep_phi(shape);
  const std::size_t dim = rep_phi.dimension();
  const CapelliData d(RelationSpec::capelli(n, m, s, p.hmode()), r);
  const auto& spec = d.spec;
  const PolyMatrix xy = multiply(d.x, d.y, spec);
  const auto is = index_choices(p, "I", n, r);
  const auto ks = index_choices(p, "K", s, r);

  std::vector<RationalMatrix> zphi;
  for (int a = 1; a <= r; ++a) zphi.push_back(rep_phi.matrix(jucys_murphy(a, r, true)));

  // φ applied to the operator identity: entry (a,b) of sum_σ φ(σ) ⊗ A_σ.
  const GroupOperator expr2 = capelli_expr2(d);
  std::vector<std::vector<TensorOperator>> extracted(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) extracted[a].push_back(representation_entry(rep_phi, expr2, a, b));
  const MixedSpace in_space = MixedSpace::uniform(s, r), out_space = MixedSpace::uniform(n, r);

  const auto js = multi_indices(m, r, IndexFlavor::NonDecreasing);
  Verdict by_row(ctx), by_col(ctx), by_op(ctx);
  for (const auto& i : is)
    for (const auto& k : ks) {
      PolyMatrix rhs(dim, dim);
      for (const auto& j : js) {
        PolyMatrix term = multiply(schur_matrix_function(rep_phi, d.x.sub(i, j), spec),
                                   schur_matrix_function(rep_phi, d.y.sub(j, k), spec), spec);
        term *= Rational(1) / v_multiplicity(j);
        rhs += term;
      }
      for (const bool rows : {true, false}) {
        BlockMatrix block(static_cast<std::size_t>(r), dim);
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) {
            const auto ia = static_cast<std::size_t>(i[static_cast<std::size_t>(a)] - 1);
            const auto kb = static_cast<std::size_t>(k[static_cast<std::size_t>(b)] - 1);
            PolyMatrix h_block(dim, dim);
            for (std::size_t q = 0; q < dim; ++q) h_block.at(q, q) = d.h.at(ia, kb);
            PolyMatrix entry(dim, dim);
            for (std::size_t q = 0; q < dim; ++q) entry.at(q, q) = xy.at(ia, kb);
            entry -= scalar_left(zphi[static_cast<std::size_t>(rows ? a : b)], h_block);
            block.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = entry;
          }
        compare_matrices(rows ? by_row : by_col, schur_matrix_function(rep_phi, block, spec), rhs, i, k);
      }
      PolyMatrix op(dim, dim);
      const std::size_t out = out_space.index(i), in = in_space.index(k);
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) op.at(a, b) = extracted[a][b].entry(out, in);
      compare_matrices(by_op, op, rhs, i, k);
    }

  auto verdict_note = [&](const char* name, const Verdict& v) {
    rep.model_notes.push_back(std::string(name) + " reading: " + (v.ok() ? "pass" : "fail") + " (" +
                              std::to_string(v.failures()) + " of " + std::to_string(v.comparisons()) + " entries differ)");
  };
  verdict_note("block-row (phi(z'_a) scales block row a)", by_row);
  verdict_note("block-column (phi(z'_b) scales block column b)", by_col);
  verdict_note("operator-extracted", by_op);
  const Verdict& chosen = by_row.ok() ? by_row : (by_col.ok() ? by_col : by_op);
  chosen.finish(rep);
  add_model_note(rep, spec);
}

// ---------------------------------------------------------------- Okounkov

std::vector<std::size_t> tableau_choices(const Params& p, const std::string& key, const SeminormalRep& rep) {
  std::vector<std::size_t> out;
  if (p.is_all(key)) {
    for (std::size_t a = 0; a < rep.dimension(); ++a) out.push_back(a);
    return out;
  }
  const auto t = StandardTableau::parse(p.text(key));
  if (t.shape() != rep.shape()) throw UsageError("tableau " + t.to_string() + " does not have shape " + partition_to_string(rep.shape()));
  return {rep.index_of(t)};
}

void run_okounkov(const ParamMap& pm, CheckContext& ctx, CheckReport& rep, bool flip_content) {
  const Params p(pm);
  const Partition shape = p.partition("lambda");
  const int r = partition_size(shape);
  const int d = p.integer("d");
  if (d < 1) throw UsageError("okounkov needs d >= 1");
  check_dims(ctx, {d}, r);
  const SeminormalRep rep_phi(shape);
  const auto ts = tableau_choices(p, "T", rep_phi);
  const auto tps = tableau_choices(p, "Tp", rep_phi);
  const auto spec = RelationSpec::capelli(d, d, d, p.hmode());
  const auto x = x_matrix(spec), y = y_matrix(spec), h = h_matrix(spec);
  const auto space = MixedSpace::uniform(d, r);

  std::vector<TensorOperator> xy, hs;
  for (int t = 1; t <= r; ++t) {
    xy.push_back(xy_factor(x, y, t, space, spec));
    hs.push_back(embed_matrix(h, t, space));
  }
  std::vector<Slotted> chain;
  for (int t = 1; t <= r; ++t) chain.push_back({&x, t});
  for (int t = 1; t <= r; ++t) chain.push_back({&y, t});
  const TensorOperator x_then_y = compose_all(embed_chain(chain, space), spec);
  const auto perms = Permutation::all(r);
  std::vector<TensorOperator> p_ops;
  std::vector<RationalMatrix> phi_inv;
  for (const auto& sigma : perms) {
    p_ops.push_back(perm_operator(sigma, space));
    phi_inv.push_back(rep_phi.matrix(sigma.inverse()));
  }
  const TensorOperator id = TensorOperator::identity(space);
  const bool scalar_form = spec.hmode() == HMode::Identity;

  Verdict v(ctx);
  for (std::size_t a : ts)
    for (std::size_t b : tps) {
      // Ψ_{TT'} = sum_σ <v_T', σ^{-1} v_T> P^σ
      TensorOperator psi(space, space);
      for (std::size_t q = 0; q < perms.size(); ++q) {
        const Rational c = rep_phi.gram()[b] * phi_inv[q].at(b, a);
        if (!c.is_zero()) psi += p_ops[q] * c;
      }
      const auto& tab = rep_phi.basis()[a];
      const TensorOperator rhs = compose(x_then_y, psi, spec);
      TensorOperator lhs = psi, lhs_scalar = psi;
      for (int t = r; t >= 1; --t) {
        const Rational c = Rational(flip_content ? -tab.content(t) : tab.content(t));
        const auto k = static_cast<std::size_t>(t - 1);
        lhs = compose(xy[k] - hs[k] * c, lhs, spec);
        if (scalar_form) lhs_scalar = compose(xy[k] - id * c, lhs_scalar, spec);
      }
      const bool was_ok = v.ok();
      v.same(lhs, rhs);
      if (scalar_form) v.same(lhs_scalar, rhs);
      if (was_ok && !v.ok())
        rep.model_notes.push_back("first mismatch at T=" + tab.to_string() + ", T'=" + rep_phi.basis()[b].to_string());
    }
  v.finish(rep);
  add_model_note(rep, spec);
  if (scalar_form) rep.model_notes.push_back("H = I: the scalar-content form was checked as well");
  if (flip_content) rep.model_notes.push_back("mutation: contents c_T(k) replaced by -c_T(k)");
}

std::vector<ParamSpec> capelli_params(const char* n, const char* m, const char* s, const char* r) {
  return {{"n", n, "rows of X"}, {"m", m, "columns of X, rows of Y"}, {"s", s, "columns of Y"}, {"r", r, "tensor degree"},
          {"hmode", "symbolic", "symbolic | identity | scalar-h"}};
}

}  // namespace

void register_theorems(std::vector<CheckDef>& defs) {
  defs.push_back({"classical-capelli", "det(X D^t + diag(n-1,...,0)) = det X det D^t in the Weyl algebra, normal form and action",
                  {{"n", "2", "matrix size, 1..3"}}, false,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_classical(p, c, r, false); }});
  defs.push_back({"capelli-general", "the four expressions of the general operator Capelli identity agree pairwise",
                  capelli_params("2", "2", "2", "2"), false,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_capelli_general(p, c, r, false); }});
  defs.push_back({"williamson", "Williamson's Capelli identity for d^phi; block readings and operator extraction",
                  {{"lambda", "[2]", "partition of r"},
                   {"n", "2", "rows of X"},
                   {"m", "2", "columns of X"},
                   {"s", "2", "columns of Y"},
                   {"I", "all", "row multi-index in [n]^r or all"},
                   {"K", "all", "column multi-index in [s]^r or all"},
                   {"hmode", "symbolic", "symbolic | identity | scalar-h"}},
                  false, run_williamson});
  defs.push_back({"okounkov", "higher Capelli identity with Psi_TT' built from the seminormal form",
                  {{"lambda", "[2,1]", "partition of r"},
                   {"T", "all", "standard tableau, e.g. [[1,2],[3]], or all"},
                   {"Tp", "all", "second standard tableau or all"},
                   {"d", "2", "n = m = s"},
                   {"hmode", "symbolic", "symbolic | identity | scalar-h"}},
                  false, [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_okounkov(p, c, r, false); }});

  defs.push_back({"mutation-capelli-jm-shift", "negative control: z_k -> z_k + 1 in the general Capelli identity",
                  capelli_params("2", "2", "2", "2"), true,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_capelli_general(p, c, r, true); }});
  defs.push_back({"mutation-classical-zero-shift", "negative control: classical Capelli without the diagonal shift",
                  {{"n", "2", "matrix size, 1..3"}}, true,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_classical(p, c, r, true); }});
  defs.push_back({"mutation-okounkov-content-sign", "negative control: contents enter with the wrong sign",
                  {{"lambda", "[2]", "partition of r"},
                   {"T", "all", "standard tableau or all"},
                   {"Tp", "all", "second standard tableau or all"},
                   {"d", "2", "n = m = s"},
                   {"hmode", "symbolic", "symbolic | identity | scalar-h"}},
                  true, [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_okounkov(p, c, r, true); }});
}

}  // namespace capelli::detail
