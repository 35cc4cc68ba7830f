#include "internal.hpp"

#include <random>

namespace capelli::detail {

namespace {

int sum_of(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

int binom2(int k) { return k * (k - 1) / 2; }

Rational parity_sign(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<std::vector<int>> subsets(int n, int size) {
  if (size < 0 || size > n) return {};
  if (size == 0) return {{}};
  return multi_indices(n, size, IndexFlavor::Strict);
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& ground, int size) {
  std::vector<std::vector<int>> out;
  for (const auto& pos : subsets(static_cast<int>(ground.size()), size)) {
    std::vector<int> s;
    for (int p : pos) s.push_back(ground[static_cast<std::size_t>(p - 1)]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> minus(const std::vector<int>& all, const std::vector<int>& drop) {
  std::vector<int> out;
  for (int x : all)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

// Generic commuting antisymmetric symbols: the antisymmetric Y block of a HUKS algebra.
struct AntiSymbols {
  RelationSpec spec;
  PolyMatrix y;
  explicit AntiSymbols(int n) : spec(RelationSpec::huks(n, AntisymSide::Y)), y(y_matrix(spec)) {}
};

void note_symbols(CheckReport& rep, const RelationSpec& spec) {
  rep.model_notes.push_back("entries are commuting antisymmetric symbols of " + spec.describe());
}

NCPoly product(const NCPoly& a, const NCPoly& b, const NCPoly& c, const RelationSpec& spec) {
  return multiply(multiply(a, b, spec), c, spec);
}

// ---------------------------------------------------------------- Laplace-type expansion

void run_laplace(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int m = p.integer("m"), n = p.integer("n");
  if (m < 0 || n < 0 || m + n < 2) throw UsageError("laplace needs m, n >= 0 and m + n >= 2");
  if ((m + n) % 2 != 0) throw UsageError("laplace needs m + n even");
  const AntiSymbols s(m + n);
  const auto rows_z = range(1, m), rows_z2 = range(m + 1, m + n);
  const PolyMatrix z = s.y.sub(rows_z, rows_z), z2 = s.y.sub(rows_z2, rows_z2), w = s.y.sub(rows_z, rows_z2);
  const NCPoly lhs = pf(s.y, s.spec);
  NCPoly rhs;
  std::size_t terms = 0;
  for (int k = 0; k <= std::min(m, n); ++k) {
    if ((m - k) % 2 != 0 || (n - k) % 2 != 0) continue;
    for (const auto& i : subsets(m, m - k))
      for (const auto& j : subsets(n, n - k)) {
        const int e = sum_of(i) + sum_of(j) + binom2(m) + binom2(n) + binom2(k);
        const NCPoly t = product(pf(z.sub(i, i), s.spec), pf(z2.sub(j, j), s.spec),
                                 det(w.sub(complement(i, m), complement(j, n)), s.spec), s.spec);
        rhs += t * parity_sign(e);
        ++terms;
      }
    ctx.checkpoint();
  }
  Verdict v(ctx);
  v.same(lhs, rhs, {"", "m=" + std::to_string(m), "n=" + std::to_string(n)});
  v.finish(rep);
  note_symbols(rep, s.spec);
  rep.model_notes.push_back(std::to_string(terms) + " (I, J) pairs in the expansion");
}

// ---------------------------------------------------------------- corollary with a zero block

void run_corollary(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int m = p.integer("m"), n = p.integer("n");
  if (m < 0 || n < 0 || m + n < 2) throw UsageError("corollary needs m, n >= 0 and m + n >= 2");
  if ((m + n) % 2 != 0) throw UsageError("corollary needs m + n even");
  const AntiSymbols s(m + n);
  PolyMatrix big = s.y;
  for (int a = m; a < m + n; ++a)
    for (int b = m; b < m + n; ++b) big.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = NCPoly();
  const auto rows_z = range(1, m);
  const PolyMatrix z = s.y.sub(rows_z, rows_z), w = s.y.sub(rows_z, range(m + 1, m + n));
  const NCPoly lhs = pf(big, s.spec);
  NCPoly rhs;
  std::string regime;
  if (m > n) {
    regime = "m>n";
    for (const auto& i : subsets(m, m - n))
      rhs += multiply(pf(z.sub(i, i), s.spec), det(w.sub(complement(i, m), range(1, n)), s.spec), s.spec) *
             parity_sign(sum_of(i) + binom2(m));
  } else if (m == n) {
    regime = "m=n";
    rhs = det(w, s.spec) * parity_sign(binom2(m));
  } else {
    regime = "m<n";
  }
  Verdict v(ctx);
  v.same(lhs, rhs, {regime, "m=" + std::to_string(m), "n=" + std::to_string(n)});
  v.finish(rep);
  note_symbols(rep, s.spec);
  rep.model_notes.push_back("regime " + regime + "; I ranges over subsets of [m]");
}

// ---------------------------------------------------------------- congruence

RationalMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  RationalMatrix u(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < u.rows(); ++a)
    for (std::size_t b = 0; b < u.cols(); ++b) u.at(a, b) = Rational(dist(rng));
  return u;
}

void run_congruence(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int n = p.integer("n"), samples = p.integer("samples");
  if (n < 2 || n % 2 != 0) throw UsageError("congruence needs even n >= 2");
  if (samples < 0) throw UsageError("samples must be >= 0");
  Verdict v(ctx);

  // Symbolic U: the Y block of an antisymmetric Turnbull algebra with H = 0, where X and Y commute.
  const auto sym_spec = RelationSpec::turnbull_anti(n, n).with_numeric_h(RationalMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)));
  const auto x = x_matrix(sym_spec), u = y_matrix(sym_spec);
  const auto utxu = multiply(multiply(u.transposed(), x, sym_spec), u, sym_spec);
  v.same(pf(utxu, sym_spec), multiply(det(u, sym_spec), pf(x, sym_spec), sym_spec), {"symbolic U", "", ""});
  ctx.checkpoint();

  // Seeded integer U.
  const auto num_spec = RelationSpec::huks(n, AntisymSide::X);
  const auto xn = x_matrix(num_spec);
  std::mt19937_64 rng(static_cast<std::uint64_t>(p.integer("seed")));
  for (int k = 0; k < samples; ++k) {
    const auto un = PolyMatrix::from_rational(random_matrix(n, rng));
    const auto lhs = pf(multiply(multiply(un.transposed(), xn, num_spec), un, num_spec), num_spec);
    v.same(lhs, multiply(det(un, num_spec), pf(xn, num_spec), num_spec), {"sample " + std::to_string(k), "", ""});
  }
  v.finish(rep);
  rep.model_notes.push_back("symbolic U over " + sym_spec.describe());
  rep.model_notes.push_back(std::to_string(samples) + " integer matrices U with entries in [-3, 3]");
}

// ---------------------------------------------------------------- permutation sign

void run_permutation(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int n = p.integer("n");
  if (n < 2 || n % 2 != 0 || n > 8) throw UsageError("permutation needs even n in [2, 8]");
  const AntiSymbols s(n);
  const NCPoly base = pf(s.y, s.spec);
  Verdict v(ctx);
  for (const auto& sigma : Permutation::all(n)) {
    const auto& img = sigma.images();
    v.same(pf(s.y.sub(img, img), s.spec), base * Rational(sigma.sign()), {sigma.to_string(), "", ""});
  }
  v.finish(rep);
  note_symbols(rep, s.spec);
}

// ---------------------------------------------------------------- alternating identity

void run_alternating(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int n = p.integer("n"), r = p.integer("r");
  if (n < 2 || n % 2 != 0) throw UsageError("alternating needs even n >= 2");
  if (r < 0 || r > n) throw UsageError("alternating needs 0 <= r <= n");
  const AntiSymbols s(n);
  const NCPoly base = pf(s.y, s.spec);
  Verdict v(ctx);
  int literal_differs = 0, subsets_seen = 0;
  for (const auto& idx : subsets(n, r)) {
    ++subsets_seen;
    int e = 0;
    for (int k = 1; k <= r; ++k) e += n - idx[static_cast<std::size_t>(k - 1)] - r + k;
    const auto ic = complement(idx, n);
    const auto order = concat(ic, idx);
    const std::string where = "I=" + index_string(idx);
    // The sign is that of the block order (I^c, I).
    v.same(NCPoly(parity_sign(e)), NCPoly(Rational(block_sign({ic, idx}))), {where, "sign", ""});
    v.same(base, pf(s.y.sub(order, order), s.spec) * parity_sign(e), {where, "X_I block kept", ""});
    // The displayed form has a zero lower-right block; it holds when X_I = 0.
    PolyMatrix zeroed = s.y;
    for (int a : idx)
      for (int b : idx) zeroed.at(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = NCPoly();
    const NCPoly literal = pf(zeroed.sub(order, order), s.spec) * parity_sign(e);
    v.same(pf(zeroed, s.spec), literal, {where, "X_I = 0", ""});
    if (literal != base) ++literal_differs;
  }
  v.finish(rep);
  note_symbols(rep, s.spec);
  rep.model_notes.push_back("zero-block form checked on X with X_I = 0; for generic X it differs from Pf(X) for " +
                            std::to_string(literal_differs) + " of " + std::to_string(subsets_seen) + " subsets");
}

// ---------------------------------------------------------------- minor sums

void run_minor_sums(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params prm(pm);
  const int n = prm.integer("n");
  if (n < 2 || n % 2 != 0) throw UsageError("minor-sums needs even n >= 2");
  std::vector<int> ps = prm.is_all("p") ? range(0, n / 2 - 1) : std::vector<int>{prm.integer("p")};
  for (int p : ps)
    if (p < 0 || p > n / 2 - 1) throw UsageError("p must lie in [0, n/2 - 1]");
  const AntiSymbols s(n);
  const auto all = range(1, n);
  // det(Y^{rows}_{cols}): the superscript indexes rows.
  auto minor = [&](const std::vector<int>& rows, const std::vector<int>& cols) { return det(s.y.sub(rows, cols), s.spec); };
  Verdict v(ctx);
  std::size_t nonzero = 0;
  for (int p : ps) {
    for (int t = 1; t <= n; ++t) {
      const auto rest = minus(all, {t});
      for (const auto& j : subsets_of(rest, n - 2 * p - 2)) {
        NCPoly lhs, rhs;
        for (const auto& idx : subsets(n, 2 * p + 2)) {
          const auto ic = complement(idx, n);
          lhs += multiply(pf(s.y.sub(idx, idx), s.spec), minor(j, ic), s.spec) * Rational(block_sign({idx, ic}));
        }
        for (const auto& idx : subsets_of(rest, 2 * p)) {
          const auto ict = minus(rest, idx);
          rhs += multiply(pf(s.y.sub(idx, idx), s.spec), minor(concat({t}, j), ict), s.spec) *
                 Rational(block_sign({{t}, idx, ict}));
        }
        if (!lhs.is_zero()) ++nonzero;
        v.same(lhs, rhs, {"p=" + std::to_string(p) + " first sum", "t=" + std::to_string(t), "J=" + index_string(j)});
      }
      for (const auto& j : subsets_of(rest, n - 2 * p - 1)) {
        NCPoly lhs;
        for (const auto& idx : subsets_of(rest, 2 * p)) {
          const auto ict = minus(rest, idx);
          lhs += multiply(pf(s.y.sub(idx, idx), s.spec), minor(j, ict), s.spec) * Rational(block_sign({idx, ict}));
        }
        v.same(lhs, NCPoly(), {"p=" + std::to_string(p) + " vanishing sum", "t=" + std::to_string(t), "J=" + index_string(j)});
      }
      ctx.checkpoint();
    }
  }
  v.finish(rep);
  note_symbols(rep, s.spec);
  rep.model_notes.push_back("minors take the superscript set as rows; " + std::to_string(nonzero) +
                            " of the first-sum instances are nonzero");
}

// ---------------------------------------------------------------- F_m and G_m actions

void run_fg_action(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int m = p.integer("m"), n = p.integer("n");
  if (m < 1 || n < 1) throw UsageError("fg-action needs m, n >= 1");
  std::size_t dim = 1;
  for (int k = 0; k < std::max(2 * m, n); ++k) dim *= static_cast<std::size_t>(n);
  ctx.require_dim(dim);
  const auto spec = RelationSpec::huks(n, AntisymSide::X);
  const auto x = x_matrix(spec);
  const auto space = MixedSpace::uniform(n, 2 * m);
  Verdict v(ctx);

  TensorOperator explicit_f(space, space);
  for (const auto& sigma : two_shuffle_permutations(m)) explicit_f += perm_operator(sigma.inverse(), space) * Rational(sigma.sign());
  const TensorOperator f = f_operator(m, space);
  v.same(f, explicit_f, "F_m");

  TensorOperator qs = TensorOperator::identity(space), xs = TensorOperator::identity(space);
  for (int k = 1; k <= m; ++k) {
    qs = compose(qs, q_operator(2 * k - 1, 2 * k, space), spec);
    xs = compose(xs, embed_matrix(x, 2 * k, space), spec);
  }
  const TensorOperator lhs_op = compose_all({qs, xs, f}, spec);
  for (const auto& idx : multi_indices(n, 2 * m, IndexFlavor::Arbitrary)) {
    MultiIndex doubled;
    for (int k = 0; k < m; ++k) {
      doubled.push_back(idx[static_cast<std::size_t>(2 * k)]);
      doubled.push_back(idx[static_cast<std::size_t>(2 * k)]);
    }
    const auto lhs = compose(lhs_op, TensorOperator::basis_vector(space, idx), spec);
    const auto rhs = scale(compose(qs, TensorOperator::basis_vector(space, doubled), spec), pf(x.sub(idx, idx), spec), spec);
    v.same(lhs, rhs, "e" + index_string(idx));
  }
  ctx.checkpoint();

  if (n <= 4) {
    const auto full = MixedSpace::uniform(n, n);
    const auto e = TensorOperator::basis_vector(full, range(1, n));
    for (int k = 0; 2 * k <= n; ++k) {
      TensorOperator expected(e.domain(), full);
      for (const auto& idx : subsets(n, 2 * k)) {
        const auto ic = complement(idx, n);
        expected += TensorOperator::basis_vector(full, concat(idx, ic)) * Rational(block_sign({idx, ic}));
      }
      v.same(compose(g_operator(k, n), e, spec), expected, "G_" + std::to_string(k));
    }
  } else {
    rep.model_notes.push_back("G_m action skipped for n > 4");
  }
  v.finish(rep);
  note_symbols(rep, spec);
}

// ---------------------------------------------------------------- definitions agree

void run_definition(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  std::vector<int> sizes = p.is_all("size") ? std::vector<int>{2, 4, 6} : std::vector<int>{p.integer("size")};
  for (int sz : sizes)
    if (sz < 2 || sz % 2 != 0 || sz > 8) throw UsageError("size must be even in [2, 8]");
  Verdict v(ctx);
  for (int sz : sizes) {
    const AntiSymbols s(sz);
    const NCPoly shuffle_sum = pfaffian(s.y, s.spec);
    const std::string where = "size " + std::to_string(sz);
    v.same(shuffle_sum, pfaffian_full_sum(s.y, s.spec), {where, "full sum", ""});
    v.same(shuffle_sum, pfaffian_recursive(s.y, s.spec), {where, "first-row expansion", ""});
    v.same(multiply(shuffle_sum, shuffle_sum, s.spec), column_det(s.y, s.spec), {where, "Pf^2 = det", ""});
    ctx.checkpoint();
  }
  v.finish(rep);
  rep.model_notes.push_back("entries are commuting antisymmetric symbols of a HUKS Y block");
}

}  // namespace

void register_pfaffian(std::vector<CheckDef>& defs) {
  defs.push_back({"pfaffian-laplace", "Laplace-type expansion of Pf[[Z, W], [-W^t, Z']]",
                  {{"m", "2", "size of Z"}, {"n", "2", "size of Z'; m + n even"}}, false, run_laplace});
  defs.push_back({"pfaffian-corollary", "Pf[[Z, W], [-W^t, 0]] in the regimes m > n, m = n, m < n",
                  {{"m", "3", "size of Z"}, {"n", "3", "columns of W; m + n even"}}, false, run_corollary});
  defs.push_back({"pfaffian-congruence", "Pf(U^t X U) = det(U) Pf(X) for symbolic and seeded integer U",
                  {{"n", "4", "even size"}, {"samples", "3", "integer matrices to try"}, {"seed", "1", "random seed"}}, false,
                  run_congruence});
  defs.push_back({"pfaffian-permutation", "Pf(X_{σ(i),σ(j)}) = sgn(σ) Pf(X) for all σ", {{"n", "4", "even size"}}, false,
                  run_permutation});
  defs.push_back({"pfaffian-alternating", "moving the rows and columns of I to the end of X",
                  {{"n", "4", "even size"}, {"r", "2", "|I|"}}, false, run_alternating});
  defs.push_back({"pfaffian-minor-sums", "signed sums of Pf(Y_I) times minors of Y, both the equality and the vanishing sum",
                  {{"n", "4", "even size"}, {"p", "all", "0 <= p <= n/2 - 1, or all"}}, false, run_minor_sums});
  defs.push_back({"pfaffian-fg-action", "Q...Q X_2 X_4 ... F_m e_I = Pf(X_I) Q...Q e_{i1,i1,i3,i3,...} and the G_m action",
                  {{"m", "2", "number of pairs"}, {"n", "2", "size of X"}}, false, run_fg_action});
  defs.push_back({"pfaffian-definition", "shuffle sum, full sum and first-row expansion agree; Pf^2 = det",
                  {{"size", "all", "even size, or all for 2, 4, 6"}}, false, run_definition});
}

}  // namespace capelli::detail
