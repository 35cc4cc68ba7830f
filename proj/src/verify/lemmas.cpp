#include "internal.hpp"

#include <algorithm>
#include <functional>

namespace capelli::detail {

namespace {

// M_{i_1} M_{i_2} ... over the listed slots of a uniform space.
TensorOperator slot_product(const PolyMatrix& m, const std::vector<int>& slots, const MixedSpace& space, const RelationSpec& spec) {
  TensorOperator acc = TensorOperator::identity(space);
  for (int s : slots) acc = compose(acc, embed_matrix(m, s, space), spec);
  return acc;
}

// Q^{(o_1,o_2)} Q^{(o_3,o_4)} ... for a flattened pair list.
TensorOperator q_chain(const std::vector<int>& order, const MixedSpace& space, const RelationSpec& spec) {
  TensorOperator acc = TensorOperator::identity(space);
  for (std::size_t k = 0; k + 1 < order.size(); k += 2) acc = compose(acc, q_operator(order[k], order[k + 1], space), spec);
  return acc;
}

std::vector<int> without(const std::vector<int>& all, const std::vector<int>& drop) {
  std::vector<int> out;
  for (int i : all)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i);
  return out;
}

std::vector<int> odd_set(int k) {
  std::vector<int> out;
  for (int i = 1; i <= k; ++i) out.push_back(2 * i - 1);
  return out;
}

std::vector<int> even_set(int k) {
  std::vector<int> out;
  for (int i = 1; i <= k; ++i) out.push_back(2 * i);
  return out;
}

// (1,2,3,4,...,2k-1,2k) as a flattened pair list.
std::vector<int> odd_even_pairs(int k) { return range(1, 2 * k); }

std::vector<int> leaders(const std::vector<int>& order) {
  std::vector<int> out;
  for (std::size_t k = 0; k < order.size(); k += 2) out.push_back(order[k]);
  return out;
}

std::vector<int> partners(const std::vector<int>& order) {
  std::vector<int> out;
  for (std::size_t k = 1; k < order.size(); k += 2) out.push_back(order[k]);
  return out;
}

std::vector<std::vector<int>> subsets(int n, int size) {
  if (size == 0) return {{}};
  if (size > n) return {};
  return multi_indices(n, size, IndexFlavor::Strict);
}

std::vector<TwoShuffle> shuffles_of(const std::vector<int>& idx) {
  if (idx.empty()) return {TwoShuffle{{}, 1}};
  return two_shuffles(idx);
}

TensorOperator zero_like(const TensorOperator& op) { return TensorOperator(op.domain(), op.codomain()); }

struct HuksOps {
  RelationSpec spec;
  PolyMatrix x, y;
  MixedSpace space;
  HuksOps(int n, AntisymSide side, int factors)
      : spec(RelationSpec::huks(n, side)), x(x_matrix(spec)), y(y_matrix(spec)), space(MixedSpace::uniform(n, factors)) {}

  // rows * (prod_{i notin skip_x} X_i) Q...Q (prod_{i notin skip_y} Y_i) over slots 1..m.
  TensorOperator xqy(const TensorOperator& rows, int m, const std::vector<int>& order, const std::vector<int>& skip_x,
                     const std::vector<int>& skip_y) const {
    const auto all = range(1, m);
    std::vector<TensorOperator> f{rows, slot_product(x, without(all, skip_x), space, spec), q_chain(order, space, spec),
                                  slot_product(y, without(all, skip_y), space, spec)};
    return compose_all(f, spec);
  }
};

// s_p with |I| = 2p+2 over the indices [m], already multiplied by `rows` on the left.
TensorOperator s_term(const HuksOps& ops, const TensorOperator& rows, int m, int p) {
  TensorOperator acc = zero_like(rows);
  for (const auto& subset : subsets(m, 2 * p + 2))
    for (const auto& sh : shuffles_of(subset)) acc += ops.xqy(rows, m, sh.order, partners(sh.order), leaders(sh.order));
  return acc;
}

TensorOperator w_term(const HuksOps& ops, const TensorOperator& rows, int m, int p) {
  TensorOperator acc = zero_like(rows);
  for (const auto& subset : subsets(m, 2 * p))
    for (const auto& sh : shuffles_of(subset))
      for (int k : without(range(1, m), subset)) {
        auto skip_x = partners(sh.order), skip_y = leaders(sh.order);
        skip_x.push_back(k);
        skip_y.push_back(k);
        acc += ops.xqy(rows, m, sh.order, skip_x, skip_y);
      }
  return acc;
}

// rows * (X_1Y_1 + c_1 h)...(X_mY_m + c_m h)
TensorOperator shifted_product(const HuksOps& ops, const TensorOperator& rows, int m, const std::function<int(int)>& shift) {
  const NCPoly h = h_power(ops.spec, 1, 1);
  std::vector<TensorOperator> f{rows};
  for (int t = 1; t <= m; ++t) {
    TensorOperator factor = xy_factor(ops.x, ops.y, t, ops.space, ops.spec);
    if (shift(t) != 0) factor += scale(TensorOperator::identity(ops.space), h * Rational(shift(t)), ops.spec);
    f.push_back(std::move(factor));
  }
  return compose_all(f, ops.spec);
}

TensorOperator x_then_y(const HuksOps& ops, const TensorOperator& rows, int m) { return ops.xqy(rows, m, {}, {}, {}); }

void require_uniform_dim(CheckContext& ctx, int n, int factors) {
  std::size_t d = 1;
  for (int k = 0; k < factors; ++k) d *= static_cast<std::size_t>(n);
  ctx.require_dim(d);
}

// ---------------------------------------------------------------- AXQ / SXQ

void run_axq_sxq(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int n = p.integer("n"), r = p.integer("r");
  const std::string kind = p.text("kind");
  if (kind != "sym" && kind != "anti") throw UsageError("kind must be sym or anti");
  if (n < 1 || r < 2) throw UsageError("axq-sxq needs n >= 1 and r >= 2");
  require_uniform_dim(ctx, n, r);
  const bool sym = kind == "sym";
  std::vector<int> is = p.is_all("i") ? range(2, r) : std::vector<int>{p.integer("i")};
  for (int i : is)
    if (i < 2 || i > r) throw UsageError("i must lie in [2, r]");
  const auto spec = sym ? RelationSpec::turnbull_sym(n, 1) : RelationSpec::turnbull_anti(n, 1);
  const auto x = x_matrix(spec);
  const auto space = MixedSpace::uniform(n, r);
  const auto rows = determining_rows(sym ? SymmetrizerKind::Antisymmetric : SymmetrizerKind::Symmetric, range(1, r), space);
  const auto x1 = embed_matrix(x, 1, space);
  Verdict v(ctx);
  for (int i : is) {
    const auto lhs = compose_all({rows, x1, q_operator(1, i, space)}, spec);
    v.same(lhs, zero_like(lhs), "i=" + std::to_string(i));
  }
  v.finish(rep);
  add_model_note(rep, spec);
  rep.model_notes.push_back(sym ? "A_r X_1 Q^(1,i) with X symmetric" : "S_r X_1 Q^(1,i) with X antisymmetric");
}

// ---------------------------------------------------------------- three-index claim

void run_claim(const ParamMap& pm, CheckContext& ctx, CheckReport& rep, bool drop_q) {
  const Params p(pm);
  const int n = p.integer("n"), r = p.integer("r");
  if (n < 1 || r < 3) throw UsageError("claim needs n >= 1 and r >= 3");
  require_uniform_dim(ctx, n, r);
  std::vector<std::vector<int>> triples;
  if (p.is_all("triple")) {
    triples = multi_indices(r, 3, IndexFlavor::Strict);
  } else {
    const auto t = p.int_list("triple");
    if (t.size() != 3 || !(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= r))
      throw UsageError("triple must be i<j<k within [1, r]");
    triples.push_back(t);
  }
  const auto spec = RelationSpec::capelli(n, n, n);
  const auto x = x_matrix(spec);
  const auto space = MixedSpace::uniform(n, r);
  Verdict v(ctx);
  for (const auto& t : triples) {
    const int i = t[0], j = t[1], k = t[2];
    const auto a3 = symmetrizer(SymmetrizerKind::Antisymmetric, {i, j, k}, space);
    const auto xi = embed_matrix(x, i, space), xj = embed_matrix(x, j, space), xk = embed_matrix(x, k, space);
    const auto qij = q_operator(i, j, space), qjk = q_operator(j, k, space), qik = q_operator(i, k, space);
    const std::string where = "triple=" + index_string(t);
    const TensorOperator first = drop_q ? compose(xi, qjk, spec) : compose_all({xi, qij, qjk}, spec);
    const auto lhs1 = compose(a3, first - compose(xj, qjk, spec), spec);
    v.same(lhs1, zero_like(lhs1), where);
    if (!drop_q) {
      const auto lhs2 = compose(a3, compose_all({xi, qik, qjk}, spec) - compose(xk, qjk, spec), spec);
      v.same(lhs2, zero_like(lhs2), where + " second form");
    }
  }
  v.finish(rep);
  add_model_note(rep, spec);
  if (drop_q) rep.model_notes.push_back("mutation: Q^(i,j) dropped from the first term");
}

// ---------------------------------------------------------------- HUKS expansion (even case)

void run_huks_exp(const ParamMap& pm, CheckContext& ctx, CheckReport& rep, bool drop_w) {
  const Params p(pm);
  const int n = p.integer("n"), m = p.integer("m");
  if (n < 2 || n % 2 != 0) throw UsageError("huks-exp needs even n >= 2");
  if (m < 1 || m > n) throw UsageError("huks-exp needs 1 <= m <= n");
  require_uniform_dim(ctx, n, m);
  const HuksOps ops(n, AntisymSide::Y, m);
  const auto rows = determining_rows(SymmetrizerKind::Antisymmetric, range(1, m), ops.space);
  const TensorOperator lhs = shifted_product(ops, rows, m, [m](int t) { return m - 1 - t; });
  ctx.checkpoint();
  TensorOperator rhs = x_then_y(ops, rows, m);
  for (int q = 0; q <= (m + 1) / 2 - 1; ++q) {
    TensorOperator term = s_term(ops, rows, m, q);
    if (!drop_w) term += w_term(ops, rows, m, q);
    rhs += scale(term, h_power(ops.spec, q + 1, q % 2 == 0 ? -1 : 1), ops.spec);
    ctx.checkpoint();
  }
  Verdict v(ctx);
  v.same(lhs, rhs, "A_m");
  v.finish(rep);
  add_model_note(rep, ops.spec);
  if (drop_w) rep.model_notes.push_back("mutation: the w_p terms are omitted");
}

// ---------------------------------------------------------------- odd expansion

void run_odd_exp(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int n = p.integer("n"), m = p.integer("m");
  if (n < 1 || n % 2 == 0) throw UsageError("odd-exp needs odd n");
  if (m < 1 || m > n) throw UsageError("odd-exp needs 1 <= m <= n");
  require_uniform_dim(ctx, n, m);
  const HuksOps ops(n, p.side(), m);
  const auto rows = determining_rows(SymmetrizerKind::Antisymmetric, range(1, m), ops.space);
  const TensorOperator lhs = shifted_product(ops, rows, m, [m](int t) { return m - t; });
  TensorOperator rhs = x_then_y(ops, rows, m);
  for (int k = 1; k <= m / 2; ++k) {
    rhs += scale(s_term(ops, rows, m, k - 1), h_power(ops.spec, k, k % 2 == 0 ? 1 : -1), ops.spec);
    ctx.checkpoint();
  }
  Verdict v(ctx);
  v.same(lhs, rhs, "A_m");
  v.finish(rep);
  add_model_note(rep, ops.spec);
}

// ---------------------------------------------------------------- Phi + Psi

void run_phi_psi(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params prm(pm);
  const int n = prm.integer("n");
  if (n < 2 || n % 2 != 0) throw UsageError("huks-phi-psi needs even n >= 2");
  require_uniform_dim(ctx, n, n);
  std::vector<int> ps = prm.is_all("p") ? range(0, n / 2 - 1) : std::vector<int>{prm.integer("p")};
  for (int p : ps)
    if (p < 0 || p > n / 2 - 1) throw UsageError("p must lie in [0, n/2 - 1]");
  const HuksOps ops(n, AntisymSide::Y, n);
  const auto& spec = ops.spec;
  const auto& space = ops.space;
  const auto e = TensorOperator::basis_vector(space, range(1, n));
  const auto id = TensorOperator::identity(space);
  Verdict v(ctx);
  for (int p : ps) {
    const auto all = range(1, n);
    const TensorOperator phi = compose_all({q_operator(2 * p + 1, 2 * p + 2, space),
                                            slot_product(ops.y, without(all, odd_set(p + 1)), space, spec),
                                            f_operator(p + 1, space), g_operator(p + 1, n), e},
                                           spec);
    TensorOperator bracket = id;
    for (int k : without(all, range(1, 2 * p)))
      if (k != 2 * p + 2) bracket -= perm_operator(Permutation::transposition(n, k, 2 * p + 2), space);
    auto y_skip = odd_set(p);
    y_skip.push_back(2 * p + 2);
    const TensorOperator psi = compose_all({slot_product(ops.y, without(all, y_skip), space, spec), bracket,
                                            f_operator(p, space), g_operator(p, n), e},
                                           spec);
    const auto outer = compose_all({symmetrizer(SymmetrizerKind::Antisymmetric, even_set(p + 1), space),
                                    symmetrizer(SymmetrizerKind::Antisymmetric, without(all, even_set(p + 1)), space),
                                    q_chain(odd_even_pairs(p), space, spec)},
                                   spec);
    const auto phi_part = compose(outer, phi, spec), psi_part = compose(outer, psi, spec);
    const auto lhs = phi_part + psi_part;
    v.same(lhs, zero_like(lhs), "p=" + std::to_string(p));
    rep.model_notes.push_back("p=" + std::to_string(p) + ": Phi part has " + std::to_string(term_count(phi_part)) +
                              " terms, Psi part " + std::to_string(term_count(psi_part)));
  }
  v.finish(rep);
  add_model_note(rep, spec);
}

// ---------------------------------------------------------------- odd antisymmetric lemma

void run_odd_anti(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params prm(pm);
  const int n = prm.integer("n"), k = prm.integer("k");
  if (n < 3 || n % 2 == 0) throw UsageError("odd-anti needs odd n >= 3");
  if (k < 1 || k > (n - 1) / 2) throw UsageError("odd-anti needs 1 <= k <= (n-1)/2");
  require_uniform_dim(ctx, n, n);
  Verdict v(ctx);
  const auto all = range(1, n);

  // (1) X antisymmetric: A_n (prod_{i notin I''} X_i) Q...Q = 0.
  const HuksOps xa(n, AntisymSide::X, n);
  const auto rows = determining_rows(SymmetrizerKind::Antisymmetric, all, xa.space);
  for (const auto& subset : subsets(n, 2 * k))
    for (const auto& sh : shuffles_of(subset)) {
      const auto lhs = compose_all({rows, slot_product(xa.x, without(all, partners(sh.order)), xa.space, xa.spec),
                                    q_chain(sh.order, xa.space, xa.spec)},
                                   xa.spec);
      v.same(lhs, zero_like(lhs), "part 1, pairs " + index_string(sh.order));
    }

  // (2) Y antisymmetric: A_{n-k} Q^(1,2)...Q^(2k-1,2k) (prod_{i notin odd[k]} Y_i) F_k G_k e_{1..n} = 0.
  const HuksOps ya(n, AntisymSide::Y, n);
  const auto e = TensorOperator::basis_vector(ya.space, all);
  const auto lhs = compose_all({symmetrizer(SymmetrizerKind::Antisymmetric, without(all, even_set(k)), ya.space),
                                q_chain(odd_even_pairs(k), ya.space, ya.spec),
                                slot_product(ya.y, without(all, odd_set(k)), ya.space, ya.spec), f_operator(k, ya.space),
                                g_operator(k, n), e},
                               ya.spec);
  v.same(lhs, zero_like(lhs), "part 2");
  v.finish(rep);
  add_model_note(rep, xa.spec);
  add_model_note(rep, ya.spec);
}

}  // namespace

void register_lemmas(std::vector<CheckDef>& defs) {
  defs.push_back({"lemma-axq-sxq", "A_r X_1 Q^(1,i) = 0 for symmetric X; S_r X_1 Q^(1,i) = 0 for antisymmetric X",
                  {{"kind", "sym", "sym | anti"}, {"n", "2", "size of X"}, {"r", "2", "tensor degree"}, {"i", "all", "slot in [2, r] or all"}},
                  false, run_axq_sxq});
  defs.push_back({"lemma-claim", "A_3(X_iQ^(i,j)Q^(j,k) - X_jQ^(j,k)) = 0 and its second form",
                  {{"n", "2", "size of X"}, {"r", "3", "tensor degree"}, {"triple", "all", "(i,j,k) with i<j<k <= r, or all"}},
                  false, [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_claim(p, c, r, false); }});
  defs.push_back({"lemma-huks-exp", "expansion of A_m(X_1Y_1 + h(m-2))...(X_mY_m - h) into s_p and w_p terms",
                  {{"n", "4", "even size"}, {"m", "2", "tensor degree, m <= n"}}, false,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_huks_exp(p, c, r, false); }});
  defs.push_back({"lemma-huks-phi-psi", "A'A''Q...Q(Phi + Psi) e_{1..n} = 0 for antisymmetric Y",
                  {{"n", "4", "even size"}, {"p", "all", "0 <= p <= n/2 - 1, or all"}}, false, run_phi_psi});
  defs.push_back({"lemma-odd-exp", "expansion of A_m(X_1Y_1 + h(m-1))...X_mY_m into s_{k-1} terms",
                  {{"n", "3", "odd size"}, {"m", "2", "tensor degree, m <= n"}, {"side", "Y", "antisymmetric factor: X | Y"}}, false,
                  run_odd_exp});
  defs.push_back({"lemma-odd-anti", "both vanishing statements of the odd antisymmetric lemma",
                  {{"n", "3", "odd size"}, {"k", "1", "1 <= k <= (n-1)/2"}}, false, run_odd_anti});

  defs.push_back({"mutation-claim-drop-q", "negative control: Q^(i,j) dropped from the three-index claim",
                  {{"n", "3", "size of X"}, {"r", "3", "tensor degree"}, {"triple", "(1,2,3)", "(i,j,k) or all"}}, true,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_claim(p, c, r, true); }});
  defs.push_back({"mutation-huks-exp-drop-w", "negative control: HUKS expansion without the w_p terms",
                  {{"n", "2", "even size"}, {"m", "2", "tensor degree"}}, true,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_huks_exp(p, c, r, true); }});
}

}  // namespace capelli::detail
