#include "internal.hpp"

#include <random>

#include "capelli/exactalg/ncpoly.hpp"

namespace capelli::detail {

namespace {

using G = GeneratorSymbol;

std::vector<RelationSpec> fuzz_families() {
  return {
      RelationSpec::capelli(1, 1, 1),
      RelationSpec::capelli(2, 3, 2),
      RelationSpec::capelli(3, 2, 2, HMode::Identity),
      RelationSpec::turnbull_sym(2, 2),
      RelationSpec::turnbull_sym(3, 2, HMode::ScalarH),
      RelationSpec::turnbull_anti(3, 2),
      RelationSpec::huks(2, AntisymSide::Y),
      RelationSpec::huks(3, AntisymSide::X),
      RelationSpec::weyl(2),
  };
}

// Every generator of the algebra, including raw (uncanonicalized) antisymmetric entries.
std::vector<G> alphabet(const RelationSpec& spec) {
  std::vector<G> out;
  for (int i = 1; i <= spec.x_rows(); ++i)
    for (int j = 1; j <= spec.x_cols(); ++j) out.push_back(G::x(i, j));
  for (int i = 1; i <= spec.y_rows(); ++i)
    for (int j = 1; j <= spec.y_cols(); ++j) out.push_back(G::y(i, j));
  if (spec.hmode() == HMode::Symbolic)
    for (int i = 1; i <= spec.h_rows(); ++i)
      for (int j = 1; j <= spec.h_cols(); ++j) out.push_back(G::h_entry(i, j));
  if (spec.family() == Family::Huks && spec.hmode() == HMode::ScalarH) out.push_back(G::h());
  return out;
}

std::vector<G> random_word(std::mt19937_64& rng, const std::vector<G>& symbols, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::vector<G> w(static_cast<std::size_t>(len(rng)));
  for (auto& g : w) g = symbols[pick(rng)];
  return w;
}

NCPoly random_poly(std::mt19937_64& rng, const RelationSpec& spec, const std::vector<G>& symbols, int max_degree) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<long> coeff(-3, 3);
  NCPoly p = NCPoly::from_monomial(Monomial(), 0, spec.tag());
  for (int t = terms(rng); t > 0; --t) p += normalize(random_word(rng, symbols, 0, max_degree), coeff(rng), spec);
  return p;
}

std::string word_string(const std::vector<G>& w) {
  std::string s;
  for (const auto& g : w) s += (s.empty() ? "" : "*") + Monomial::of({g}).to_string();
  return s.empty() ? "1" : s;
}

int seed_of(const Params& p) { return p.integer("seed"); }

// ---------------------------------------------------------------- associativity

void run_associativity(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int triples = p.integer("triples"), degree = p.integer("degree");
  if (triples < 1 || degree < 0 || degree > 6) throw UsageError("associativity needs triples >= 1 and 0 <= degree <= 6");
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed_of(p)));
  Verdict v(ctx);
  for (const auto& spec : fuzz_families()) {
    const auto symbols = alphabet(spec);
    for (int k = 0; k < triples && v.ok(); ++k) {
      const NCPoly a = random_poly(rng, spec, symbols, degree), b = random_poly(rng, spec, symbols, degree),
                   c = random_poly(rng, spec, symbols, degree);
      v.same(multiply(multiply(a, b, spec), c, spec), multiply(a, multiply(b, c, spec), spec),
             {spec.describe(), "trial " + std::to_string(k), ""});
    }
  }
  v.finish(rep);
  rep.model_notes.push_back(std::to_string(triples) + " seeded triples of degree <= " + std::to_string(degree) + " over each of " +
                            std::to_string(fuzz_families().size()) + " algebras");
}

// ---------------------------------------------------------------- idempotence

void run_idempotence(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int exhaustive = p.integer("exhaustive_degree"), samples = p.integer("samples");
  if (exhaustive < 0 || exhaustive > 3 || samples < 0) throw UsageError("idempotence needs exhaustive_degree in [0, 3] and samples >= 0");
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed_of(p)));
  Verdict v(ctx);
  std::size_t words = 0;
  for (const auto& spec : fuzz_families()) {
    const auto symbols = alphabet(spec);
    auto check_word = [&](const std::vector<G>& w) {
      ++words;
      const NCPoly nf = normalize(w, 1, spec);
      for (const auto& [m, c] : nf.terms()) {
        const auto syms = m.symbols();
        v.same(normalize(syms, c, spec), NCPoly::from_monomial(m, c, spec.tag()), {spec.describe(), word_string(w), ""});
      }
    };
    std::vector<std::vector<G>> layer{{}};
    for (int d = 0; d <= exhaustive; ++d) {
      for (const auto& w : layer) check_word(w);
      std::vector<std::vector<G>> next;
      if (d < exhaustive)
        for (const auto& w : layer)
          for (const auto& g : symbols) {
            auto longer = w;
            longer.push_back(g);
            next.push_back(std::move(longer));
          }
      layer = std::move(next);
      ctx.checkpoint();
    }
    for (int k = 0; k < samples; ++k) check_word(random_word(rng, symbols, exhaustive + 1, 6));
  }
  v.finish(rep);
  rep.model_notes.push_back(std::to_string(words) + " words: all of degree <= " + std::to_string(exhaustive) +
                            ", sampled up to degree 6");
}

// ---------------------------------------------------------------- symmetry

void run_symmetry(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int samples = p.integer("samples");
  if (samples < 1) throw UsageError("samples must be >= 1");
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed_of(p)));
  struct Case {
    RelationSpec spec;
    Kind kind;
    int sign;  // -1 antisymmetric, +1 symmetric
  };
  const std::vector<Case> cases{{RelationSpec::turnbull_anti(3, 2), Kind::X, -1},
                                {RelationSpec::huks(3, AntisymSide::X), Kind::X, -1},
                                {RelationSpec::huks(3, AntisymSide::Y), Kind::Y, -1},
                                {RelationSpec::turnbull_sym(3, 2), Kind::X, 1}};
  Verdict v(ctx);
  for (const auto& c : cases) {
    const auto symbols = alphabet(c.spec);
    const int size = c.kind == Kind::X ? c.spec.x_rows() : c.spec.y_rows();
    auto entry = [&](int i, int j) { return c.kind == Kind::X ? G::x(i, j) : G::y(i, j); };
    std::uniform_int_distribution<int> idx(1, size);
    for (int k = 0; k < samples; ++k) {
      const auto w = random_word(rng, symbols, 0, 4);
      std::uniform_int_distribution<std::size_t> at(0, w.size());
      const auto pos = static_cast<long>(at(rng));
      int i = idx(rng), j = idx(rng);
      if (i == j) j = i % size + 1;
      if (i > j) std::swap(i, j);
      auto with = [&](G g) {
        auto out = w;
        out.insert(out.begin() + pos, g);
        return out;
      };
      const std::string where = c.spec.describe();
      if (c.sign < 0) {
        const int d = idx(rng);
        v.same(normalize(with(entry(d, d)), 1, c.spec), NCPoly(), {where, word_string(with(entry(d, d))), "diagonal"});
      }
      v.same(normalize(with(entry(j, i)), 1, c.spec), normalize(with(entry(i, j)), c.sign, c.spec),
             {where, word_string(with(entry(j, i))), "transposed entry"});
    }
    ctx.checkpoint();
  }
  v.finish(rep);
  rep.model_notes.push_back("antisymmetric X and Y entries, and symmetric X entries, in random words");
}

// ---------------------------------------------------------------- derived [X, H] = 0

void run_derived_xh(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int n = p.integer("n"), m = p.integer("m"), s = p.integer("s");
  if (n < 1 || m < 2 || s < 1) throw UsageError("derived-xh needs n, s >= 1 and m >= 2");
  const auto spec = RelationSpec::capelli(n, m, s, p.hmode());
  Verdict v(ctx);
  for (int k = 1; k <= n; ++k)
    for (int t = 1; t <= s; ++t)
      for (int j = 1; j <= m; ++j) {
        // H_kt recovered from the defining commutator: -[X_kj, Y_jt].
        const NCPoly xk = generator(spec, G::x(k, j)), yj = generator(spec, G::y(j, t));
        const NCPoly h = multiply(yj, xk, spec) - multiply(xk, yj, spec);
        if (spec.hmode() == HMode::Symbolic)
          v.same(h, generator(spec, G::h_entry(k, t)), {"H", index_string({k, t}), "j=" + std::to_string(j)});
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= m; ++b) {
            const NCPoly x = generator(spec, G::x(a, b));
            v.same(multiply(x, h, spec) - multiply(h, x, spec), NCPoly(),
                   {"[X,H]", index_string({a, b}), index_string({k, t}) + " j=" + std::to_string(j)});
          }
      }
  v.finish(rep);
  add_model_note(rep, spec);
}

// ---------------------------------------------------------------- cross-oracles

TensorOperator symmetrized_product(SymmetrizerKind kind, const PolyMatrix& x, int r, const RelationSpec& spec) {
  const int n = static_cast<int>(x.rows());
  const auto space = MixedSpace::uniform(static_cast<int>(x.cols()), r);
  std::vector<Slotted> chain;
  for (int t = 1; t <= r; ++t) chain.push_back({&x, t});
  std::vector<TensorOperator> f{symmetrizer(kind, range(1, r), MixedSpace::uniform(n, r))};
  for (auto& op : embed_chain(chain, space)) f.push_back(std::move(op));
  return compose_all(f, spec);
}

Rational factorial(int r) {
  Rational f = 1;
  for (int k = 2; k <= r; ++k) f *= Rational(k);
  return f;
}

void run_cross_symmetrizer(const ParamMap& pm, CheckContext& ctx, CheckReport& rep, SymmetrizerKind kind) {
  const Params p(pm);
  const int n = p.integer("n"), r = p.integer("r");
  if (n < 1 || r < 1 || r > 4) throw UsageError("cross check needs n >= 1 and 1 <= r <= 4");
  const auto spec = RelationSpec::capelli(n, n, n);
  const auto x = x_matrix(spec);
  const auto op = symmetrized_product(kind, x, r, spec);
  Verdict v(ctx);
  for (const auto& i : multi_indices(n, r, IndexFlavor::Arbitrary))
    for (const auto& k : multi_indices(n, r, IndexFlavor::Arbitrary)) {
      const PolyMatrix sub = x.sub(i, k);
      const NCPoly expected = kind == SymmetrizerKind::Antisymmetric ? column_det(sub, spec) : permanent_rowperm(sub, spec);
      v.same(coefficient(op, i, k) * factorial(r), expected, {"", index_string(i), index_string(k)});
    }
  v.finish(rep);
  rep.model_notes.push_back(std::string("r! times the coefficients of ") +
                            (kind == SymmetrizerKind::Antisymmetric ? "A_r" : "S_r") + " X_1...X_r, X with commuting entries");
}

void run_cross_character(const ParamMap& pm, CheckContext& ctx, CheckReport& rep) {
  const Params p(pm);
  const int n = p.integer("n"), max_r = p.integer("r");
  if (n < 1 || max_r < 1 || max_r > 4) throw UsageError("character check needs n >= 1 and 1 <= r <= 4");
  const auto spec = RelationSpec::capelli(n, n, n);
  const auto x = x_matrix(spec);
  Verdict v(ctx);
  for (int r = 1; r <= max_r; ++r)
    for (const auto& shape : partitions_of(r)) {
      const SeminormalRep rep_l(shape);
      const std::string name = partition_to_string(shape);
      for (const auto& sigma : Permutation::all(r))
        v.same(NCPoly(character(shape, sigma)), NCPoly(rep_l.matrix(sigma).trace()), {name, sigma.to_string(), "character"});
      for (const auto& i : multi_indices(n, r, IndexFlavor::NonDecreasing))
        for (const auto& k : multi_indices(n, r, IndexFlavor::NonDecreasing)) {
          const PolyMatrix sub = x.sub(i, k);
          const PolyMatrix d = schur_matrix_function(rep_l, sub, spec);
          NCPoly trace;
          for (std::size_t a = 0; a < d.rows(); ++a) trace += d.at(a, a);
          v.same(trace, immanant(shape, sub, spec), {name, index_string(i), index_string(k)});
          if (shape.size() == 1) v.same(d.at(0, 0), permanent_rowperm(sub, spec), {name, index_string(i), "trivial"});
          if (static_cast<int>(shape.size()) == r && r > 1)
            v.same(d.at(0, 0), column_det(sub, spec), {name, index_string(i), "sign"});
        }
      ctx.checkpoint();
    }
  v.finish(rep);
  rep.model_notes.push_back("seminormal representations; X with commuting entries");
}

std::vector<ParamSpec> fuzz_params(const std::string& count_name, const std::string& count_default) {
  return {{count_name, count_default, "number of random cases"}, {"seed", "1", "random seed"}};
}

}  // namespace

void register_engine(std::vector<CheckDef>& defs) {
  auto assoc = fuzz_params("triples", "1000");
  assoc.push_back({"degree", "3", "maximum word length"});
  defs.push_back({"engine-associativity", "(pq)r = p(qr) for seeded random polynomials over each algebra family", assoc, false,
                  run_associativity});
  auto idem = fuzz_params("samples", "200");
  idem.push_back({"exhaustive_degree", "3", "all words up to this degree"});
  defs.push_back({"engine-idempotence", "normalizing a normal form returns it unchanged", idem, false, run_idempotence});
  defs.push_back({"engine-symmetry", "antisymmetric diagonals vanish; transposed entries carry the symmetry sign",
                  fuzz_params("samples", "200"), false, run_symmetry});
  defs.push_back({"engine-derived-xh", "H_kt = -[X_kj, Y_jt] commutes with every X_ab",
                  {{"n", "2", "rows of X"}, {"m", "2", "columns of X, at least 2"}, {"s", "2", "columns of Y"},
                   {"hmode", "symbolic", "symbolic | identity | scalar-h"}},
                  false, run_derived_xh});
  defs.push_back({"cross-coldet-antisym", "column_det(X_IK) = r! coefficient of A_r X_1...X_r at (I, K)",
                  {{"n", "3", "size of X"}, {"r", "3", "tensor degree"}}, false,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_cross_symmetrizer(p, c, r, SymmetrizerKind::Antisymmetric); }});
  defs.push_back({"cross-permanent-sym", "permanent(X_IK) = r! coefficient of S_r X_1...X_r at (I, K)",
                  {{"n", "3", "size of X"}, {"r", "3", "tensor degree"}}, false,
                  [](const ParamMap& p, CheckContext& c, CheckReport& r) { run_cross_symmetrizer(p, c, r, SymmetrizerKind::Symmetric); }});
  defs.push_back({"cross-character-trace", "characters are traces; tr d^φ is the immanant; trivial and sign reps give per and det",
                  {{"n", "2", "size of X"}, {"r", "3", "largest degree"}}, false, run_cross_character});
}

}  // namespace capelli::detail
