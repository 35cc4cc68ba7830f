#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "capelli/exactalg/errors.hpp"
#include "capelli/exactalg/ncpoly.hpp"
#include "capelli/exactalg/weyl.hpp"

using namespace capelli;

namespace {

using G = GeneratorSymbol;

std::vector<RelationSpec> all_families() {
  return {
      RelationSpec::capelli(1, 1, 1),
      RelationSpec::capelli(2, 3, 2),
      RelationSpec::capelli(3, 2, 2, HMode::Identity),
      RelationSpec::turnbull_sym(2, 2),
      RelationSpec::turnbull_sym(3, 2, HMode::Identity),
      RelationSpec::turnbull_anti(3, 2),
      RelationSpec::huks(2, AntisymSide::Y),
      RelationSpec::huks(3, AntisymSide::X),
      RelationSpec::weyl(2),
  };
}

std::vector<G> symbols_of(const RelationSpec& spec) {
  std::vector<G> out;
  for (int i = 1; i <= spec.x_rows(); ++i)
    for (int j = 1; j <= spec.x_cols(); ++j) out.push_back(G::x(i, j));
  for (int i = 1; i <= spec.y_rows(); ++i)
    for (int j = 1; j <= spec.y_cols(); ++j) out.push_back(G::y(i, j));
  if (spec.hmode() == HMode::Symbolic)
    for (int i = 1; i <= spec.h_rows(); ++i)
      for (int j = 1; j <= spec.h_cols(); ++j) out.push_back(G::h_entry(i, j));
  if (spec.family() == Family::Huks && spec.hmode() != HMode::Identity && spec.hmode() != HMode::Numeric)
    out.push_back(G::h());
  return out;
}

std::vector<G> random_word(std::mt19937_64& rng, const std::vector<G>& symbols, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::vector<G> w(len(rng));
  for (auto& g : w) g = symbols[pick(rng)];
  return w;
}

NCPoly random_poly(std::mt19937_64& rng, const RelationSpec& spec, int max_degree) {
  const auto symbols = symbols_of(spec);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<long> coeff(-3, 3);
  NCPoly p = NCPoly::from_monomial(Monomial(), 0, spec.tag());
  for (int t = terms(rng); t > 0; --t) {
    const auto w = random_word(rng, symbols, max_degree);
    p += normalize(w, coeff(rng), spec);
  }
  return p;
}

// Independent oracle: rewrite adjacent out-of-order pairs one at a time until every word is sorted.
NCPoly naive_normalize(const std::vector<G>& word, const Rational& coeff, const RelationSpec& spec) {
  std::map<std::vector<std::uint32_t>, Rational> pending;
  NCPoly done = NCPoly::from_monomial(Monomial(), 0, spec.tag());
  std::vector<std::uint32_t> start;
  int sign = 1;
  for (const auto& g : word) {
    const auto c = spec.canonicalize(g);
    sign *= c.sign;
    start.push_back(c.symbol.code());
  }
  if (sign == 0) return done;
  pending[start] = coeff * Rational(sign);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    auto w = node.key();
    const Rational c = node.mapped();
    if (c.is_zero()) continue;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      done.add_term(Monomial(Monomial::Codes(w.begin(), w.end())), c);
      continue;
    }
    const auto a = G::from_code(w[i]);
    const auto b = G::from_code(w[i + 1]);
    auto swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    pending[swapped] += c;
    if (a.kind == Kind::Y && b.kind == Kind::X) {
      // Y X = X Y - [X, Y]
      for (const auto& t : spec.commutator_template(b.row, b.col, a.row, a.col)) {
        std::vector<std::uint32_t> rest(w.begin(), w.begin() + static_cast<long>(i));
        if (t.symbol) rest.push_back(t.symbol->code());
        rest.insert(rest.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        pending[rest] -= c * t.coeff;
      }
    }
  }
  return done;
}

}  // namespace

TEST(Rational, LowestTermsAndSign) {
  Rational q(6, -4);
  EXPECT_EQ(q.numerator(), "-3");
  EXPECT_EQ(q.denominator(), "2");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational(1, 0), UsageError);
  EXPECT_THROW(Rational::parse("1/0"), UsageError);
  EXPECT_THROW(Rational(1) / Rational(0), UsageError);
  EXPECT_EQ(factorial(5), Rational(120));
}

TEST(Commutator, FamilyTemplates) {
  EXPECT_EQ(commutator_of(RelationSpec::capelli(1, 1, 1), G::x(1, 1), G::y(1, 1)).to_string(), "-H[1,1]");
  EXPECT_EQ(commutator_of(RelationSpec::turnbull_sym(2, 2), G::x(1, 1), G::y(1, 1)).to_string(), "-2*H[1,1]");
  EXPECT_TRUE(commutator_of(RelationSpec::huks(2, AntisymSide::Y), G::x(1, 1), G::y(1, 1)).is_zero());
  EXPECT_EQ(commutator_of(RelationSpec::huks(2, AntisymSide::Y), G::x(2, 1), G::y(1, 2)).to_string(), "-h");
  EXPECT_EQ(commutator_of(RelationSpec::capelli(2, 2, 2, HMode::Identity), G::x(1, 2), G::y(2, 1)).to_string(), "-1");
  EXPECT_THROW(commutator_of(RelationSpec::capelli(1, 1, 1), G::x(2, 1), G::y(1, 1)), BoundsError);
}

TEST(Commutator, TemplateRespectsDeclaredSymmetry) {
  for (const auto& spec : {RelationSpec::turnbull_sym(3, 2), RelationSpec::turnbull_anti(3, 2)}) {
    const int flip = spec.x_symmetry() == Symmetry::Symmetric ? 1 : -1;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
          for (int l = 1; l <= 2; ++l) {
            NCPoly a, b;
            for (const auto& t : spec.commutator_template(i, j, k, l))
              a.add_term(t.symbol ? Monomial::of({*t.symbol}) : Monomial(), t.coeff);
            for (const auto& t : spec.commutator_template(j, i, k, l))
              b.add_term(t.symbol ? Monomial::of({*t.symbol}) : Monomial(), t.coeff * Rational(flip));
            EXPECT_EQ(a, b) << spec.describe() << " " << i << j << k << l;
            if (flip == -1 && i == j) EXPECT_TRUE(a.is_zero());
          }
  }
  const auto huks = RelationSpec::huks(3, AntisymSide::Y);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          Rational a, b;
          for (const auto& t : huks.commutator_template(i, j, k, l)) a += t.coeff;
          for (const auto& t : huks.commutator_template(i, j, l, k)) b -= t.coeff;
          EXPECT_EQ(a, b);
        }
}

TEST(Normalize, WorkedExamples) {
  const auto c1 = RelationSpec::capelli(1, 1, 1);
  const std::vector<G> yx{G::y(1, 1), G::x(1, 1)};
  EXPECT_EQ(normalize(yx, 1, c1).to_string(), "X[1,1]*Y[1,1] + H[1,1]");
  const auto c2 = RelationSpec::capelli(2, 2, 2);
  const std::vector<G> xx{G::x(1, 2), G::x(1, 1)};
  EXPECT_EQ(normalize(xx, 1, c2).to_string(), "X[1,1]*X[1,2]");
  const auto w1 = RelationSpec::weyl(1);
  const std::vector<G> dxx{weyl_d(1, 1), weyl_x(1, 1), weyl_x(1, 1)};
  EXPECT_EQ(normalize(dxx, 1, w1).to_string(), "X[1,1]^2*Y[1,1] + 2*X[1,1]");
}

TEST(Multiply, WorkedExamples) {
  const auto c1 = RelationSpec::capelli(1, 1, 1);
  const NCPoly x = generator(c1, G::x(1, 1));
  const NCPoly y = generator(c1, G::y(1, 1));
  EXPECT_EQ(multiply(x, y, c1).to_string(), "X[1,1]*Y[1,1]");
  EXPECT_EQ(multiply(y, x, c1).to_string(), "X[1,1]*Y[1,1] + H[1,1]");
  const NCPoly left = multiply(multiply(y, x, c1), x, c1);
  const NCPoly right = multiply(y, multiply(x, x, c1), c1);
  EXPECT_EQ(left, right);
  EXPECT_EQ(left.to_string(), "X[1,1]^2*Y[1,1] + 2*X[1,1]*H[1,1]");
}

TEST(Multiply, RejectsForeignSpec) {
  const auto a = RelationSpec::capelli(1, 1, 1);
  const auto b = RelationSpec::capelli(2, 2, 2);
  EXPECT_THROW(multiply(generator(a, G::x(1, 1)), generator(b, G::y(1, 1)), b), UsageError);
  EXPECT_THROW(generator(a, G::x(1, 1)) + generator(b, G::x(1, 1)), UsageError);
  EXPECT_EQ(multiply(NCPoly(3), generator(b, G::x(1, 1)), b).to_string(), "3*X[1,1]");
}

TEST(Normalize, AgreesWithAdjacentSwapRewriting) {
  std::mt19937_64 rng(20240611);
  for (const auto& spec : all_families()) {
    const auto symbols = symbols_of(spec);
    for (int trial = 0; trial < 150; ++trial) {
      const auto w = random_word(rng, symbols, 6);
      ASSERT_EQ(normalize(w, 1, spec), naive_normalize(w, 1, spec)) << spec.describe();
    }
  }
}

TEST(Normalize, Idempotent) {
  std::mt19937_64 rng(7);
  for (const auto& spec : all_families()) {
    const auto symbols = symbols_of(spec);
    // exhaustive at degree <= 2, sampled up to degree 6
    for (const auto& a : symbols)
      for (const auto& b : symbols) {
        const std::vector<G> w{a, b};
        const NCPoly p = normalize(w, 1, spec);
        for (const auto& [m, c] : p.terms()) {
          const auto syms = m.symbols();
          ASSERT_EQ(normalize(syms, c, spec), NCPoly::from_monomial(m, c, spec.tag()));
        }
      }
    for (int trial = 0; trial < 100; ++trial) {
      const NCPoly p = normalize(random_word(rng, symbols, 6), 1, spec);
      for (const auto& [m, c] : p.terms()) {
        const auto syms = m.symbols();
        ASSERT_EQ(normalize(syms, c, spec), NCPoly::from_monomial(m, c, spec.tag()));
      }
    }
  }
}

TEST(Multiply, Associative) {
  std::mt19937_64 rng(31337);
  for (const auto& spec : all_families()) {
    for (int trial = 0; trial < 1000; ++trial) {
      const NCPoly p = random_poly(rng, spec, 3);
      const NCPoly q = random_poly(rng, spec, 3);
      const NCPoly r = random_poly(rng, spec, 3);
      ASSERT_EQ(multiply(multiply(p, q, spec), r, spec), multiply(p, multiply(q, r, spec), spec))
          << spec.describe() << "\n" << p.to_string() << "\n" << q.to_string() << "\n" << r.to_string();
    }
  }
}

TEST(Multiply, XCommutesWithH) {
  for (const auto& spec : {RelationSpec::capelli(2, 2, 2), RelationSpec::capelli(2, 3, 3)}) {
    for (int i = 1; i <= spec.x_rows(); ++i)
      for (int j = 1; j <= spec.x_cols(); ++j)
        for (int k = 1; k <= spec.h_rows(); ++k)
          for (int t = 1; t <= spec.h_cols(); ++t) {
            const NCPoly x = generator(spec, G::x(i, j));
            const NCPoly h = generator(spec, G::h_entry(k, t));
            EXPECT_TRUE((multiply(x, h, spec) - multiply(h, x, spec)).is_zero());
          }
  }
}

TEST(Normalize, AntisymmetricCanonicalization) {
  const auto spec = RelationSpec::turnbull_anti(3, 2);
  std::mt19937_64 rng(99);
  const auto symbols = symbols_of(spec);
  for (int trial = 0; trial < 100; ++trial) {
    auto w = random_word(rng, symbols, 4);
    auto with_diag = w;
    with_diag.insert(with_diag.begin() + static_cast<long>(w.size() / 2), G::x(2, 2));
    EXPECT_TRUE(normalize(with_diag, 1, spec).is_zero());
    auto upper = w;
    auto lower = w;
    upper.push_back(G::x(1, 3));
    lower.push_back(G::x(3, 1));
    EXPECT_EQ(normalize(lower, 1, spec), -normalize(upper, 1, spec));
  }
  const auto huks = RelationSpec::huks(2, AntisymSide::Y);
  const std::vector<G> w{G::y(2, 1), G::x(1, 2)};
  const std::vector<G> v{G::y(1, 2), G::x(1, 2)};
  EXPECT_EQ(normalize(w, 1, huks), -normalize(v, 1, huks));
}

TEST(Weyl, ActionExamples) {
  const auto spec = RelationSpec::weyl(1);
  const NCPoly x = generator(spec, weyl_x(1, 1));
  const NCPoly d = generator(spec, weyl_d(1, 1));
  const NCPoly x2 = multiply(x, x, spec);
  EXPECT_EQ(apply_weyl(d, x2, spec), 2 * x);
  EXPECT_EQ(apply_weyl(multiply(x, d, spec), x, spec), x);
  const std::vector<G> dx{weyl_d(1, 1), weyl_x(1, 1)};
  EXPECT_EQ(apply_weyl(normalize(dx, 1, spec), NCPoly(1), spec).to_string(), "1");
  EXPECT_THROW(apply_weyl(d, x, RelationSpec::capelli(1, 1, 1)), UsageError);
  EXPECT_TRUE(RelationSpec::capelli(2, 2, 2, HMode::Identity).is_weyl_model());
}

TEST(Weyl, NormalFormActsLikeWord) {
  std::mt19937_64 rng(4242);
  for (int n = 1; n <= 2; ++n) {
    const auto spec = RelationSpec::weyl(n);
    const auto symbols = symbols_of(spec);
    const auto basis = weyl_polynomial_basis(spec, 3);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      WordSum words;
      NCPoly p = NCPoly::from_monomial(Monomial(), 0, spec.tag());
      for (int t = 0; t < 2; ++t) {
        Word w{Rational(t + 1), random_word(rng, symbols, 5)};
        p += normalize(w.symbols, w.coeff, spec);
        words.push_back(std::move(w));
      }
      const CommPoly f = basis[pick(rng)] + basis[pick(rng)];
      ASSERT_EQ(apply_weyl(p, f, spec), apply_weyl(words, f, spec));
    }
  }
}

TEST(Weyl, BasisCounts) {
  // monomials of degree <= 2 in 4 variables: 1 + 4 + 10
  EXPECT_EQ(weyl_polynomial_basis(RelationSpec::weyl(2), 2).size(), 15u);
}
