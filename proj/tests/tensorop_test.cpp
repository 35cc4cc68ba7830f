#include <random>

#include <gtest/gtest.h>

#include "capelli/exactalg/errors.hpp"
#include "capelli/matfun/matfun.hpp"
#include "capelli/tensorop/builders.hpp"

using namespace capelli;

namespace {

using G = GeneratorSymbol;

// Any spec works for scalar-entry operators; entries are constants.
const RelationSpec& scalars() {
  static const RelationSpec spec = RelationSpec::capelli(1, 1, 1);
  return spec;
}

TensorOperator random_scalar_operator(std::mt19937_64& rng, const MixedSpace& domain, const MixedSpace& codomain) {
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::bernoulli_distribution keep(0.4);
  TensorOperator op(domain, codomain);
  for (std::size_t i = 0; i < codomain.dimension(); ++i)
    for (std::size_t j = 0; j < domain.dimension(); ++j)
      if (keep(rng)) op.add_entry(i, j, NCPoly(coeff(rng)));
  return op;
}

TensorOperator product_of_embeddings(const PolyMatrix& m, int r, const RelationSpec& spec) {
  MixedSpace space = MixedSpace::uniform(static_cast<int>(m.cols()), r);
  // X_1 X_2 ⋯ X_r, each factor mapping the current domain.
  std::vector<TensorOperator> factors;
  MixedSpace cur = space;
  for (int t = r; t >= 1; --t) {
    factors.insert(factors.begin(), embed_matrix(m, t, cur));
    cur = factors.front().codomain();
  }
  return compose_all(factors, spec);
}

}  // namespace

TEST(MixedSpace, LexicographicIndex) {
  const MixedSpace s({2, 3});
  EXPECT_EQ(s.dimension(), 6u);
  EXPECT_EQ(s.index({1, 1}), 0u);
  EXPECT_EQ(s.index({1, 3}), 2u);
  EXPECT_EQ(s.index({2, 1}), 3u);
  EXPECT_EQ(s.multi_index(5), (MultiIndex{2, 3}));
  EXPECT_THROW(s.index({3, 1}), BoundsError);
  EXPECT_THROW(MixedSpace({0}), UsageError);
}

TEST(PermOperator, SwapsTwoFactors) {
  const auto p = perm_operator(Permutation::transposition(2, 1, 2), 2, 2);
  // P(e_1 ⊗ e_2) = e_2 ⊗ e_1
  EXPECT_EQ(coefficient(p, {2, 1}, {1, 2}), NCPoly(1));
  EXPECT_EQ(coefficient(p, {1, 2}, {1, 2}), NCPoly());
  EXPECT_EQ(perm_operator(Permutation::identity(3), 2, 3), TensorOperator::identity(MixedSpace::uniform(2, 3)));
}

TEST(PermOperator, IsAHomomorphism) {
  for (const auto& a : Permutation::all(3))
    for (const auto& b : Permutation::all(3))
      ASSERT_EQ(compose(perm_operator(a, 2, 3), perm_operator(b, 2, 3), scalars()), perm_operator(a * b, 2, 3))
          << a.to_string() << " " << b.to_string();
}

TEST(PermOperator, MovesFactorContentForMixedDims) {
  const MixedSpace s({2, 3, 1});
  const auto sigma = Permutation::from_images({3, 1, 2});
  const auto p = perm_operator(sigma, s);
  EXPECT_EQ(p.codomain().dims(), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(coefficient(p, {3, 1, 2}, {2, 3, 1}), NCPoly(1));
}

TEST(QOperator, Examples) {
  const auto space = MixedSpace::uniform(2, 2);
  const auto q = q_operator(1, 2, space);
  EXPECT_EQ(coefficient(q, {1, 1}, {2, 2}), NCPoly(1));
  EXPECT_EQ(coefficient(q, {2, 2}, {2, 2}), NCPoly(1));
  EXPECT_EQ(coefficient(q, {1, 2}, {1, 2}), NCPoly());
  EXPECT_EQ(coefficient(q, {1, 1}, {1, 2}), NCPoly());
  EXPECT_THROW(q_operator(1, 2, MixedSpace({2, 3})), UsageError);
}

TEST(QOperator, SquareAndPermutationAbsorption) {
  for (int n = 1; n <= 3; ++n) {
    const auto space = MixedSpace::uniform(n, 3);
    for (int a = 1; a <= 3; ++a)
      for (int b = a + 1; b <= 3; ++b) {
        const auto q = q_operator(a, b, space);
        EXPECT_EQ(compose(q, q, scalars()), q * Rational(n));
        EXPECT_EQ(compose(perm_operator(Permutation::transposition(3, a, b), space), q, scalars()), q);
        EXPECT_EQ(compose(q, perm_operator(Permutation::transposition(3, a, b), space), scalars()), q);
      }
  }
}

TEST(EmbedMatrix, SingleFactorIsTheMatrix) {
  const auto spec = RelationSpec::capelli(2, 3, 2);
  const auto x = x_matrix(spec);
  const auto op = embed_matrix(x, 1, MixedSpace({3}));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      EXPECT_EQ(coefficient(op, {i}, {j}), generator(spec, G::x(i, j)));
  EXPECT_THROW(embed_matrix(x, 1, MixedSpace({2})), UsageError);
}

TEST(EmbedMatrix, DisjointFactorsCommuteUpToEntryCommutators) {
  const auto spec = RelationSpec::capelli(2, 2, 2);
  const MixedSpace space = MixedSpace::uniform(2, 2);
  const auto x1 = embed_matrix(x_matrix(spec), 1, space);
  const auto y2 = embed_matrix(y_matrix(spec), 2, space);
  const auto x2 = embed_matrix(x_matrix(spec), 2, space);
  EXPECT_EQ(compose(x1, x2, spec), compose(x2, x1, spec));
  // X_1 Y_2 and Y_2 X_1 differ by the commutators of their entries.
  const auto diff = compose(x1, y2, spec) - compose(y2, x1, spec);
  EXPECT_FALSE(diff.is_zero());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          ASSERT_EQ(coefficient(diff, {i, k}, {j, l}), commutator_of(spec, G::x(i, j), G::y(k, l)));
  const auto xx = compose(x1, x2, spec);
  EXPECT_EQ(coefficient(xx, {1, 2}, {2, 1}),
            multiply(generator(spec, G::x(1, 2)), generator(spec, G::x(2, 1)), spec));
}

TEST(Symmetrizer, Idempotent) {
  for (int d = 1; d <= 3; ++d)
    for (int r = 1; r <= 3; ++r) {
      const auto space = MixedSpace::uniform(d, r);
      std::vector<int> all;
      for (int i = 1; i <= r; ++i) all.push_back(i);
      for (auto kind : {SymmetrizerKind::Antisymmetric, SymmetrizerKind::Symmetric}) {
        const auto a = symmetrizer(kind, all, space);
        EXPECT_EQ(compose(a, a, scalars()), a) << d << " " << r;
      }
    }
  const auto a2 = antisymmetrizer(2, 2);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(a2.entry(i, 0).is_zero());
}

TEST(Symmetrizer, PartialPositions) {
  const auto space = MixedSpace::uniform(2, 3);
  const auto a = symmetrizer(SymmetrizerKind::Antisymmetric, {1, 3}, space);
  EXPECT_EQ(coefficient(a, {2, 1, 1}, {1, 1, 2}), NCPoly(Rational(-1, 2)));
  EXPECT_EQ(coefficient(a, {1, 1, 2}, {1, 1, 2}), NCPoly(Rational(1, 2)));
  EXPECT_TRUE(coefficient(a, {1, 2, 2}, {1, 1, 2}).is_zero());
}

TEST(Symmetrizer, CoefficientIsScaledDeterminantAndPermanent) {
  for (int r = 1; r <= 3; ++r) {
    const auto spec = RelationSpec::capelli(3, 3, 3);
    const auto x = x_matrix(spec);
    const auto prod = product_of_embeddings(x, r, spec);
    const auto space = MixedSpace::uniform(3, r);
    std::vector<int> all;
    for (int i = 1; i <= r; ++i) all.push_back(i);
    const auto a = compose(symmetrizer(SymmetrizerKind::Antisymmetric, all, space), prod, spec);
    const auto s = compose(symmetrizer(SymmetrizerKind::Symmetric, all, space), prod, spec);
    const Rational norm = Rational(1) / factorial(r);
    for (const auto& i : multi_indices(3, r, IndexFlavor::Arbitrary))
      for (const auto& k : multi_indices(3, r, IndexFlavor::Arbitrary)) {
        const auto sub = x.sub(i, k);
        ASSERT_EQ(coefficient(a, i, k), column_det(sub, spec) * norm);
        ASSERT_EQ(coefficient(s, i, k), permanent_rowperm(sub, spec) * norm);
      }
  }
}

TEST(Epsilon, SmallCases) {
  const auto e1 = epsilon_r(1, 2);
  ASSERT_EQ(e1.terms().size(), 1u);
  EXPECT_EQ(e1.component(Permutation::identity(1)), TensorOperator::identity(MixedSpace({2})));
  const auto e2 = epsilon_r(2, 2);
  EXPECT_EQ(e2.component(Permutation::transposition(2, 1, 2)), perm_operator(Permutation::transposition(2, 1, 2), 2, 2));
}

TEST(Epsilon, AbsorbsTranspositions) {
  for (int r = 2; r <= 3; ++r)
    for (int d = 1; d <= 2; ++d) {
      const auto eps = epsilon_r(r, d);
      const auto space = MixedSpace::uniform(d, r);
      for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
          const auto t = Permutation::transposition(r, i, j);
          const auto left = compose(eps, GroupOperator::tensor(GroupAlgebraElement::of(t), TensorOperator::identity(space)), scalars());
          const auto right = compose(eps, perm_operator(t, space), scalars());
          EXPECT_EQ(left, right);
        }
    }
}

TEST(Composition, Associative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dim(1, 3);
    const MixedSpace s1({dim(rng), dim(rng)}), s2({dim(rng)}), s3({dim(rng), dim(rng)}), s4({dim(rng)});
    const auto a = random_scalar_operator(rng, s2, s1);
    const auto b = random_scalar_operator(rng, s3, s2);
    const auto c = random_scalar_operator(rng, s4, s3);
    ASSERT_EQ(compose(compose(a, b, scalars()), c, scalars()), compose(a, compose(b, c, scalars()), scalars()));
  }
}

TEST(Composition, AssociativeWithPolynomialEntries) {
  const auto spec = RelationSpec::capelli(2, 2, 2);
  const MixedSpace space = MixedSpace::uniform(2, 2);
  const auto x1 = embed_matrix(x_matrix(spec), 1, space);
  const auto y2 = embed_matrix(y_matrix(spec), 2, space);
  const auto y1 = embed_matrix(y_matrix(spec), 1, space);
  EXPECT_EQ(compose(compose(y1, x1, spec), y2, spec), compose(y1, compose(x1, y2, spec), spec));
  EXPECT_THROW(compose(x1, embed_matrix(x_matrix(spec), 1, MixedSpace({2})), spec), UsageError);
}

TEST(GroupOperatorProduct, Associative) {
  std::mt19937_64 rng(5);
  const MixedSpace space = MixedSpace::uniform(2, 2);
  auto random_group_op = [&]() {
    GroupOperator g(2, space, space);
    for (const auto& sigma : Permutation::all(2)) g.add_term(sigma, random_scalar_operator(rng, space, space));
    return g;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_group_op(), b = random_group_op(), c = random_group_op();
    ASSERT_EQ(compose(compose(a, b, scalars()), c, scalars()), compose(a, compose(b, c, scalars()), scalars()));
  }
}

TEST(RepresentationEntry, SignRepOfEpsilonIsAntisymmetrizer) {
  const SeminormalRep sign({1, 1, 1});
  const auto entry = representation_entry(sign, epsilon_r(3, 2), 0, 0);
  EXPECT_EQ(entry * (Rational(1) / 6), antisymmetrizer(3, 2));
}

TEST(TwoShuffles, AsPermutations) {
  const auto pi = two_shuffle_permutations(2);
  ASSERT_EQ(pi.size(), 3u);
  EXPECT_TRUE(pi[0].is_identity());
  EXPECT_EQ(pi[1], Permutation::transposition(4, 2, 3));
  EXPECT_EQ(pi[2].images(), (std::vector<int>{1, 4, 2, 3}));
  EXPECT_EQ(pi[2].sign(), 1);
}

TEST(FOperator, SmallCases) {
  EXPECT_EQ(f_operator(1, 3), TensorOperator::identity(MixedSpace::uniform(3, 2)));
  const auto space = MixedSpace::uniform(2, 4);
  TensorOperator expected(space, space);
  for (const auto& sigma : two_shuffle_permutations(2)) expected += perm_operator(sigma.inverse(), space) * Rational(sigma.sign());
  EXPECT_EQ(f_operator(2, 2), expected);
}

TEST(GOperator, ActionOnTheStandardVector) {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; 2 * m <= n; ++m) {
      const auto g = g_operator(m, n);
      MultiIndex base;
      for (int i = 1; i <= n; ++i) base.push_back(i);
      const auto col = compose(g, TensorOperator::basis_vector(g.domain(), base), scalars());
      std::size_t count = 0;
      for (const auto& subset : multi_indices(n, 2 * m, IndexFlavor::Strict)) {
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i)
          if (std::find(subset.begin(), subset.end(), i) == subset.end()) rest.push_back(i);
        MultiIndex target = subset;
        target.insert(target.end(), rest.begin(), rest.end());
        ASSERT_EQ(coefficient(col, target, {}), NCPoly(block_sign({subset, rest})));
        ++count;
      }
      EXPECT_EQ(col.nonzeros(), count);
    }
  EXPECT_THROW(g_operator(2, 3), UsageError);
}

TEST(PfaffianOperatorIdentity, EvenSlotsOnly) {
  // Q^{(1,2)}Q^{(3,4)} X_2 X_4 F_2 e_I = Pf(X_I) Q^{(1,2)}Q^{(3,4)} e_{i1,i1,i3,i3}
  const int n = 4;
  const auto spec = RelationSpec::turnbull_anti(n, 1);
  const auto x = x_matrix(spec);
  const auto space = MixedSpace::uniform(n, 4);
  const auto qq = compose(q_operator(1, 2, space), q_operator(3, 4, space), spec);
  const auto lhs_op = compose_all({qq, embed_matrix(x, 2, space), embed_matrix(x, 4, space), f_operator(2, n)}, spec);
  for (const auto& i : multi_indices(n, 4, IndexFlavor::Arbitrary)) {
    const auto lhs = compose(lhs_op, TensorOperator::basis_vector(space, i), spec);
    const NCPoly pf = pfaffian(x.sub(i, i), spec);
    const auto rhs = compose(qq, TensorOperator::basis_vector(space, {i[0], i[0], i[2], i[2]}), spec).map_entries(
        [&](const NCPoly& c) { return multiply(c, pf, spec); });
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(Coefficient, BoundsAndGroupLookup) {
  const auto id = TensorOperator::identity(MixedSpace::uniform(2, 2));
  EXPECT_EQ(coefficient(id, {2, 1}, {2, 1}), NCPoly(1));
  EXPECT_THROW(coefficient(id, {3, 1}, {1, 1}), BoundsError);
  const auto eps = epsilon_r(2, 2);
  EXPECT_EQ(coefficient(eps, Permutation::transposition(2, 1, 2), {1, 2}, {2, 1}), NCPoly(1));
  EXPECT_THROW(coefficient(eps, Permutation::identity(3), {1, 2}, {2, 1}), BoundsError);
}
