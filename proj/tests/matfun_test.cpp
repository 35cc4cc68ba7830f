#include <random>

#include <gtest/gtest.h>

#include "capelli/exactalg/errors.hpp"
#include "capelli/matfun/matfun.hpp"

using namespace capelli;

namespace {

using G = GeneratorSymbol;

NCPoly gen(const RelationSpec& spec, G g) { return generator(spec, g); }

// Oracle: the defining sum over S_n, each diagonal product multiplied out left to right.
NCPoly brute_force(const PolyMatrix& m, const RelationSpec& spec, bool signed_sum) {
  NCPoly acc = NCPoly::from_monomial(Monomial(), 0, spec.tag());
  for (const auto& sigma : Permutation::all(static_cast<int>(m.rows()))) {
    NCPoly p = 1;
    for (int t = 1; t <= sigma.size(); ++t)
      p = multiply(p, m.at(static_cast<std::size_t>(sigma(t) - 1), static_cast<std::size_t>(t - 1)), spec);
    acc += signed_sum ? p * Rational(sigma.sign()) : p;
  }
  return acc;
}

PolyMatrix capelli_matrix(const RelationSpec& spec) {
  return xy_matrix(spec) + h_matrix(spec);
}

RationalMatrix random_rational(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-2, 2);
  RationalMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u.at(i, j) = d(rng);
  return u;
}

Rational rational_det(const RationalMatrix& u) {
  Rational acc = 0;
  for (const auto& sigma : Permutation::all(static_cast<int>(u.rows()))) {
    Rational p = sigma.sign();
    for (int t = 1; t <= sigma.size(); ++t) p *= u.at(static_cast<std::size_t>(sigma(t) - 1), static_cast<std::size_t>(t - 1));
    acc += p;
  }
  return acc;
}

}  // namespace

TEST(ColumnDet, TwoByTwoCommuting) {
  const auto spec = RelationSpec::capelli(2, 2, 2);
  const auto x = x_matrix(spec);
  const NCPoly expected = multiply(gen(spec, G::x(1, 1)), gen(spec, G::x(2, 2)), spec) -
                          multiply(gen(spec, G::x(2, 1)), gen(spec, G::x(1, 2)), spec);
  EXPECT_EQ(column_det(x, spec), expected);
  const NCPoly per = multiply(gen(spec, G::x(1, 1)), gen(spec, G::x(2, 2)), spec) +
                     multiply(gen(spec, G::x(2, 1)), gen(spec, G::x(1, 2)), spec);
  EXPECT_EQ(permanent_rowperm(x, spec), per);
}

TEST(ColumnDet, KeepsColumnOrderForNoncommutingEntries) {
  const auto spec = RelationSpec::capelli(2, 2, 2);
  // [[Y11, Y12], [X11, X12]]: the first column factor stays on the left.
  PolyMatrix m(2, 2);
  m.at(0, 0) = gen(spec, G::y(1, 1));
  m.at(0, 1) = gen(spec, G::y(1, 2));
  m.at(1, 0) = gen(spec, G::x(1, 1));
  m.at(1, 1) = gen(spec, G::x(1, 2));
  const NCPoly expected = multiply(m.at(0, 0), m.at(1, 1), spec) - multiply(m.at(1, 0), m.at(0, 1), spec);
  EXPECT_EQ(column_det(m, spec), expected);
}

TEST(ColumnDet, MatchesDefiningSum) {
  for (const auto& spec : {RelationSpec::capelli(3, 2, 3), RelationSpec::turnbull_sym(3, 3),
                           RelationSpec::turnbull_anti(3, 3), RelationSpec::huks(3, AntisymSide::Y)}) {
    PolyMatrix m = xy_matrix(spec);
    if (spec.family() != Family::Huks) m += h_matrix(spec);
    EXPECT_EQ(column_det(m, spec), brute_force(m, spec, true)) << spec.describe();
    EXPECT_EQ(permanent_rowperm(m, spec), brute_force(m, spec, false)) << spec.describe();
  }
}

TEST(ColumnDet, RejectsNonSquare) {
  const auto spec = RelationSpec::capelli(2, 3, 2);
  EXPECT_THROW(column_det(x_matrix(spec), spec), UsageError);
}

TEST(Immanant, TrivialAndSignCharacters) {
  const auto spec = RelationSpec::capelli(3, 3, 3);
  const auto m = capelli_matrix(spec);
  EXPECT_EQ(immanant({3}, m, spec), permanent_rowperm(m, spec));
  EXPECT_EQ(immanant({1, 1, 1}, m, spec), column_det(m, spec));
}

TEST(SchurFunction, OneDimensionalRepsAreDetAndPermanent) {
  const auto spec = RelationSpec::capelli(3, 2, 3);
  const auto m = capelli_matrix(spec);
  const auto sign = schur_matrix_function(SeminormalRep({1, 1, 1}), m, spec);
  ASSERT_EQ(sign.rows(), 1u);
  EXPECT_EQ(sign.at(0, 0), column_det(m, spec));
  const auto triv = schur_matrix_function(SeminormalRep({3}), m, spec);
  EXPECT_EQ(triv.at(0, 0), permanent_rowperm(m, spec));
}

TEST(SchurFunction, TraceIsImmanant) {
  const auto spec = RelationSpec::capelli(3, 2, 3);
  const auto m = capelli_matrix(spec);
  const SeminormalRep rep({2, 1});
  const auto d = schur_matrix_function(rep, m, spec);
  NCPoly trace = 0;
  for (std::size_t a = 0; a < d.rows(); ++a) trace += d.at(a, a);
  EXPECT_EQ(trace, immanant({2, 1}, m, spec));
}

TEST(SchurFunction, LiftedBlocksAgreeWithScalarEntries) {
  const auto spec = RelationSpec::capelli(3, 2, 3);
  const auto m = capelli_matrix(spec);
  const SeminormalRep rep({2, 1});
  const auto scalar = schur_matrix_function(rep, m, spec);
  const auto block = schur_matrix_function(rep, BlockMatrix::lift(m, rep.dimension()), spec);
  EXPECT_EQ(scalar, block);
}

TEST(Pfaffian, FourByFour) {
  const auto spec = RelationSpec::turnbull_anti(4, 1);
  const auto x = x_matrix(spec);
  auto xx = [&](int a, int b, int c, int d) { return multiply(gen(spec, G::x(a, b)), gen(spec, G::x(c, d)), spec); };
  const NCPoly expected = xx(1, 2, 3, 4) - xx(1, 3, 2, 4) + xx(1, 4, 2, 3);
  EXPECT_EQ(pfaffian(x, spec), expected);
  EXPECT_EQ(pfaffian(x.sub({1, 2}, {1, 2}), spec), gen(spec, G::x(1, 2)));
  EXPECT_EQ(pfaffian(PolyMatrix(0, 0), spec), NCPoly(1));
}

TEST(Pfaffian, ThreeDefinitionsAgree) {
  const auto spec = RelationSpec::turnbull_anti(6, 1);
  const auto x = x_matrix(spec);
  for (int size : {2, 4, 6}) {
    std::vector<int> idx;
    for (int i = 1; i <= size; ++i) idx.push_back(i);
    const auto sub = x.sub(idx, idx);
    const NCPoly pf = pfaffian(sub, spec);
    EXPECT_EQ(pf, pfaffian_full_sum(sub, spec)) << size;
    EXPECT_EQ(pf, pfaffian_recursive(sub, spec)) << size;
  }
}

TEST(Pfaffian, SquareIsDeterminant) {
  const auto spec = RelationSpec::turnbull_anti(6, 1);
  const auto x = x_matrix(spec);
  for (int size : {2, 4, 6}) {
    std::vector<int> idx;
    for (int i = 1; i <= size; ++i) idx.push_back(i);
    const auto sub = x.sub(idx, idx);
    const NCPoly pf = pfaffian(sub, spec);
    EXPECT_EQ(multiply(pf, pf, spec), column_det(sub, spec)) << size;
  }
}

TEST(Pfaffian, CongruenceScalesByDet) {
  const auto spec = RelationSpec::turnbull_anti(4, 1);
  const auto x = x_matrix(spec);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_rational(rng, 4);
    const auto congruent = scalar_left(u.transposed(), scalar_left(u.transposed(), x).transposed());
    EXPECT_EQ(pfaffian(congruent, spec), pfaffian(x, spec) * rational_det(u));
  }
}

TEST(Pfaffian, Preconditions) {
  const auto anti = RelationSpec::turnbull_anti(3, 1);
  EXPECT_THROW(pfaffian(x_matrix(anti), anti), UsageError);
  const auto general = RelationSpec::capelli(2, 2, 2);
  EXPECT_THROW(pfaffian(x_matrix(general), general), UsageError);
  // antisymmetric, but mixing X and Y entries
  PolyMatrix mixed(4, 4);
  mixed.at(0, 1) = gen(general, G::x(1, 1));
  mixed.at(1, 0) = -mixed.at(0, 1);
  mixed.at(2, 3) = gen(general, G::y(1, 1));
  mixed.at(3, 2) = -mixed.at(2, 3);
  EXPECT_THROW(pfaffian(mixed, general), UsageError);
}

TEST(MultiIndices, Counts) {
  EXPECT_EQ(multi_indices(4, 2, IndexFlavor::Strict).size(), 6u);
  EXPECT_EQ(multi_indices(4, 2, IndexFlavor::NonDecreasing).size(), 10u);
  EXPECT_EQ(multi_indices(4, 2, IndexFlavor::Arbitrary).size(), 16u);
  EXPECT_EQ(multi_indices(2, 3, IndexFlavor::Strict).size(), 0u);
  EXPECT_EQ(multi_indices(3, 0, IndexFlavor::Strict).size(), 1u);
  EXPECT_EQ(multi_indices(3, 2, IndexFlavor::NonDecreasing).front(), (std::vector<int>{1, 1}));
}

TEST(MultiIndices, VMultiplicity) {
  EXPECT_EQ(v_multiplicity({1, 1, 2}), Rational(2));
  EXPECT_EQ(v_multiplicity({2, 2, 2}), Rational(6));
  EXPECT_EQ(v_multiplicity({1, 2, 3}), Rational(1));
  EXPECT_EQ(v_multiplicity({}), Rational(1));
  EXPECT_THROW(v_multiplicity({2, 1}), UsageError);
}
