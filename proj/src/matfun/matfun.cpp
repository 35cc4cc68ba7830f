#include "capelli/matfun/matfun.hpp"

#include <optional>
#include <set>

#include "capelli/exactalg/errors.hpp"

namespace capelli {

namespace {

void require_square(const PolyMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw UsageError(std::string(what) + " of a non-square matrix");
}

// Expands column by column from the left, memoized on the set of rows already used.
class ColumnExpansion {
 public:
  ColumnExpansion(const PolyMatrix& m, const RelationSpec& spec, bool signed_sum)
      : m_(m), spec_(spec), signed_(signed_sum), memo_(std::size_t{1} << m.rows()) {
    if (m.rows() > 16) throw ResourceExceeded("determinant size above 16");
  }

  NCPoly run() { return expand(0); }

 private:
  const NCPoly& expand(std::uint32_t used) {
    auto& slot = memo_[used];
    if (slot) return *slot;
    const std::size_t n = m_.rows();
    const auto col = static_cast<std::size_t>(__builtin_popcount(used));
    NCPoly acc = NCPoly::from_monomial(Monomial(), 0, spec_.tag());
    if (col == n) {
      acc = NCPoly::from_monomial(Monomial(), 1, spec_.tag());
    } else {
      int smaller_free = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (used & (1u << a)) continue;
        const NCPoly& entry = m_.at(a, col);
        if (!entry.is_zero()) {
          const Rational sign = (signed_ && smaller_free % 2 == 1) ? -1 : 1;
          multiply_add(acc, entry, expand(used | (1u << a)), spec_, sign);
        }
        ++smaller_free;
      }
    }
    slot = std::move(acc);
    return *slot;
  }

  const PolyMatrix& m_;
  const RelationSpec& spec_;
  bool signed_;
  std::vector<std::optional<NCPoly>> memo_;
};

NCPoly diagonal_product(const PolyMatrix& m, const Permutation& sigma, const RelationSpec& spec) {
  NCPoly p = NCPoly::from_monomial(Monomial(), 1, spec.tag());
  for (int t = 1; t <= sigma.size() && !p.is_zero(); ++t)
    p = multiply(p, m.at(static_cast<std::size_t>(sigma(t) - 1), static_cast<std::size_t>(t - 1)), spec);
  return p;
}

void require_pfaffian_input(const PolyMatrix& m, const RelationSpec& spec) {
  require_square(m, "Pfaffian");
  if (m.rows() % 2 != 0) throw UsageError("Pfaffian of an odd-size matrix");
  std::set<std::uint32_t> xs, ys;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(m.at(j, i) == -m.at(i, j))) throw UsageError("Pfaffian of a non-antisymmetric matrix");
      for (const auto& [mono, c] : m.at(i, j).terms())
        for (std::uint32_t code : mono.codes()) {
          if (GeneratorSymbol::kind_of(code) == Kind::X) xs.insert(code);
          if (GeneratorSymbol::kind_of(code) == Kind::Y) ys.insert(code);
        }
    }
  // Mixed X/Y entries are fine only in algebras where those generators commute (e.g. H = 0).
  for (std::uint32_t x : xs)
    for (std::uint32_t y : ys)
      if (!commutator_of(spec, GeneratorSymbol::from_code(x), GeneratorSymbol::from_code(y)).is_zero())
        throw UsageError("Pfaffian entries must pairwise commute");
}

}  // namespace

NCPoly column_det(const PolyMatrix& m, const RelationSpec& spec) {
  require_square(m, "column determinant");
  return ColumnExpansion(m, spec, true).run();
}

NCPoly permanent_rowperm(const PolyMatrix& m, const RelationSpec& spec) {
  require_square(m, "permanent");
  return ColumnExpansion(m, spec, false).run();
}

NCPoly immanant(const Partition& shape, const PolyMatrix& m, const RelationSpec& spec) {
  require_square(m, "immanant");
  if (partition_size(shape) != static_cast<int>(m.rows())) throw UsageError("immanant shape does not match the matrix");
  NCPoly acc = NCPoly::from_monomial(Monomial(), 0, spec.tag());
  for (const auto& sigma : Permutation::all(static_cast<int>(m.rows())))
    acc += diagonal_product(m, sigma, spec) * character(shape, sigma);
  return acc;
}

PolyMatrix schur_matrix_function(const SeminormalRep& rep, const PolyMatrix& m, const RelationSpec& spec) {
  require_square(m, "Schur function");
  if (static_cast<int>(m.rows()) != rep.degree()) throw UsageError("Schur function size does not match the representation");
  const std::size_t dim = rep.dimension();
  PolyMatrix out(dim, dim);
  for (const auto& sigma : Permutation::all(rep.degree())) {
    const NCPoly p = diagonal_product(m, sigma, spec);
    if (p.is_zero()) continue;
    const RationalMatrix phi = rep.matrix(sigma);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        if (!phi.at(a, b).is_zero()) out.at(a, b) += p * phi.at(a, b);
  }
  return out;
}

PolyMatrix schur_matrix_function(const SeminormalRep& rep, const BlockMatrix& m, const RelationSpec& spec) {
  if (static_cast<int>(m.size) != rep.degree()) throw UsageError("Schur function size does not match the representation");
  if (m.block_dim != rep.dimension()) throw UsageError("block dimension does not match the representation");
  const std::size_t dim = rep.dimension();
  PolyMatrix out(dim, dim);
  for (const auto& sigma : Permutation::all(rep.degree())) {
    PolyMatrix prod = PolyMatrix::identity(dim);
    for (int t = 1; t <= rep.degree(); ++t)
      prod = multiply(prod, m.at(static_cast<std::size_t>(sigma(t) - 1), static_cast<std::size_t>(t - 1)), spec);
    out += scalar_left(rep.matrix(sigma), prod);
  }
  return out;
}

NCPoly pfaffian(const PolyMatrix& m, const RelationSpec& spec) {
  require_pfaffian_input(m, spec);
  std::vector<int> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  NCPoly acc = NCPoly::from_monomial(Monomial(), 0, spec.tag());
  for (const auto& sh : two_shuffles(idx)) {
    NCPoly term = NCPoly::from_monomial(Monomial(), sh.sign, spec.tag());
    for (std::size_t k = 0; k + 1 < sh.order.size() && !term.is_zero(); k += 2)
      term = multiply(term, m.at(static_cast<std::size_t>(sh.order[k]), static_cast<std::size_t>(sh.order[k + 1])), spec);
    acc += term;
  }
  return acc;
}

NCPoly pfaffian_full_sum(const PolyMatrix& m, const RelationSpec& spec) {
  require_pfaffian_input(m, spec);
  const int size = static_cast<int>(m.rows());
  if (size > 10) throw ResourceExceeded("full-sum Pfaffian above size 10");
  NCPoly acc = NCPoly::from_monomial(Monomial(), 0, spec.tag());
  for (const auto& sigma : Permutation::all(size)) {
    NCPoly term = NCPoly::from_monomial(Monomial(), sigma.sign(), spec.tag());
    for (int k = 1; k < size && !term.is_zero(); k += 2)
      term = multiply(term, m.at(static_cast<std::size_t>(sigma(k) - 1), static_cast<std::size_t>(sigma(k + 1) - 1)), spec);
    acc += term;
  }
  const int half = size / 2;
  return acc * (Rational(1) / (Rational(1L << half) * factorial(half)));
}

NCPoly pfaffian_recursive(const PolyMatrix& m, const RelationSpec& spec) {
  require_pfaffian_input(m, spec);
  const int size = static_cast<int>(m.rows());
  if (size == 0) return NCPoly::from_monomial(Monomial(), 1, spec.tag());
  NCPoly acc = NCPoly::from_monomial(Monomial(), 0, spec.tag());
  for (int j = 2; j <= size; ++j) {
    std::vector<int> rest;
    for (int k = 2; k <= size; ++k)
      if (k != j) rest.push_back(k);
    const NCPoly minor = pfaffian_recursive(m.sub(rest, rest), spec);
    multiply_add(acc, m.at(0, static_cast<std::size_t>(j - 1)), minor, spec, j % 2 == 0 ? 1 : -1);
  }
  return acc;
}

std::vector<std::vector<int>> multi_indices(int ambient, int length, IndexFlavor flavor) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= ambient; ++v) {
      cur.push_back(v);
      const int next = flavor == IndexFlavor::Strict ? v + 1 : (flavor == IndexFlavor::NonDecreasing ? v : 1);
      self(self, next);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Rational v_multiplicity(const std::vector<int>& j) {
  Rational v = 1;
  for (std::size_t a = 0; a < j.size();) {
    if (a > 0 && j[a] < j[a - 1]) throw UsageError("v(α_J) needs a non-decreasing multi-index");
    std::size_t b = a;
    while (b < j.size() && j[b] == j[a]) ++b;
    v *= factorial(static_cast<int>(b - a));
    a = b;
  }
  return v;
}

}  // namespace capelli
