#include "capelli/tensorop/builders.hpp"

#include "capelli/exactalg/errors.hpp"
#include "capelli/matfun/matfun.hpp"

namespace capelli {

TensorOperator perm_operator(const Permutation& sigma, const MixedSpace& space) {
  if (sigma.size() != space.factors()) throw UsageError("permutation size does not match the number of factors");
  std::vector<int> dims(space.dims().size());
  for (int i = 1; i <= sigma.size(); ++i) dims[static_cast<std::size_t>(sigma(i) - 1)] = space.dim(i);
  const MixedSpace target(std::move(dims));
  TensorOperator op(space, target);
  MultiIndex image(space.dims().size());
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    const auto k = space.multi_index(col);
    for (int i = 1; i <= sigma.size(); ++i) image[static_cast<std::size_t>(sigma(i) - 1)] = k[static_cast<std::size_t>(i - 1)];
    op.add_entry(target.index(image), col, NCPoly(1));
  }
  return op;
}

TensorOperator perm_operator(const Permutation& sigma, int local_dim, int r) {
  return perm_operator(sigma, MixedSpace::uniform(local_dim, r));
}

TensorOperator q_operator(int a, int b, const MixedSpace& space) {
  if (a == b) throw UsageError("Q needs two distinct factors");
  const int d = space.dim(a);
  if (space.dim(b) != d) throw UsageError("Q on factors of unequal dimension");
  TensorOperator op(space, space);
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    auto k = space.multi_index(col);
    if (k[static_cast<std::size_t>(a - 1)] != k[static_cast<std::size_t>(b - 1)]) continue;
    for (int p = 1; p <= d; ++p) {
      k[static_cast<std::size_t>(a - 1)] = p;
      k[static_cast<std::size_t>(b - 1)] = p;
      op.add_entry(space.index(k), col, NCPoly(1));
    }
  }
  return op;
}

TensorOperator embed_matrix(const PolyMatrix& m, int position, const MixedSpace& space) {
  if (static_cast<int>(m.cols()) != space.dim(position)) throw UsageError("matrix columns do not match the factor dimension");
  const MixedSpace target = space.with_dim(position, static_cast<int>(m.rows()));
  TensorOperator op(space, target);
  const auto slot = static_cast<std::size_t>(position - 1);
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    auto k = space.multi_index(col);
    const auto j = static_cast<std::size_t>(k[slot] - 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m.at(i, j).is_zero()) continue;
      k[slot] = static_cast<int>(i + 1);
      op.add_entry(target.index(k), col, m.at(i, j));
    }
  }
  return op;
}

TensorOperator symmetrizer(SymmetrizerKind kind, const std::vector<int>& positions, const MixedSpace& space) {
  if (positions.empty()) return TensorOperator::identity(space);
  const int d = space.dim(positions.front());
  for (int p : positions)
    if (space.dim(p) != d) throw UsageError("symmetrizer over factors of unequal dimension");
  const int size = static_cast<int>(positions.size());
  const Rational norm = Rational(1) / factorial(size);
  const auto perms = Permutation::all(size);
  TensorOperator op(space, space);
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    const auto k = space.multi_index(col);
    auto image = k;
    for (const auto& sigma : perms) {
      for (int t = 1; t <= size; ++t) {
        const auto to = static_cast<std::size_t>(positions[static_cast<std::size_t>(sigma(t) - 1)] - 1);
        image[to] = k[static_cast<std::size_t>(positions[static_cast<std::size_t>(t - 1)] - 1)];
      }
      const Rational c = kind == SymmetrizerKind::Antisymmetric ? norm * Rational(sigma.sign()) : norm;
      op.add_entry(space.index(image), col, NCPoly(c));
    }
  }
  return op;
}

TensorOperator antisymmetrizer(int r, int local_dim) {
  std::vector<int> positions;
  for (int i = 1; i <= r; ++i) positions.push_back(i);
  return symmetrizer(SymmetrizerKind::Antisymmetric, positions, MixedSpace::uniform(local_dim, r));
}

GroupOperator epsilon_r(int r, int local_dim) {
  const MixedSpace space = MixedSpace::uniform(local_dim, r);
  GroupOperator g(r, space, space);
  for (const auto& sigma : Permutation::all(r)) g.add_term(sigma, perm_operator(sigma, space));
  return g;
}

std::vector<Permutation> two_shuffle_permutations(int m) {
  std::vector<int> idx;
  for (int i = 1; i <= 2 * m; ++i) idx.push_back(i);
  std::vector<Permutation> out;
  for (const auto& sh : two_shuffles(idx)) out.push_back(Permutation::from_images(sh.order));
  return out;
}

TensorOperator f_operator(int m, int n) {
  if (m < 1) throw UsageError("F_m needs m >= 1");
  const MixedSpace space = MixedSpace::uniform(n, 2 * m);
  TensorOperator op(space, space);
  for (const auto& sigma : two_shuffle_permutations(m)) op += perm_operator(sigma.inverse(), space) * Rational(sigma.sign());
  return op;
}

TensorOperator f_operator(int m, const MixedSpace& space) {
  if (m < 0 || 2 * m > space.factors()) throw UsageError("F_m needs 0 <= 2m <= number of factors");
  if (m == 0) return TensorOperator::identity(space);
  TensorOperator op(space, space);
  for (const auto& sigma : two_shuffle_permutations(m)) {
    auto images = sigma.images();
    for (int i = 2 * m + 1; i <= space.factors(); ++i) images.push_back(i);
    const auto extended = Permutation::from_images(images);
    op += perm_operator(extended.inverse(), space) * Rational(sigma.sign());
  }
  return op;
}

Permutation pattern_permutation(const std::vector<int>& subset, int n) {
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> order;
  for (int i : subset) {
    if (i < 1 || i > n || used[static_cast<std::size_t>(i)]) throw UsageError("pattern subset must hold distinct entries of [n]");
    used[static_cast<std::size_t>(i)] = true;
    order.push_back(i);
  }
  for (int i = 1; i <= n; ++i)
    if (!used[static_cast<std::size_t>(i)]) order.push_back(i);
  return Permutation::from_images(order).inverse();
}

TensorOperator g_operator(int m, int n) {
  if (m < 0 || 2 * m > n) throw UsageError("G_m needs 0 <= 2m <= n");
  const MixedSpace space = MixedSpace::uniform(n, n);
  if (m == 0) return TensorOperator::identity(space);
  TensorOperator op(space, space);
  for (const auto& subset : multi_indices(n, 2 * m, IndexFlavor::Strict)) {
    const Permutation tau = pattern_permutation(subset, n);
    op += perm_operator(tau, space) * Rational(tau.sign());
  }
  return op;
}

NCPoly coefficient(const TensorOperator& op, const MultiIndex& out, const MultiIndex& in) { return op.entry(out, in); }

NCPoly coefficient(const GroupOperator& op, const Permutation& sigma, const MultiIndex& out, const MultiIndex& in) {
  if (sigma.size() != op.degree()) throw BoundsError("permutation degree does not match the group operator");
  return op.component(sigma).entry(out, in);
}

}  // namespace capelli
