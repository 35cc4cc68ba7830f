#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <map>
#include <string>
#include <vector>

#include "capelli/exactalg/ncpoly.hpp"

namespace capelli {

using MultiIndex = std::vector<int>;

// Tensor product of factors with individual dimensions. Basis vectors are multi-indices with
// 1-based entries, linearized lexicographically (first factor most significant).
class MixedSpace {
 public:
  MixedSpace() = default;
  explicit MixedSpace(std::vector<int> dims);
  static MixedSpace uniform(int dim, int factors) { return MixedSpace(std::vector<int>(static_cast<std::size_t>(factors), dim)); }

  const std::vector<int>& dims() const { return dims_; }
  int factors() const { return static_cast<int>(dims_.size()); }
  // 1-based factor position.
  int dim(int position) const;
  std::size_t dimension() const { return total_; }

  std::size_t index(const MultiIndex& k) const;
  MultiIndex multi_index(std::size_t linear) const;
  MixedSpace with_dim(int position, int dim) const;

  std::string to_string() const;
  friend bool operator==(const MixedSpace&, const MixedSpace&) = default;

 private:
  std::vector<int> dims_;
  std::size_t total_ = 1;
};

// Sparse linear map codomain <- domain with NCPoly entries. Only nonzero entries are stored.
class TensorOperator {
 public:
  using Row = std::map<std::size_t, NCPoly>;
  using Rows = std::map<std::size_t, Row>;

  TensorOperator() = default;
  TensorOperator(MixedSpace domain, MixedSpace codomain) : domain_(std::move(domain)), codomain_(std::move(codomain)) {}
  static TensorOperator identity(const MixedSpace& space);
  // A single column: the basis vector e_k of the given space viewed as a map from a 1-dim space.
  static TensorOperator basis_vector(const MixedSpace& space, const MultiIndex& k);

  const MixedSpace& domain() const { return domain_; }
  const MixedSpace& codomain() const { return codomain_; }
  const Rows& rows() const { return rows_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return rows_.empty(); }

  NCPoly entry(std::size_t out, std::size_t in) const;
  NCPoly entry(const MultiIndex& out, const MultiIndex& in) const;
  void add_entry(std::size_t out, std::size_t in, const NCPoly& value);

  // Keeps only the listed rows / columns; shapes are unchanged.
  TensorOperator select_rows(const std::vector<std::size_t>& keep) const;
  TensorOperator select_cols(const std::vector<std::size_t>& keep) const;
  // Applies f to every entry, dropping the ones that become zero.
  TensorOperator map_entries(const std::function<NCPoly(const NCPoly&)>& f) const;

  TensorOperator& operator+=(const TensorOperator& o);
  TensorOperator& operator-=(const TensorOperator& o);
  TensorOperator& operator*=(const Rational& c);
  friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
  friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
  friend TensorOperator operator*(TensorOperator a, const Rational& c) { return a *= c; }
  friend bool operator==(const TensorOperator&, const TensorOperator&) = default;

  std::string to_string() const;

 private:
  friend TensorOperator compose(const TensorOperator& a, const TensorOperator& b, const RelationSpec& spec);

  MixedSpace domain_;
  MixedSpace codomain_;
  Rows rows_;
};

// a ∘ b; entries multiply with the factor from a on the left.
TensorOperator compose(const TensorOperator& a, const TensorOperator& b, const RelationSpec& spec);
// Left-to-right fold of a product a_1 a_2 ⋯ a_k.
TensorOperator compose_all(const std::vector<TensorOperator>& factors, const RelationSpec& spec);

// Locates the first entry where a and b differ, as (out, in) linear indices.
struct EntryDifference {
  std::size_t out = 0;
  std::size_t in = 0;
  NCPoly lhs;
  NCPoly rhs;
};
std::optional<EntryDifference> first_difference(const TensorOperator& a, const TensorOperator& b);

}  // namespace capelli
