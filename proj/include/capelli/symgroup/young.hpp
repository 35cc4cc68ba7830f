#pragma once

#include <map>
#include <string>
#include <vector>

#include "capelli/exactalg/rational.hpp"
#include "capelli/symgroup/group_algebra.hpp"
#include "capelli/symgroup/permutation.hpp"

namespace capelli {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

// "[3,1]" in and out; parse throws UsageError on malformed or non-decreasing input.
Partition parse_partition(const std::string& text);
std::string partition_to_string(const Partition& p);
int partition_size(const Partition& p);
// Partitions of r, lexicographically decreasing: [3], [2,1], [1,1,1].
std::vector<Partition> partitions_of(int r);

class StandardTableau {
 public:
  // Throws UsageError unless rows form a standard filling of 1..r.
  explicit StandardTableau(std::vector<std::vector<int>> rows);
  // "[[1,2],[3]]".
  static StandardTableau parse(const std::string& text);
  // All standard tableaux of the shape, ordered lexicographically by row-reading word.
  static std::vector<StandardTableau> all(const Partition& shape);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const { return size_; }
  // 0-based (row, column) of the cell holding k.
  std::pair<int, int> position(int k) const;
  // Column minus row of the cell holding k.
  int content(int k) const;
  std::vector<int> reading_word() const;

  std::string to_string() const;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int size_ = 0;
};

// Young's seminormal form of the irreducible representation of shape λ. Basis vectors are indexed
// by StandardTableau::all(λ); matrices act on column vectors, so φ(σ)φ(τ) = φ(στ).
class SeminormalRep {
 public:
  static constexpr int kMaxDegree = 6;

  // Throws ResourceExceeded when |λ| exceeds max_degree.
  explicit SeminormalRep(const Partition& shape, int max_degree = kMaxDegree);

  const Partition& shape() const { return shape_; }
  int degree() const { return r_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  std::size_t index_of(const StandardTableau& t) const;

  // φ(s_i) for the adjacent transposition (i, i+1).
  const RationalMatrix& generator(int i) const { return generators_[static_cast<std::size_t>(i - 1)]; }
  RationalMatrix matrix(const Permutation& sigma) const;
  RationalMatrix matrix(const GroupAlgebraElement& a) const;
  // Diagonal of the invariant form in which the Young basis is orthogonal; the first tableau has norm 1.
  const std::vector<Rational>& gram() const { return gram_; }

 private:
  Partition shape_;
  int r_ = 0;
  std::vector<StandardTableau> basis_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<RationalMatrix> generators_;
  std::vector<Rational> gram_;
};

// Irreducible character value χ^λ(σ) by the Murnaghan–Nakayama rule.
Rational character(const Partition& shape, const Permutation& sigma);

// Cycle lengths of σ in decreasing order.
std::vector<int> cycle_type(const Permutation& sigma);

}  // namespace capelli
