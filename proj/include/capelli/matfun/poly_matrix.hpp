#pragma once

#include <string>
#include <vector>

#include "capelli/exactalg/ncpoly.hpp"

namespace capelli {

// Dense rectangular matrix over the NCPoly ring. Indices are 0-based; sub() takes 1-based lists
// to match how multi-indices are written.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix from_rational(const RationalMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  NCPoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const NCPoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix sub(const std::vector<int>& row_indices, const std::vector<int>& col_indices) const;
  PolyMatrix transposed() const;
  bool is_zero() const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  PolyMatrix& operator*=(const Rational& c);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<NCPoly> data_;
};

// Entry products are taken left factor first: (AB)_{ik} = sum_j A_{ij} * B_{jk}.
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const RelationSpec& spec);
// c * M with c a rational matrix acting from the left (entries of c are scalars).
PolyMatrix scalar_left(const RationalMatrix& c, const PolyMatrix& m);

// The generator matrices of a spec, with symmetric/antisymmetric entries resolved.
PolyMatrix x_matrix(const RelationSpec& spec);
PolyMatrix y_matrix(const RelationSpec& spec);
// H realized under the hmode (symbols, identity, h on the diagonal, or numbers).
PolyMatrix h_matrix(const RelationSpec& spec);
// X * Y.
PolyMatrix xy_matrix(const RelationSpec& spec);

// Square matrix of dim×dim blocks; used for End(V)-valued arguments of d^φ.
struct BlockMatrix {
  std::size_t size = 0;
  std::size_t block_dim = 0;
  std::vector<PolyMatrix> blocks;

  BlockMatrix(std::size_t n, std::size_t dim) : size(n), block_dim(dim), blocks(n * n, PolyMatrix(dim, dim)) {}
  PolyMatrix& at(std::size_t i, std::size_t j) { return blocks[i * size + j]; }
  const PolyMatrix& at(std::size_t i, std::size_t j) const { return blocks[i * size + j]; }
  // Lifts every entry to entry * Id_dim.
  static BlockMatrix lift(const PolyMatrix& m, std::size_t dim);
};

}  // namespace capelli
