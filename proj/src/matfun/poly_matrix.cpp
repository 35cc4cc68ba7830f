#include "capelli/matfun/poly_matrix.hpp"

#include "capelli/exactalg/errors.hpp"

namespace capelli {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = NCPoly(1);
  return m;
}

PolyMatrix PolyMatrix::from_rational(const RationalMatrix& r) {
  PolyMatrix m(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m.at(i, j) = NCPoly(r.at(i, j));
  return m;
}

PolyMatrix PolyMatrix::sub(const std::vector<int>& row_indices, const std::vector<int>& col_indices) const {
  PolyMatrix m(row_indices.size(), col_indices.size());
  for (std::size_t a = 0; a < row_indices.size(); ++a)
    for (std::size_t b = 0; b < col_indices.size(); ++b) {
      const int i = row_indices[a];
      const int j = col_indices[b];
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > rows_ || static_cast<std::size_t>(j) > cols_) {
        throw BoundsError("submatrix index out of range");
      }
      m.at(a, b) = at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rational& c) {
  for (auto& p : data_) p *= c;
  return *this;
}

std::string PolyMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + at(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const RelationSpec& spec) {
  if (a.cols() != b.rows()) throw UsageError("matrix shape mismatch in product");
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k)
      for (std::size_t j = 0; j < a.cols(); ++j) multiply_add(c.at(i, k), a.at(i, j), b.at(j, k), spec);
  return c;
}

PolyMatrix scalar_left(const RationalMatrix& c, const PolyMatrix& m) {
  if (c.cols() != m.rows()) throw UsageError("matrix shape mismatch in scalar product");
  PolyMatrix out(c.rows(), m.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < m.cols(); ++k) out.at(i, k) += m.at(j, k) * c.at(i, j);
    }
  return out;
}

PolyMatrix x_matrix(const RelationSpec& spec) {
  PolyMatrix m(static_cast<std::size_t>(spec.x_rows()), static_cast<std::size_t>(spec.x_cols()));
  for (int i = 1; i <= spec.x_rows(); ++i)
    for (int j = 1; j <= spec.x_cols(); ++j)
      m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = generator(spec, GeneratorSymbol::x(i, j));
  return m;
}

PolyMatrix y_matrix(const RelationSpec& spec) {
  PolyMatrix m(static_cast<std::size_t>(spec.y_rows()), static_cast<std::size_t>(spec.y_cols()));
  for (int i = 1; i <= spec.y_rows(); ++i)
    for (int j = 1; j <= spec.y_cols(); ++j)
      m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = generator(spec, GeneratorSymbol::y(i, j));
  return m;
}

namespace {

NCPoly central_poly(const CentralSum& sum, const RelationSpec& spec) {
  NCPoly p = NCPoly::from_monomial(Monomial(), 0, spec.tag());
  for (const auto& t : sum) p.add_term(t.symbol ? Monomial::of({*t.symbol}) : Monomial(), t.coeff);
  return p;
}

}  // namespace

PolyMatrix h_matrix(const RelationSpec& spec) {
  if (spec.family() == Family::Huks) {
    const auto n = static_cast<std::size_t>(spec.n());
    PolyMatrix m(n, n);
    const NCPoly h = central_poly(spec.h_scalar(), spec);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = h;
    return m;
  }
  PolyMatrix m(static_cast<std::size_t>(spec.h_rows()), static_cast<std::size_t>(spec.h_cols()));
  for (int i = 1; i <= spec.h_rows(); ++i)
    for (int l = 1; l <= spec.h_cols(); ++l)
      m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(l - 1)) = central_poly(spec.h_value(i, l), spec);
  return m;
}

PolyMatrix xy_matrix(const RelationSpec& spec) { return multiply(x_matrix(spec), y_matrix(spec), spec); }

BlockMatrix BlockMatrix::lift(const PolyMatrix& m, std::size_t dim) {
  if (m.rows() != m.cols()) throw UsageError("block lift of a non-square matrix");
  BlockMatrix b(m.rows(), dim);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t d = 0; d < dim; ++d) b.at(i, j).at(d, d) = m.at(i, j);
  return b;
}

}  // namespace capelli
