#pragma once

#include <map>
#include <string>

#include "capelli/exactalg/rational.hpp"
#include "capelli/symgroup/permutation.hpp"

namespace capelli {

// Element of the rational group algebra of S_r; the product is convolution.
class GroupAlgebraElement {
 public:
  using TermMap = std::map<Permutation, Rational>;

  explicit GroupAlgebraElement(int r) : r_(r) {}
  static GroupAlgebraElement of(const Permutation& p, const Rational& c = 1);

  int degree() const { return r_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& p) const;

  void add_term(const Permutation& p, const Rational& c);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Rational& c);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

  // "(1,3) + (2,3)"; the identity prints as "()" and zero as "0".
  std::string to_string() const;

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  int r_;
  TermMap terms_;
};

// z_k = sum_{i<k} (i,k), or z'_k = sum_{i>k} (k,i) when reversed.
GroupAlgebraElement jucys_murphy(int k, int r, bool reversed = false);

}  // namespace capelli
