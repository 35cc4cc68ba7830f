#pragma once

#include <map>

#include "capelli/symgroup/group_algebra.hpp"
#include "capelli/symgroup/young.hpp"
#include "capelli/tensorop/tensor_operator.hpp"

namespace capelli {

// Element of C[S_r] ⊗ Hom(domain, codomain): a finite sum of σ ⊗ A_σ.
class GroupOperator {
 public:
  using Terms = std::map<Permutation, TensorOperator>;

  GroupOperator(int r, MixedSpace domain, MixedSpace codomain)
      : r_(r), domain_(std::move(domain)), codomain_(std::move(codomain)) {}
  // 1 ⊗ A.
  static GroupOperator lift(int r, const TensorOperator& a);
  // z ⊗ A.
  static GroupOperator tensor(const GroupAlgebraElement& z, const TensorOperator& a);

  int degree() const { return r_; }
  const MixedSpace& domain() const { return domain_; }
  const MixedSpace& codomain() const { return codomain_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Permutation& sigma, const TensorOperator& a);
  // The operator component at σ (zero when absent).
  TensorOperator component(const Permutation& sigma) const;

  GroupOperator& operator+=(const GroupOperator& o);
  GroupOperator& operator-=(const GroupOperator& o);
  GroupOperator& operator*=(const Rational& c);
  friend GroupOperator operator+(GroupOperator a, const GroupOperator& b) { return a += b; }
  friend GroupOperator operator-(GroupOperator a, const GroupOperator& b) { return a -= b; }
  friend bool operator==(const GroupOperator&, const GroupOperator&) = default;

  // Applies f to every operator component (row or column selection, for instance).
  GroupOperator map_operators(const std::function<TensorOperator(const TensorOperator&)>& f) const;

 private:
  int r_;
  MixedSpace domain_;
  MixedSpace codomain_;
  Terms terms_;
};

// (a⊗A)(b⊗B) = ab ⊗ AB.
GroupOperator compose(const GroupOperator& a, const GroupOperator& b, const RelationSpec& spec);
// (1⊗A)·g and g·(1⊗B) without lifting.
GroupOperator compose(const TensorOperator& a, const GroupOperator& g, const RelationSpec& spec);
GroupOperator compose(const GroupOperator& g, const TensorOperator& b, const RelationSpec& spec);

// sum_σ φ(σ)_{ab} A_σ: the (a,b) entry of the image under a representation.
TensorOperator representation_entry(const SeminormalRep& rep, const GroupOperator& g, std::size_t a, std::size_t b);

}  // namespace capelli
