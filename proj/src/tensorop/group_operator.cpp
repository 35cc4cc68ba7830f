#include "capelli/tensorop/group_operator.hpp"

#include "capelli/exactalg/errors.hpp"

namespace capelli {

GroupOperator GroupOperator::lift(int r, const TensorOperator& a) {
  GroupOperator g(r, a.domain(), a.codomain());
  g.add_term(Permutation::identity(r), a);
  return g;
}

GroupOperator GroupOperator::tensor(const GroupAlgebraElement& z, const TensorOperator& a) {
  GroupOperator g(z.degree(), a.domain(), a.codomain());
  for (const auto& [sigma, c] : z.terms()) g.add_term(sigma, a * c);
  return g;
}

void GroupOperator::add_term(const Permutation& sigma, const TensorOperator& a) {
  if (sigma.size() != r_) throw UsageError("group operator term of the wrong degree");
  if (!(a.domain() == domain_) || !(a.codomain() == codomain_)) throw UsageError("group operator term on the wrong spaces");
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(sigma, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorOperator GroupOperator::component(const Permutation& sigma) const {
  const auto it = terms_.find(sigma);
  return it == terms_.end() ? TensorOperator(domain_, codomain_) : it->second;
}

GroupOperator& GroupOperator::operator+=(const GroupOperator& o) {
  if (o.r_ != r_) throw UsageError("group operator degrees differ");
  for (const auto& [sigma, a] : o.terms_) add_term(sigma, a);
  return *this;
}

GroupOperator& GroupOperator::operator-=(const GroupOperator& o) {
  if (o.r_ != r_) throw UsageError("group operator degrees differ");
  for (const auto& [sigma, a] : o.terms_) add_term(sigma, a * Rational(-1));
  return *this;
}

GroupOperator& GroupOperator::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [sigma, a] : terms_) a *= c;
  return *this;
}

GroupOperator GroupOperator::map_operators(const std::function<TensorOperator(const TensorOperator&)>& f) const {
  GroupOperator out(r_, domain_, codomain_);
  bool first = true;
  for (const auto& [sigma, a] : terms_) {
    TensorOperator image = f(a);
    if (first) {
      out.domain_ = image.domain();
      out.codomain_ = image.codomain();
      first = false;
    }
    out.add_term(sigma, image);
  }
  return out;
}

GroupOperator compose(const GroupOperator& a, const GroupOperator& b, const RelationSpec& spec) {
  if (a.degree() != b.degree()) throw UsageError("group operator degrees differ");
  GroupOperator c(a.degree(), b.domain(), a.codomain());
  for (const auto& [sa, oa] : a.terms())
    for (const auto& [sb, ob] : b.terms()) c.add_term(sa * sb, compose(oa, ob, spec));
  return c;
}

GroupOperator compose(const TensorOperator& a, const GroupOperator& g, const RelationSpec& spec) {
  GroupOperator c(g.degree(), g.domain(), a.codomain());
  for (const auto& [sigma, o] : g.terms()) c.add_term(sigma, compose(a, o, spec));
  return c;
}

GroupOperator compose(const GroupOperator& g, const TensorOperator& b, const RelationSpec& spec) {
  GroupOperator c(g.degree(), b.domain(), g.codomain());
  for (const auto& [sigma, o] : g.terms()) c.add_term(sigma, compose(o, b, spec));
  return c;
}

TensorOperator representation_entry(const SeminormalRep& rep, const GroupOperator& g, std::size_t a, std::size_t b) {
  if (rep.degree() != g.degree()) throw UsageError("representation degree differs from the group operator");
  TensorOperator out(g.domain(), g.codomain());
  for (const auto& [sigma, o] : g.terms()) {
    const Rational c = rep.matrix(sigma).at(a, b);
    if (!c.is_zero()) out += o * c;
  }
  return out;
}

}  // namespace capelli
