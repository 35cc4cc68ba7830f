#include "capelli/symgroup/group_algebra.hpp"

#include "capelli/exactalg/errors.hpp"

namespace capelli {

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& p, const Rational& c) {
  GroupAlgebraElement e(p.size());
  e.add_term(p, c);
  return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational() : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
  if (p.size() != r_) throw UsageError("permutation degree does not match the group algebra");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.r_ != b.r_) throw UsageError("group algebra degree mismatch");
  GroupAlgebraElement out(a.r_);
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_) out.add_term(p * q, c * d);
  return out;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += c.to_string() + "*";
    out += p.to_string();
  }
  return out;
}

GroupAlgebraElement jucys_murphy(int k, int r, bool reversed) {
  if (k < 1 || k > r) throw UsageError("Jucys-Murphy index out of range");
  GroupAlgebraElement z(r);
  if (reversed) {
    for (int i = k + 1; i <= r; ++i) z.add_term(Permutation::transposition(r, k, i), 1);
  } else {
    for (int i = 1; i < k; ++i) z.add_term(Permutation::transposition(r, i, k), 1);
  }
  return z;
}

}  // namespace capelli
