#include "capelli/exactalg/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "capelli/exactalg/errors.hpp"

namespace capelli {

Monomial::Monomial(Codes codes) : codes_(std::move(codes)) { std::sort(codes_.begin(), codes_.end()); }

Monomial Monomial::of(std::initializer_list<GeneratorSymbol> symbols) {
  Codes c;
  for (const auto& s : symbols) c.push_back(s.code());
  return Monomial(std::move(c));
}

std::vector<GeneratorSymbol> Monomial::symbols() const {
  std::vector<GeneratorSymbol> out;
  out.reserve(codes_.size());
  for (auto c : codes_) out.push_back(GeneratorSymbol::from_code(c));
  return out;
}

std::size_t Monomial::count(GeneratorSymbol g) const {
  return static_cast<std::size_t>(std::count(codes_.begin(), codes_.end(), g.code()));
}

std::string Monomial::to_string() const {
  if (codes_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < codes_.size();) {
    std::size_t j = i;
    while (j < codes_.size() && codes_[j] == codes_[i]) ++j;
    if (!out.empty()) out += '*';
    out += GeneratorSymbol::from_code(codes_[i]).to_string();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

NCPoly::NCPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

NCPoly NCPoly::from_monomial(const Monomial& m, const Rational& c, std::uint64_t tag) {
  NCPoly p;
  p.tag_ = tag;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool NCPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::size_t NCPoly::max_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

Rational NCPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

Rational NCPoly::constant_term() const { return coefficient(Monomial()); }

bool NCPoly::only_kinds(std::initializer_list<Kind> kinds) const {
  for (const auto& [m, c] : terms_)
    for (auto code : m.codes())
      if (std::find(kinds.begin(), kinds.end(), GeneratorSymbol::kind_of(code)) == kinds.end()) return false;
  return true;
}

void NCPoly::merge_tag(std::uint64_t other) {
  if (other == 0 || other == tag_) return;
  if (tag_ == 0) {
    tag_ = other;
    return;
  }
  throw UsageError("polynomials built over different relation specs");
}

void NCPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  merge_tag(o.tag_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  merge_tag(o.tag_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& [m, v] : p.terms_) v = -v;
  return p;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.empty()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

NCPoly generator(const RelationSpec& spec, GeneratorSymbol g) {
  const auto canon = spec.canonicalize(g);
  NCPoly p;
  if (canon.sign == 0) return p;
  return NCPoly::from_monomial(Monomial::of({canon.symbol}), canon.sign, spec.tag());
}

namespace {

NCPoly central_to_poly(const CentralSum& sum, const Rational& scale, std::uint64_t tag) {
  NCPoly out = NCPoly::from_monomial(Monomial(), 0, tag);
  for (const auto& t : sum) {
    Monomial m = t.symbol ? Monomial::of({*t.symbol}) : Monomial();
    out.add_term(m, t.coeff * scale);
  }
  return out;
}

// Normal-orders Xa Ca Ya * Xb Cb Yb. Commutators are central, so Ya Xb expands as the sum over
// partial matchings between Ya and Xb, each contracted pair contributing [y, x] = -[x, y].
class MonomialProduct {
 public:
  MonomialProduct(const RelationSpec& spec, const Monomial& a, const Monomial& b, NCPoly::TermMap& acc)
      : spec_(spec), acc_(acc) {
    split(a.codes(), xa_, ca_, ya_);
    split(b.codes(), xb_, cb_, yb_);
  }

  void run(const Rational& coeff) {
    if (ya_.empty() || xb_.empty()) {
      emit(coeff);
      return;
    }
    if (ya_.size() > 63) throw ResourceExceeded("monomial Y-degree above 63");
    expand(0, coeff);
  }

 private:
  using Span = std::span<const std::uint32_t>;

  static void split(const Monomial::Codes& codes, Span& x, Span& c, Span& y) {
    const auto* begin = codes.data();
    const auto* end = codes.data() + codes.size();
    const auto* c_begin = std::find_if(begin, end, [](std::uint32_t v) { return GeneratorSymbol::kind_of(v) != Kind::X; });
    const auto* y_begin = std::find_if(c_begin, end, [](std::uint32_t v) { return GeneratorSymbol::kind_of(v) == Kind::Y; });
    x = Span(begin, c_begin);
    c = Span(c_begin, y_begin);
    y = Span(y_begin, end);
  }

  void expand(std::size_t idx, const Rational& coeff) {
    if (idx == xb_.size()) {
      emit(coeff);
      return;
    }
    const std::uint32_t x = xb_[idx];
    passed_.push_back(x);
    expand(idx + 1, coeff);
    passed_.pop_back();
    const GeneratorSymbol xs = GeneratorSymbol::from_code(x);
    for (std::size_t t = 0; t < ya_.size(); ++t) {
      const std::uint64_t bit = std::uint64_t{1} << t;
      if (used_ & bit) continue;
      const CentralSum& comm = spec_.commutator(xs, GeneratorSymbol::from_code(ya_[t]));
      if (comm.empty()) continue;
      used_ |= bit;
      for (const auto& term : comm) {
        Rational next = coeff * term.coeff;
        next = -next;
        if (term.symbol) extra_.push_back(term.symbol->code());
        expand(idx + 1, next);
        if (term.symbol) extra_.pop_back();
      }
      used_ &= ~bit;
    }
  }

  void emit(const Rational& coeff) {
    Monomial::Codes codes;
    codes.reserve(xa_.size() + passed_.size() + ca_.size() + cb_.size() + extra_.size() + ya_.size() + yb_.size());
    codes.insert(codes.end(), xa_.begin(), xa_.end());
    if (ya_.empty() || xb_.empty()) {
      codes.insert(codes.end(), xb_.begin(), xb_.end());
    } else {
      codes.insert(codes.end(), passed_.begin(), passed_.end());
    }
    codes.insert(codes.end(), ca_.begin(), ca_.end());
    codes.insert(codes.end(), cb_.begin(), cb_.end());
    codes.insert(codes.end(), extra_.begin(), extra_.end());
    for (std::size_t t = 0; t < ya_.size(); ++t)
      if (!(used_ & (std::uint64_t{1} << t))) codes.push_back(ya_[t]);
    codes.insert(codes.end(), yb_.begin(), yb_.end());
    Monomial m(std::move(codes));
    auto [it, inserted] = acc_.try_emplace(std::move(m), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) acc_.erase(it);
    }
  }

  const RelationSpec& spec_;
  NCPoly::TermMap& acc_;
  Span xa_, ca_, ya_, xb_, cb_, yb_;
  Monomial::Codes passed_;
  Monomial::Codes extra_;
  std::uint64_t used_ = 0;
};

void check_tag(const NCPoly& p, const RelationSpec& spec) {
  if (p.tag() != 0 && p.tag() != spec.tag()) {
    throw UsageError("polynomial was built over a different relation spec than " + spec.describe());
  }
}

}  // namespace

NCPoly commutator_of(const RelationSpec& spec, GeneratorSymbol x, GeneratorSymbol y) {
  const auto cx = spec.canonicalize(x);
  const auto cy = spec.canonicalize(y);
  if (cx.symbol.kind != Kind::X || cy.symbol.kind != Kind::Y) {
    throw UsageError("commutator_of expects an X symbol and a Y symbol");
  }
  const int sign = cx.sign * cy.sign;
  if (sign == 0) return NCPoly::from_monomial(Monomial(), 0, spec.tag());
  return central_to_poly(spec.commutator(cx.symbol, cy.symbol), sign, spec.tag());
}

NCPoly multiply(const NCPoly& p, const NCPoly& q, const RelationSpec& spec) {
  check_tag(p, spec);
  check_tag(q, spec);
  NCPoly out;
  out.tag_ = spec.tag();
  if (p.is_zero() || q.is_zero()) return out;
  if (p.is_constant()) {
    out.terms_ = q.terms_;
    return out *= p.terms_.begin()->second;
  }
  if (q.is_constant()) {
    out.terms_ = p.terms_;
    return out *= q.terms_.begin()->second;
  }
  for (const auto& [ma, ca] : p.terms_)
    for (const auto& [mb, cb] : q.terms_) {
      MonomialProduct prod(spec, ma, mb, out.terms_);
      prod.run(ca * cb);
    }
  return out;
}

void multiply_add(NCPoly& acc, const NCPoly& p, const NCPoly& q, const RelationSpec& spec, const Rational& scale) {
  check_tag(p, spec);
  check_tag(q, spec);
  acc.merge_tag(spec.tag());
  if (p.is_zero() || q.is_zero() || scale.is_zero()) return;
  for (const auto& [ma, ca] : p.terms_)
    for (const auto& [mb, cb] : q.terms_) {
      if (ma.empty() || mb.empty()) {
        acc.add_term(ma.empty() ? mb : ma, ca * cb * scale);
        continue;
      }
      MonomialProduct prod(spec, ma, mb, acc.terms_);
      prod.run(ca * cb * scale);
    }
}

NCPoly normalize(std::span<const GeneratorSymbol> word, const Rational& coeff, const RelationSpec& spec) {
  NCPoly acc = NCPoly::from_monomial(Monomial(), coeff, spec.tag());
  for (const auto& g : word) {
    if (acc.is_zero()) break;
    acc = multiply(acc, generator(spec, g), spec);
  }
  return acc;
}

}  // namespace capelli
