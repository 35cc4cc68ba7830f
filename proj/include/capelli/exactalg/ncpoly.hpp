#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "capelli/exactalg/generator.hpp"
#include "capelli/exactalg/rational.hpp"
#include "capelli/exactalg/relation_spec.hpp"

namespace capelli {

// A normal-ordered monomial: packed generator codes sorted ascending, which places the X block
// first, then H entries and powers of h, then the Y block.
class Monomial {
 public:
  using Codes = boost::container::small_vector<std::uint32_t, 10>;

  Monomial() = default;
  // Sorts the codes into normal order.
  explicit Monomial(Codes codes);
  static Monomial of(std::initializer_list<GeneratorSymbol> symbols);

  const Codes& codes() const { return codes_; }
  std::size_t degree() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  std::vector<GeneratorSymbol> symbols() const;
  std::size_t count(GeneratorSymbol g) const;

  // "X[1,1]^2*H[1,1]*Y[1,2]"; the empty monomial prints as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Codes codes_;
};

// Graded order: higher total degree first, then lexicographic on codes.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.codes() < b.codes();
  }
};

// Exact rational linear combination of normal-ordered monomials. No zero coefficients are stored,
// so equality of term maps is equality in the algebra.
class NCPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  NCPoly() = default;
  NCPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  NCPoly(long constant) : NCPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  static NCPoly from_monomial(const Monomial& m, const Rational& c, std::uint64_t tag);

  bool is_zero() const { return terms_.empty(); }
  // Zero or a pure scalar.
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::uint64_t tag() const { return tag_; }
  std::size_t max_degree() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  // True when every generator in every monomial has one of the given kinds.
  bool only_kinds(std::initializer_list<Kind> kinds) const;

  void add_term(const Monomial& m, const Rational& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
  NCPoly operator-() const;

  // Canonical text, e.g. "X[1,1]*Y[1,1] + H[1,1]"; zero prints as "0".
  std::string to_string() const;

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

 private:
  friend NCPoly multiply(const NCPoly&, const NCPoly&, const RelationSpec&);
  friend void multiply_add(NCPoly&, const NCPoly&, const NCPoly&, const RelationSpec&, const Rational&);
  void merge_tag(std::uint64_t other);

  TermMap terms_;
  std::uint64_t tag_ = 0;
};

// The generator as a polynomial over the spec (canonical representative with sign; zero for
// antisymmetric diagonals).
NCPoly generator(const RelationSpec& spec, GeneratorSymbol g);

// [x, y] under the family template with the hmode applied.
NCPoly commutator_of(const RelationSpec& spec, GeneratorSymbol x, GeneratorSymbol y);

// Unique normal form of coeff * word.
NCPoly normalize(std::span<const GeneratorSymbol> word, const Rational& coeff, const RelationSpec& spec);

// Bilinear extension of concatenate-then-normalize. Throws UsageError when an operand was built
// over a different spec.
NCPoly multiply(const NCPoly& p, const NCPoly& q, const RelationSpec& spec);

// acc += scale * p * q, accumulating in place.
void multiply_add(NCPoly& acc, const NCPoly& p, const NCPoly& q, const RelationSpec& spec, const Rational& scale = 1);

}  // namespace capelli
