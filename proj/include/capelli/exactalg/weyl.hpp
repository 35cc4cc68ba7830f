#pragma once

#include <span>
#include <utility>
#include <vector>

#include "capelli/exactalg/ncpoly.hpp"

namespace capelli {

// A commutative polynomial in the x variables, stored as an NCPoly with X generators only.
using CommPoly = NCPoly;

// An unnormalized word with a coefficient; sums of these are the input of the action oracle.
struct Word {
  Rational coeff;
  std::vector<GeneratorSymbol> symbols;
};
using WordSum = std::vector<Word>;

// Applies p to f with x_{ij} acting by multiplication and d_{ij} = Y_{ji} by ∂/∂x_{ij}; the rightmost
// factor acts first. Throws UsageError unless the spec is the Weyl model.
CommPoly apply_weyl(const NCPoly& p, const CommPoly& f, const RelationSpec& spec);

// Same action, applied symbol by symbol to words that were never normal-ordered.
CommPoly apply_weyl(const WordSum& words, const CommPoly& f, const RelationSpec& spec);

// All monomials in the x_{ij} of total degree <= max_degree, each with coefficient 1.
std::vector<CommPoly> weyl_polynomial_basis(const RelationSpec& spec, int max_degree);

}  // namespace capelli
