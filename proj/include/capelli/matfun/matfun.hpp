#pragma once

#include <vector>

#include "capelli/matfun/poly_matrix.hpp"
#include "capelli/symgroup/young.hpp"

namespace capelli {

// sum_σ sgn(σ) M_{σ(1)1} M_{σ(2)2} ⋯ M_{σ(n)n}, products left to right by column.
NCPoly column_det(const PolyMatrix& m, const RelationSpec& spec);
// sum_σ M_{σ(1)1} ⋯ M_{σ(r)r}.
NCPoly permanent_rowperm(const PolyMatrix& m, const RelationSpec& spec);
// sum_σ χ^λ(σ) M_{σ(1)1} ⋯ M_{σ(r)r}.
NCPoly immanant(const Partition& shape, const PolyMatrix& m, const RelationSpec& spec);

// d^φ(M) = sum_σ φ(σ) M_{σ(1)1} ⋯ M_{σ(r)r} with φ(σ) on the left; dim×dim result.
PolyMatrix schur_matrix_function(const SeminormalRep& rep, const PolyMatrix& m, const RelationSpec& spec);
PolyMatrix schur_matrix_function(const SeminormalRep& rep, const BlockMatrix& m, const RelationSpec& spec);

// Pfaffian by the 2-shuffle sum. Throws UsageError for odd size, a non-antisymmetric input, or
// entries involving an X and a Y generator that do not commute in the spec.
NCPoly pfaffian(const PolyMatrix& m, const RelationSpec& spec);
// (1 / 2^m m!) sum over all of S_{2m}; the textbook definition.
NCPoly pfaffian_full_sum(const PolyMatrix& m, const RelationSpec& spec);
// Expansion along the first row: sum_j (-1)^{j} m_{1j} Pf(minor without 1, j).
NCPoly pfaffian_recursive(const PolyMatrix& m, const RelationSpec& spec);

enum class IndexFlavor { Strict, NonDecreasing, Arbitrary };

// All multi-indices of the given length over [ambient], lexicographic.
std::vector<std::vector<int>> multi_indices(int ambient, int length, IndexFlavor flavor);

// v(α_J) = product of factorials of the multiplicities in J; throws unless J is non-decreasing.
Rational v_multiplicity(const std::vector<int>& j);

}  // namespace capelli
