#pragma once

#include "capelli/matfun/poly_matrix.hpp"
#include "capelli/symgroup/permutation.hpp"
#include "capelli/tensorop/group_operator.hpp"

namespace capelli {

// P^σ moves the content of factor i to factor σ(i): P^σ e_k = e_{k'} with k'_{σ(i)} = k_i.
// With this convention P^σ P^τ = P^{στ}. The codomain is the domain with factors permuted.
TensorOperator perm_operator(const Permutation& sigma, const MixedSpace& space);
TensorOperator perm_operator(const Permutation& sigma, int local_dim, int r);

// sum_{i,j} E_ij ⊗ E_ij on factors a and b (1-based), identity elsewhere.
TensorOperator q_operator(int a, int b, const MixedSpace& space);

// M acting on factor `position`, identity elsewhere; the factor dimension becomes M.rows().
TensorOperator embed_matrix(const PolyMatrix& m, int position, const MixedSpace& space);

enum class SymmetrizerKind { Antisymmetric, Symmetric };

// (1/p!) sum over permutations of the listed factors, signed for the antisymmetrizer.
TensorOperator symmetrizer(SymmetrizerKind kind, const std::vector<int>& positions, const MixedSpace& space);
TensorOperator antisymmetrizer(int r, int local_dim);

// sum_σ σ ⊗ P^σ on (C^d)^{⊗r}.
GroupOperator epsilon_r(int r, int local_dim);

// The 2-shuffles of [2m] as permutations: σ(t) is the t-th entry of the shuffle order.
std::vector<Permutation> two_shuffle_permutations(int m);
// F_m = sum over 2-shuffles of sgn(σ) P^{σ^{-1}} on (C^n)^{⊗2m}.
TensorOperator f_operator(int m, int n);
// F_m acting on factors 1..2m of a larger space; F_0 is the identity.
TensorOperator f_operator(int m, const MixedSpace& space);
// τ_I ∈ S_n with τ^{-1}(k) = i_k for k ≤ |I| and the complement in increasing order.
Permutation pattern_permutation(const std::vector<int>& subset, int n);
// G_m = sum_{|I| = 2m} sgn(τ_I) P^{τ_I} on (C^n)^{⊗n}.
// G_0 is the identity.
TensorOperator g_operator(int m, int n);

// Entry lookup by multi-indices; throws BoundsError outside the spaces.
NCPoly coefficient(const TensorOperator& op, const MultiIndex& out, const MultiIndex& in);
NCPoly coefficient(const GroupOperator& op, const Permutation& sigma, const MultiIndex& out, const MultiIndex& in);

}  // namespace capelli
