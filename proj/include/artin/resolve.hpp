#pragma once

#include <vector>

#include "artin/module.hpp"

namespace artin {

/// The i-th syzygy M_i together with its embedding in F_{i-1} = R^{b_{i-1}}.
struct Syzygy {
    Subspace embedding;
    ModuleRep module;
};

/// A minimal free resolution truncated at a fixed depth D:
///   F_D → … → F_1 → F_0 → M → 0,  F_k = R^{b_k}.
struct Resolution {
    std::vector<std::size_t> betti;  // b_0 … b_D
    /// Columns of M (as vectors) that map the basis of F_0 onto M.
    FpMatrix generators;
    /// differentials[k-1] is δ_k: F_k → F_{k-1}, stored as b_{k-1}·λ(R) rows by
    /// b_k columns; each column is the image of a basis vector of F_k,
    /// written as b_{k-1} consecutive ring elements.
    std::vector<FpMatrix> differentials;
    /// syzygies[k-1] is M_k = ker(F_{k-1} → M_{k-1}) for k = 1 … D.
    std::vector<Syzygy> syzygies;

    int depth() const { return static_cast<int>(betti.size()) - 1; }
    const FpMatrix& differential(int k) const { return differentials.at(static_cast<std::size_t>(k - 1)); }
    /// Ring element at position (row, col) of δ_k.
    Element entry(const MonomialAlgebra& R, int k, std::size_t row, std::size_t col) const;
};

/// Computes b_0 … b_max_i. Generators are chosen by the fixed pivot order, so
/// the result is a pure function of the input.
Resolution minimal_resolution(const ModuleRep& M, int max_i);

/// M_i as a module, i ≥ 1.
ModuleRep syzygy(const ModuleRep& M, int i);
std::vector<std::size_t> betti_vector(const ModuleRep& M, int max_i);

/// Every differential entry lies in m.
bool is_minimal(const Resolution& res, const MonomialAlgebra& R);
/// δ_{k-1} ∘ δ_k = 0 for all k, and the augmentation kills the image of δ_1.
bool composes_to_zero(const Resolution& res, const ModuleRep& M);

/// Applies the R-linear map whose columns are `columns` (as in Resolution) to x ∈ R^{cols}.
std::vector<fp_t> apply_ring_map(const MonomialAlgebra& R, const FpMatrix& columns,
                                 std::span<const fp_t> x);

}  // namespace artin
