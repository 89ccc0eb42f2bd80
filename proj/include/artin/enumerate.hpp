#pragma once

#include <string>
#include <vector>

#include "artin/module.hpp"

namespace artin {

/// A module together with the presentation it was built from.
struct PresentedModule {
    std::size_t gens = 0;
    /// Relation columns, each holding `gens` ring elements.
    std::vector<std::vector<Element>> relations;
    ModuleRep module;
};

enum class IdealMode { monomial, m2I_zero };

/// Every Artinian monomial quotient k[x_1..x_n]/J with n ≤ max_vars,
/// embedding dimension exactly n and λ ≤ max_len, one per variable
/// permutation class, ordered by (n, λ, staircase). The field counts as the
/// one-variable ring k[x]/(x).
std::vector<RingPtr> enumerate_rings(int max_vars, int max_len, PrimeField field = PrimeField(101));

/// Proper monomial ideals of R (the zero ideal included), ordered by
/// (λ(I), minimal monomial generators).
std::vector<IdealRep> enumerate_ideals(const RingPtr& R, IdealMode mode = IdealMode::monomial);

/// Cyclic modules R/J over proper monomial J, followed by modules with
/// 2 … max_gens generators and 1 … max_rels relation columns whose entries are
/// 0 or monomials in m. Duplicate presentations are skipped.
std::vector<PresentedModule> enumerate_modules(const RingPtr& R, int max_gens, int max_rels);

/// Monomial generators of a monomial ideal, read off its span.
std::vector<std::size_t> monomial_generators(const MonomialAlgebra& R, const IdealRep& I);

}  // namespace artin
