#pragma once

#include <optional>
#include <vector>

#include "artin/rational.hpp"
#include "artin/ring.hpp"

namespace artin {

/// A finite-length R-module as a k-vector space with one action matrix per
/// variable. Matrices act on column vectors: x_v · u = action(v) · u.
class ModuleRep {
  public:
    ModuleRep() = default;
    /// Takes the actions as given; call validate() for untrusted input.
    ModuleRep(RingPtr ring, std::vector<FpMatrix> actions);

    static ModuleRep zero(RingPtr ring);
    /// R^rank with coordinates (generator j, monomial b) at j·λ(R) + b.
    static ModuleRep free(RingPtr ring, std::size_t rank);

    const RingPtr& ring() const { return ring_; }
    const MonomialAlgebra& algebra() const { return *ring_; }
    const PrimeField& field() const { return ring_->field(); }
    std::size_t dim() const { return dim_; }
    const FpMatrix& action(int v) const { return actions_[v]; }
    const std::vector<FpMatrix>& actions() const { return actions_; }
    /// Rank when this module is R^rank in standard coordinates.
    std::optional<std::size_t> free_rank() const { return free_rank_; }

    /// x^b · u for basis monomial b.
    std::vector<fp_t> apply_monomial(std::size_t index, std::span<const fp_t> u) const;
    FpMatrix monomial_action(std::size_t index) const;
    FpMatrix element_action(const Element& a) const;

    /// Checks commutativity, the staircase relations and nilpotency.
    void validate() const;

  private:
    RingPtr ring_;
    std::size_t dim_ = 0;
    std::vector<FpMatrix> actions_;
    std::optional<std::size_t> free_rank_;
};

/// A subspace of a module that is closed under the action.
struct Submodule {
    Subspace space;
    std::size_t dim() const { return space.dim(); }
    bool operator==(const Submodule&) const = default;
};

/// Image of the subspace under each operator, summed.
Subspace image_sum(const ModuleRep& M, std::span<const FpMatrix> ops, const Subspace& s);
/// The submodule generated by a subspace.
Submodule closure(const ModuleRep& M, const Subspace& s);
bool is_submodule(const ModuleRep& M, const Subspace& s);

Submodule whole(const ModuleRep& M);
Submodule maximal_times(const ModuleRep& M);
Submodule maximal_times(const ModuleRep& M, const Submodule& s);
Submodule ideal_times(const ModuleRep& M, const IdealRep& I);
Submodule ideal_times(const ModuleRep& M, const IdealRep& I, const Submodule& s);
Submodule socle_module(const ModuleRep& M);

/// M/S with basis the images of the unit vectors on the non-pivot
/// coordinates of S. Throws if S is not action-closed.
ModuleRep quotient(const ModuleRep& M, const Submodule& s);
/// Coordinates of the class of v in quotient(M, s).
std::vector<fp_t> project(const Submodule& s, std::span<const fp_t> v);
/// S as a module in its RREF basis.
ModuleRep restrict_to(const ModuleRep& M, const Submodule& s);
/// Maps a subspace given in restrict_to(M, s) coordinates back into M.
Subspace to_ambient(const Submodule& s, const Subspace& local);

/// coker(R^r → R^g) where `columns` holds r columns of g ring elements each.
ModuleRep from_presentation(RingPtr ring, std::size_t gens,
                            const std::vector<std::vector<Element>>& columns);
ModuleRep cyclic_quotient(RingPtr ring, const IdealRep& J);
ModuleRep ring_as_module(RingPtr ring);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

std::size_t length(const ModuleRep& M);
/// b_0(M) = dim M/mM.
std::size_t min_gens(const ModuleRep& M);
/// Unit vectors of M on the non-pivot coordinates of mM, as columns.
FpMatrix minimal_generators(const ModuleRep& M);

/// λ(M)/λ(M/IM) − 1. Throws for the zero module.
Rational gamma(const ModuleRep& M, const IdealRep& I);
/// λ(M/IM) = b_0(M)·λ(R/I). Throws for the zero module.
bool is_I_free(const ModuleRep& M, const IdealRep& I);
/// λ(M) = b_0(M)·λ(R); the zero module counts as free.
bool is_free(const ModuleRep& M);
/// m·J·M = 0.
bool check_mJ_annihilates(const MonomialAlgebra& R, const IdealRep& J, const ModuleRep& M);

/// M ⊗_R N computed as M^{b_0(N)} modulo the image of a minimal presentation of N.
ModuleRep tensor(const ModuleRep& M, const ModuleRep& N);
/// M ⊗_k N modulo (x u)⊗w − u⊗(x w); the textbook construction.
ModuleRep tensor_naive(const ModuleRep& M, const ModuleRep& N);

/// k-linear dual with the contragredient action (transposed matrices).
ModuleRep matlis_dual(const ModuleRep& M);
ModuleRep canonical_module(RingPtr ring);

}  // namespace artin
