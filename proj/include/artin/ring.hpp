#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/linalg.hpp"

namespace artin {

using Exponent = std::vector<int>;

/// A ring element as its coefficient vector on the standard-monomial basis.
using Element = std::vector<fp_t>;

/// One term c·x^e of a polynomial given in input form.
struct Term {
    std::int64_t coeff = 1;
    Exponent exponent;
};
using Polynomial = std::vector<Term>;

/// R = k[x_1..x_n]/J for a monomial ideal J of finite colength.
///
/// The basis is the set of standard monomials (those not divisible by a
/// staircase generator) in graded order, ties broken by descending lex, so
/// index 0 is always the unit. Multiplication of basis monomials is a table
/// lookup; products that fall into J are recorded as -1.
class MonomialAlgebra {
  public:
    /// Throws Error("not Artinian") if some variable has no pure-power bound.
    static std::shared_ptr<const MonomialAlgebra> build(int nvars, std::vector<Exponent> staircase,
                                                        PrimeField field = PrimeField(101));

    int nvars() const { return nvars_; }
    const PrimeField& field() const { return field_; }
    /// Minimal generators of J, sorted.
    const std::vector<Exponent>& staircase() const { return staircase_; }
    const std::vector<Exponent>& basis() const { return basis_; }
    std::size_t length() const { return basis_.size(); }

    std::optional<std::size_t> index_of(const Exponent& e) const;
    /// Index of basis_i * basis_j, or -1 when the product lies in J.
    int product(std::size_t i, std::size_t j) const { return table_[i * length() + j]; }
    /// Index of x_v * basis_i, or -1.
    int times_variable(int v, std::size_t i) const { return var_table_[v * length() + i]; }
    int degree(std::size_t i) const;

    /// Matrix of multiplication by x_v on R (acting on column vectors).
    const FpMatrix& variable_action(int v) const { return var_actions_[v]; }
    FpMatrix element_action(const Element& a) const;

    Element zero() const { return Element(length(), 0); }
    Element unit() const { return monomial(0); }
    Element monomial(std::size_t index) const;
    Element from_polynomial(const Polynomial& poly) const;
    Element multiply(const Element& a, const Element& b) const;

    /// Multiplies each length-λ block of `in` by monomial `index`, adding into `out`.
    void multiply_blocks(std::span<const fp_t> in, std::size_t index, fp_t coeff,
                         std::span<fp_t> out) const;

    std::string monomial_name(std::size_t index, const std::vector<std::string>& vars = {}) const;
    std::string element_name(const Element& a, const std::vector<std::string>& vars = {}) const;

  private:
    MonomialAlgebra() = default;

    int nvars_ = 0;
    PrimeField field_;
    std::vector<Exponent> staircase_;
    std::vector<Exponent> basis_;
    std::vector<int> table_;
    std::vector<int> var_table_;
    std::vector<FpMatrix> var_actions_;
};

using RingPtr = std::shared_ptr<const MonomialAlgebra>;

/// Sorts generators and drops any that are divisible by another.
std::vector<Exponent> minimize_staircase(std::vector<Exponent> gens);
bool divides(const Exponent& a, const Exponent& b);

/// An ideal of R: its k-span and a minimal generating set.
struct IdealRep {
    std::vector<Element> gens;
    Subspace span;
    /// Lifts of a basis of I/mI, taken from the RREF basis of I in order.
    std::vector<Element> mingens;
    /// Canonical textual form of the span, usable as a cache key.
    std::string key;

    std::size_t length() const { return span.dim(); }
    bool is_zero() const { return span.dim() == 0; }
};

struct RingInvariants {
    int lenR = 0;
    int s = 0;       // λ(R/I)
    int h = 0;       // b_0(I)
    int c = 0;       // λ(mI)
    int e = 0;       // b_0(m)
    int t = 0;       // Loewy length
    int len_m2 = 0;  // λ(m²)
    int socdim = 0;  // dim Soc(R)
};

/// Image of a subspace of R under multiplication by every variable, summed.
Subspace maximal_times(const MonomialAlgebra& R, const Subspace& s);
Subspace maximal_ideal(const MonomialAlgebra& R);
/// m^j as a subspace (m^0 = R).
Subspace maximal_power(const MonomialAlgebra& R, int j);
int loewy_length(const MonomialAlgebra& R);

IdealRep ideal_span(const MonomialAlgebra& R, std::vector<Element> gens);
IdealRep ideal_from_subspace(const MonomialAlgebra& R, const Subspace& span);
IdealRep monomial_ideal(const MonomialAlgebra& R, const std::vector<std::size_t>& monomials);
IdealRep maximal_ideal_rep(const MonomialAlgebra& R);
/// Subspace spanned by products a·b, a ∈ A, b ∈ B.
Subspace ideal_product(const MonomialAlgebra& R, const IdealRep& a, const IdealRep& b);

Subspace socle_ring(const MonomialAlgebra& R);
bool is_gorenstein(const MonomialAlgebra& R);

/// Throws Error("improper ideal") when 1 ∈ I.
RingInvariants ring_invariants(const MonomialAlgebra& R, const IdealRep& I);
bool check_m2I_zero(const MonomialAlgebra& R, const IdealRep& I);

}  // namespace artin
