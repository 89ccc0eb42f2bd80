#include "doctest.h"
#include "fixtures.hpp"

using namespace artin;
using namespace fixtures;

TEST_CASE("presentations of the golden modules") {
    const auto R = golden_ring();
    const auto M = cyclic(R, {mono(*R, 0, 2)});
    const auto N = cyclic(R, {mono(*R, 1, 0)});
    CHECK(length(M) == 4);
    CHECK(length(N) == 3);
    CHECK(min_gens(M) == 1);
    CHECK_NOTHROW(M.validate());

    const auto Mp = from_presentation(R, 1, {{mono(*R, 0, 2)}});
    CHECK(length(Mp) == 4);
    CHECK(length(from_presentation(R, 3, {})) == 15);
    CHECK(min_gens(ModuleRep::free(R, 2)) == 2);
    CHECK(length(ModuleRep::zero(R)) == 0);
    CHECK(min_gens(ModuleRep::zero(R)) == 0);
    CHECK(length(ring_as_module(R)) == 5);
}

TEST_CASE("ideal times module and gamma") {
    const auto R = golden_ring();
    const auto I = golden_I(*R);
    const auto m = maximal_ideal_rep(*R);
    const auto M = cyclic(R, {mono(*R, 0, 2)});
    CHECK(ideal_times(M, I).dim() == 2);
    CHECK(ideal_times(M, ideal_span(*R, {})).dim() == 0);
    CHECK(ideal_times(M, m).dim() == 3);
    CHECK(length(quotient(M, ideal_times(M, I))) == 2);
    CHECK(length(quotient(M, whole(M))) == 0);

    CHECK(gamma(M, I) == Rational(1));
    CHECK(gamma(M, m) == Rational(3));
    CHECK(gamma(cyclic_quotient(R, I), I) == Rational(0));
    CHECK(gamma(ring_as_module(R), I) == Rational(3, 2));
    CHECK(to_string(gamma(ring_as_module(R), I)) == "3/2");
    CHECK(to_string(gamma(M, m)) == "3/1");
    CHECK_THROWS_AS(gamma(ModuleRep::zero(R), I), Error);
}

TEST_CASE("I-freeness and freeness") {
    const auto R = golden_ring();
    const auto I = golden_I(*R);
    CHECK(is_I_free(cyclic(R, {mono(*R, 1, 0)}), I));
    CHECK(is_I_free(ring_as_module(R), I));
    CHECK_FALSE(is_I_free(residue_field(R), I));
    CHECK(is_free(ModuleRep::free(R, 3)));
    CHECK_FALSE(is_free(cyclic(R, {mono(*R, 0, 2)})));
    CHECK(is_free(ModuleRep::zero(R)));
    CHECK_THROWS_AS(is_I_free(ModuleRep::zero(R), I), Error);
}

TEST_CASE("socle of modules") {
    const auto R = golden_ring();
    const auto soc = socle_module(cyclic(R, {mono(*R, 0, 2)}));
    CHECK(soc.dim() == 1);
    CHECK(socle_module(ring_as_module(R)).space == socle_ring(*R));
    CHECK(socle_module(residue_field(R)).dim() == 1);
}

TEST_CASE("tensor products") {
    const auto R = golden_ring();
    const auto M = cyclic(R, {mono(*R, 0, 2)});
    const auto N = cyclic(R, {mono(*R, 1, 0)});
    CHECK(length(tensor(M, N)) == 2);
    CHECK(length(tensor(ring_as_module(R), N)) == 3);
    CHECK(length(tensor(M, ModuleRep::zero(R))) == 0);
    CHECK(length(tensor_naive(M, N)) == 2);
}

TEST_CASE("tensor agrees with the naive construction on random modules") {
    std::mt19937_64 rng(5);
    for (const auto& R : small_rings(3)) {
        for (int trial = 0; trial < 12; ++trial) {
            const auto A = random_module(R, rng), B = random_module(R, rng);
            const auto T = tensor(A, B), Tn = tensor_naive(A, B);
            CHECK(length(T) == length(Tn));
            CHECK(min_gens(T) == min_gens(Tn));
            CHECK(length(tensor(B, A)) == length(T));
            CHECK_NOTHROW(T.validate());
        }
    }
}

TEST_CASE("Matlis duality") {
    const auto R = golden_ring();
    const auto w = canonical_module(R);
    CHECK(length(w) == 5);
    CHECK(min_gens(w) == 2);
    CHECK_NOTHROW(w.validate());
    const auto T = MonomialAlgebra::build(1, {{3}});
    CHECK(min_gens(canonical_module(T)) == 1);
    CHECK(length(matlis_dual(residue_field(R))) == 1);

    std::mt19937_64 rng(11);
    for (const auto& S : small_rings()) {
        for (int trial = 0; trial < 8; ++trial) {
            const auto A = random_module(S, rng);
            const auto D = matlis_dual(A);
            CHECK(length(D) == length(A));
            CHECK(min_gens(D) == socle_module(A).dim());
            CHECK(matlis_dual(D).actions() == A.actions());
        }
    }
}

TEST_CASE("submodule helpers") {
    std::mt19937_64 rng(3);
    for (const auto& R : small_rings()) {
        const auto m = maximal_ideal_rep(*R);
        for (int trial = 0; trial < 6; ++trial) {
            const auto A = random_module(R, rng);
            const auto mA = maximal_times(A);
            CHECK(ideal_times(A, m) == mA);
            CHECK(is_submodule(A, mA.space));
            const auto S = restrict_to(A, mA);
            CHECK(length(S) == mA.dim());
            CHECK_NOTHROW(S.validate());
            CHECK(length(quotient(A, mA)) == min_gens(A));
            const auto sum = direct_sum(A, A);
            CHECK(min_gens(sum) == 2 * min_gens(A));
        }
        // restriction from a free module uses the fast path; compare with the generic one
        const auto F = ModuleRep::free(R, 2);
        const auto mF = maximal_times(F);
        const ModuleRep G(R, F.actions());
        CHECK(restrict_to(F, mF).actions() == restrict_to(G, mF).actions());
    }
}

TEST_CASE("validation rejects bad actions") {
    const auto R = MonomialAlgebra::build(1, {{2}});
    const PrimeField f(101);
    // x acting as the identity is not nilpotent and violates x² = 0
    CHECK_THROWS_AS(ModuleRep(R, {FpMatrix::identity(2, f)}).validate(), Error);
    const auto S = MonomialAlgebra::build(2, {{2, 0}, {0, 2}});
    const auto X = FpMatrix::from_rows(f, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
    const auto Y = FpMatrix::from_rows(f, {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
    CHECK_NOTHROW(ModuleRep(S, {X, Y}).validate());
    const auto Y2 = FpMatrix::from_rows(f, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}});
    CHECK_THROWS_AS(ModuleRep(S, {X, Y2}).validate(), Error);
}
