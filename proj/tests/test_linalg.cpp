#include <random>
#include <set>

#include "artin/linalg.hpp"
#include "doctest.h"

using namespace artin;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, PrimeField f, int zero_bias) {
    FpMatrix m(r, c, f);
    for (auto& v : m.data())
        v = static_cast<fp_t>(rng() % 4 < static_cast<unsigned>(zero_bias) ? 0 : rng() % f.prime());
    return m;
}

// |column space| by enumerating every combination of columns; rank = log_p of it.
std::size_t brute_force_rank(const FpMatrix& m) {
    const std::uint32_t p = m.field().prime();
    std::set<std::vector<fp_t>> seen;
    std::vector<fp_t> coeff(m.cols(), 0);
    while (true) {
        std::vector<fp_t> v(m.rows(), 0);
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.field().add(v[r], m.field().mul(coeff[c], m(r, c)));
        seen.insert(v);
        std::size_t k = 0;
        while (k < coeff.size() && ++coeff[k] == p) coeff[k++] = 0;
        if (k == coeff.size()) break;
    }
    std::size_t rank = 0, size = 1;
    while (size < seen.size()) size *= p, ++rank;
    return rank;
}

}  // namespace

TEST_CASE("rref on the documented examples") {
    const PrimeField f(101);
    auto id = rref(FpMatrix::identity(2, f));
    CHECK(id.matrix == FpMatrix::identity(2, f));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto z = rref(FpMatrix(3, 3, f));
    CHECK(z.matrix.is_zero());
    CHECK(z.pivots.empty());

    auto r = rref(FpMatrix::from_rows(f, {{2, 4}, {1, 2}}));
    CHECK(r.matrix == FpMatrix::from_rows(f, {{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel, image and solve on the documented examples") {
    const PrimeField f(101);
    CHECK(kernel_basis(FpMatrix::identity(3, f)).cols() == 0);
    CHECK(kernel_basis(FpMatrix(3, 3, f)) == FpMatrix::identity(3, f));

    const auto k = kernel_basis(FpMatrix::from_rows(f, {{1, 2}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == f.reduce(-2));
    CHECK(k(1, 0) == 1);

    CHECK(image_basis(FpMatrix::identity(2, f)) == FpMatrix::identity(2, f));
    CHECK(image_basis(FpMatrix(2, 2, f)).cols() == 0);
    const auto img = image_basis(FpMatrix::from_rows(f, {{2, 4}, {1, 2}}));
    REQUIRE(img.cols() == 1);
    CHECK(img(0, 0) == 2);
    CHECK(img(1, 0) == 1);

    const std::vector<fp_t> b = {7, 9};
    CHECK(solve(FpMatrix::identity(2, f), b).value() == b);
    CHECK_FALSE(solve(FpMatrix(2, 2, f), b).has_value());
    const std::vector<fp_t> three = {3};
    CHECK(solve(FpMatrix::from_rows(f, {{1, 1}}), three).value() == std::vector<fp_t>{3, 0});
    CHECK_THROWS_AS(solve(FpMatrix::identity(2, f), three), Error);
}

TEST_CASE("rank agrees with brute-force enumeration over small fields") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {2u, 3u}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
            const auto m = random_matrix(rng, r, c, f, static_cast<int>(rng() % 3));
            CHECK(rank(m) == brute_force_rank(m));
        }
    }
}

TEST_CASE("linear algebra invariants on random matrices") {
    std::mt19937_64 rng(2024);
    for (std::uint32_t p : {2u, 3u, 101u, 2147483647u}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 80; ++trial) {
            const std::size_t r = rng() % 9, c = rng() % 9;
            const auto m = random_matrix(rng, r, c, f, static_cast<int>(rng() % 4));
            const auto red = rref(m);
            // rank + nullity = cols
            const auto ker = kernel_basis(m);
            CHECK(red.rank() + ker.cols() == c);
            CHECK((m * ker).is_zero());
            // idempotent and consistent with the reference kernel
            CHECK(rref(red.matrix).matrix == red.matrix);
            CHECK(rref_reference(m).matrix == red.matrix);
            CHECK(std::is_sorted(red.pivots.begin(), red.pivots.end()));
            CHECK(image_basis(m).cols() == red.rank());
            // solve on a consistent right-hand side
            if (c > 0 && r > 0) {
                std::vector<fp_t> x(c);
                for (auto& v : x) v = static_cast<fp_t>(rng() % p);
                const auto b = mat_vec(m, x);
                const auto sol = solve(m, b);
                REQUIRE(sol.has_value());
                CHECK(mat_vec(m, *sol) == b);
            }
        }
    }
}

TEST_CASE("parallel and reference elimination are bit-identical") {
    std::mt19937_64 rng(99);
    const PrimeField f(101);
    const auto saved = parallel_threshold();
    set_parallel_threshold(0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_matrix(rng, 40 + rng() % 40, 40 + rng() % 40, f, 2);
        const auto a = rref(m), b = rref_reference(m);
        CHECK(a.matrix == b.matrix);
        CHECK(a.pivots == b.pivots);
    }
    set_parallel_threshold(saved);
}

TEST_CASE("subspace operations") {
    const PrimeField f(7);
    const auto U = Subspace::span_rows(FpMatrix::from_rows(f, {{1, 0, 0, 1}, {0, 1, 0, 0}}));
    const auto W = Subspace::span_rows(FpMatrix::from_rows(f, {{1, 1, 0, 1}, {0, 0, 1, 0}}));
    CHECK(U.dim() == 2);
    CHECK((U + W).dim() == 3);
    const auto X = U.intersect(W);
    CHECK(X.dim() == 1);
    CHECK(X.contains(std::vector<fp_t>{1, 1, 0, 1}));
    CHECK(X.is_subspace_of(U));
    CHECK(X.is_subspace_of(W));
    CHECK(U.complement_coordinates() == std::vector<std::size_t>{2, 3});

    Subspace grow(4, f);
    CHECK(grow.insert(std::vector<fp_t>{0, 1, 0, 0}));
    CHECK(grow.insert(std::vector<fp_t>{1, 0, 0, 1}));
    CHECK_FALSE(grow.insert(std::vector<fp_t>{1, 3, 0, 1}));
    CHECK(grow == U);
}

TEST_CASE("prime field validation") {
    CHECK_THROWS_AS(PrimeField(1), Error);
    CHECK_THROWS_AS(PrimeField(100), Error);
    const PrimeField f(101);
    CHECK(f.mul(f.inv(37), 37) == 1);
    CHECK(f.reduce(-1) == 100);
}
