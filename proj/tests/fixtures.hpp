#pragma once

#include "artin/module.hpp"

namespace fixtures {

using namespace artin;

/// k[x,y]/(x², y³, xy²) with basis 1, x, y, xy, y².
inline RingPtr golden_ring(std::uint32_t p = 101) {
    return MonomialAlgebra::build(2, {{2, 0}, {0, 3}, {1, 2}}, PrimeField(p));
}

inline Element mono(const MonomialAlgebra& R, int a, int b) { return R.monomial(*R.index_of({a, b})); }

inline IdealRep golden_I(const MonomialAlgebra& R) { return ideal_span(R, {mono(R, 1, 0), mono(R, 0, 2)}); }

inline ModuleRep cyclic(const RingPtr& R, std::vector<Element> gens) {
    return cyclic_quotient(R, ideal_span(*R, std::move(gens)));
}

inline ModuleRep residue_field(const RingPtr& R) { return cyclic_quotient(R, maximal_ideal_rep(*R)); }

}  // namespace fixtures

#include <random>

namespace fixtures {

/// A random module given by 1–2 generators and up to 2 relation columns with entries in m.
inline ModuleRep random_module(const RingPtr& R, std::mt19937_64& rng) {
    const std::size_t g = 1 + rng() % 2, r = rng() % 3, n = R->length();
    std::vector<std::vector<Element>> cols;
    for (std::size_t c = 0; c < r; ++c) {
        std::vector<Element> col;
        for (std::size_t j = 0; j < g; ++j) {
            Element e(n, 0);
            for (std::size_t b = 1; b < n; ++b)
                if (rng() % 3 == 0) e[b] = static_cast<fp_t>(rng() % R->field().prime());
            col.push_back(std::move(e));
        }
        cols.push_back(std::move(col));
    }
    return from_presentation(R, g, cols);
}

inline std::vector<RingPtr> small_rings(std::uint32_t p = 101) {
    const PrimeField f(p);
    return {MonomialAlgebra::build(1, {{3}}, f),
            MonomialAlgebra::build(2, {{2, 0}, {0, 3}, {1, 2}}, f),
            MonomialAlgebra::build(2, {{2, 0}, {0, 2}}, f),
            MonomialAlgebra::build(2, {{3, 0}, {1, 1}, {0, 3}}, f),
            MonomialAlgebra::build(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}}, f)};
}

}  // namespace fixtures
