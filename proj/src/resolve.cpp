#include "artin/resolve.hpp"

#include <algorithm>

namespace artin {

namespace {

// Lifts a basis of K/mK for a submodule K of the free module F.
FpMatrix choose_generators(const ModuleRep& F, const Subspace& K) {
    Subspace span = maximal_times(F, Submodule{K}).space;
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < K.dim(); ++r)
        if (span.insert(K.basis().row(r))) chosen.push_back(r);
    FpMatrix gens(K.ambient(), chosen.size(), K.field());
    for (std::size_t j = 0; j < chosen.size(); ++j) {
        auto row = K.basis().row(chosen[j]);
        for (std::size_t i = 0; i < row.size(); ++i) gens(i, j) = row[i];
    }
    return gens;
}

// Matrix of F_k → target, column (j, b) = x^b · gen_j.
FpMatrix cover_map(const ModuleRep& target, const FpMatrix& gens) {
    const std::size_t n = target.algebra().length();
    FpMatrix phi(target.dim(), gens.cols() * n, target.field());
    for (std::size_t j = 0; j < gens.cols(); ++j) {
        const auto g = gens.col(j);
        for (std::size_t b = 0; b < n; ++b) {
            const auto w = target.apply_monomial(b, g);
            for (std::size_t i = 0; i < w.size(); ++i) phi(i, j * n + b) = w[i];
        }
    }
    return phi;
}

}  // namespace

Element Resolution::entry(const MonomialAlgebra& R, int k, std::size_t row, std::size_t col) const {
    const auto& d = differential(k);
    const std::size_t n = R.length();
    Element e(n);
    for (std::size_t b = 0; b < n; ++b) e[b] = d(row * n + b, col);
    return e;
}

Resolution minimal_resolution(const ModuleRep& M, int max_i) {
    if (max_i < 0) throw Error("resolution depth must be nonnegative");
    const auto& R = M.algebra();
    Resolution res;
    res.generators = minimal_generators(M);
    res.betti.push_back(res.generators.cols());
    if (max_i == 0) return res;

    FpMatrix phi = cover_map(M, res.generators);
    Subspace K = Subspace::span_rows(kernel_rows(phi));
    for (int k = 1; k <= max_i; ++k) {
        ModuleRep F = ModuleRep::free(M.ring(), res.betti.back());
        res.syzygies.push_back({K, restrict_to(F, Submodule{K})});
        FpMatrix gens = choose_generators(F, K);
        res.betti.push_back(gens.cols());
        if (k < max_i) {
            phi = cover_map(F, gens);
            Subspace nextK = Subspace::span_rows(kernel_rows(phi));
            // rank–nullity down the resolution: λ(M_{k+1}) = b_k λ(R) − λ(M_k)
            if (nextK.dim() + K.dim() != gens.cols() * R.length())
                throw Error("internal: syzygy generators do not generate the kernel");
            K = std::move(nextK);
        }
        res.differentials.push_back(std::move(gens));
    }
    return res;
}

ModuleRep syzygy(const ModuleRep& M, int i) {
    if (i < 1) throw Error("syzygy index must be at least 1");
    return minimal_resolution(M, i).syzygies.back().module;
}

std::vector<std::size_t> betti_vector(const ModuleRep& M, int max_i) {
    return minimal_resolution(M, max_i).betti;
}

bool is_minimal(const Resolution& res, const MonomialAlgebra& R) {
    const std::size_t n = R.length();
    for (const auto& d : res.differentials)
        for (std::size_t c = 0; c < d.cols(); ++c)
            for (std::size_t r = 0; r < d.rows(); r += n)
                if (d(r, c) != 0) return false;
    return true;
}

std::vector<fp_t> apply_ring_map(const MonomialAlgebra& R, const FpMatrix& columns,
                                 std::span<const fp_t> x) {
    const std::size_t n = R.length();
    if (x.size() != columns.cols() * n) throw Error("apply_ring_map: argument has wrong length");
    std::vector<fp_t> out(columns.rows(), 0);
    for (std::size_t c = 0; c < columns.cols(); ++c) {
        const auto col = columns.col(c);
        for (std::size_t b = 0; b < n; ++b) {
            const fp_t coeff = x[c * n + b];
            if (coeff != 0) R.multiply_blocks(col, b, coeff, out);
        }
    }
    return out;
}

bool composes_to_zero(const Resolution& res, const ModuleRep& M) {
    const auto& R = M.algebra();
    if (res.differentials.empty()) return true;
    // augmentation ∘ δ_1
    const FpMatrix phi = cover_map(M, res.generators);
    const auto& d1 = res.differentials.front();
    for (std::size_t c = 0; c < d1.cols(); ++c) {
        const auto img = mat_vec(phi, d1.col(c));
        if (std::any_of(img.begin(), img.end(), [](fp_t v) { return v != 0; })) return false;
    }
    for (std::size_t k = 1; k < res.differentials.size(); ++k) {
        const auto& lower = res.differentials[k - 1];
        const auto& upper = res.differentials[k];
        for (std::size_t c = 0; c < upper.cols(); ++c) {
            const auto img = apply_ring_map(R, lower, upper.col(c));
            if (std::any_of(img.begin(), img.end(), [](fp_t v) { return v != 0; })) return false;
        }
    }
    return true;
}

}  // namespace artin
