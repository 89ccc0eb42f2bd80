#include "artin/homology.hpp"

namespace artin {

TensorComplex::TensorComplex(const ModuleRep& M, const Resolution& resN) : M_(M), betti_(resN.betti) {
    const auto& R = M.algebra();
    const std::size_t n = R.length(), d = M.dim();
    std::vector<FpMatrix> mono;
    for (std::size_t b = 0; b < n; ++b) mono.push_back(M.monomial_action(b));
    const auto& f = M.field();
    for (int k = 1; k <= resN.depth(); ++k) {
        const auto& delta = resN.differential(k);
        const std::size_t rows = betti_[k - 1], cols = betti_[k];
        FpMatrix big(d * rows, d * cols, f);
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t b = 0; b < n; ++b) {
                    const fp_t coeff = delta(r * n + b, c);
                    if (coeff == 0) continue;
                    const auto& A = mono[b];
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t j = 0; j < d; ++j)
                            if (A(i, j) != 0) {
                                fp_t& dst = big(r * d + i, c * d + j);
                                dst = f.add(dst, f.mul(coeff, A(i, j)));
                            }
                }
        ranks_.push_back(artin::rank(big));
        maps_.push_back(std::move(big));
    }
}

std::size_t TensorComplex::tor_length(int i) const {
    if (i < 0 || i >= depth()) throw Error("Tor index " + std::to_string(i) + " beyond computed depth");
    const std::size_t chains = M_.dim() * betti_[static_cast<std::size_t>(i)];
    const std::size_t out_rank = i == 0 ? 0 : rank(i);
    return chains - out_rank - rank(i + 1);
}

ModuleRep TensorComplex::power(std::size_t copies) const {
    std::vector<FpMatrix> acts;
    for (const auto& a : M_.actions()) acts.push_back(block_diagonal(a, copies));
    return ModuleRep(M_.ring(), std::move(acts));
}

ModuleRep TensorComplex::tensor_syzygy(int i) const {
    if (i < 0 || i >= depth()) throw Error("tensor with syzygy " + std::to_string(i) + " beyond computed depth");
    ModuleRep chains = power(betti_[static_cast<std::size_t>(i)]);
    if (chains.dim() == 0) return ModuleRep::zero(M_.ring());
    return quotient(chains, {Subspace::span_cols(map(i + 1))});
}

ModuleRep TensorComplex::tor(int i) const {
    if (i == 0) return tensor_syzygy(0);
    if (i < 0 || i >= depth()) throw Error("Tor index " + std::to_string(i) + " beyond computed depth");
    ModuleRep chains = power(betti_[static_cast<std::size_t>(i)]);
    if (chains.dim() == 0) return ModuleRep::zero(M_.ring());
    Submodule cycles{Subspace::span_rows(kernel_rows(map(i)))};
    ModuleRep Z = restrict_to(chains, cycles);
    const Subspace boundaries = Subspace::span_cols(map(i + 1));
    Subspace local(cycles.dim(), M_.field());
    for (std::size_t r = 0; r < boundaries.dim(); ++r)
        local.insert(cycles.space.coordinates(boundaries.basis().row(r)));
    return quotient(Z, {local});
}

ModuleRep tor(const ModuleRep& M, const ModuleRep& N, int i) {
    if (i < 0) throw Error("Tor index must be nonnegative");
    return TensorComplex(M, minimal_resolution(N, i + 1)).tor(i);
}

std::size_t tor_length(const ModuleRep& M, const ModuleRep& N, int i) {
    if (i < 0) throw Error("Tor index must be nonnegative");
    return TensorComplex(M, minimal_resolution(N, i + 1)).tor_length(i);
}

std::vector<bool> tor_vanishing_window(const ModuleRep& M, const ModuleRep& N, int lo, int hi) {
    if (lo < 1 || hi < lo) throw Error("Tor window must satisfy 1 <= lo <= hi");
    TensorComplex cx(M, minimal_resolution(N, hi + 1));
    std::vector<bool> out;
    for (int i = lo; i <= hi; ++i) out.push_back(cx.tor_length(i) == 0);
    return out;
}

}  // namespace artin
