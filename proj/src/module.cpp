#include "artin/module.hpp"

#include <algorithm>

namespace artin {

ModuleRep::ModuleRep(RingPtr ring, std::vector<FpMatrix> actions)
    : ring_(std::move(ring)), actions_(std::move(actions)) {
    if (static_cast<int>(actions_.size()) != ring_->nvars())
        throw Error("module needs one action matrix per variable");
    dim_ = actions_.empty() ? 0 : actions_.front().rows();
    for (const auto& a : actions_)
        if (a.rows() != dim_ || a.cols() != dim_) throw Error("action matrices must be square of equal size");
}

ModuleRep ModuleRep::zero(RingPtr ring) {
    std::vector<FpMatrix> acts(static_cast<std::size_t>(ring->nvars()), FpMatrix(0, 0, ring->field()));
    return ModuleRep(std::move(ring), std::move(acts));
}

ModuleRep ModuleRep::free(RingPtr ring, std::size_t rank) {
    std::vector<FpMatrix> acts;
    for (int v = 0; v < ring->nvars(); ++v) acts.push_back(block_diagonal(ring->variable_action(v), rank));
    ModuleRep F(std::move(ring), std::move(acts));
    if (rank == 0) F.dim_ = 0;
    F.free_rank_ = rank;
    return F;
}

std::vector<fp_t> ModuleRep::apply_monomial(std::size_t index, std::span<const fp_t> u) const {
    if (free_rank_) {
        std::vector<fp_t> out(u.size(), 0);
        ring_->multiply_blocks(u, index, 1, out);
        return out;
    }
    std::vector<fp_t> w(u.begin(), u.end());
    const auto& e = ring_->basis()[index];
    for (int v = 0; v < ring_->nvars(); ++v)
        for (int k = 0; k < e[v]; ++k) w = mat_vec(actions_[v], w);
    return w;
}

FpMatrix ModuleRep::monomial_action(std::size_t index) const {
    FpMatrix out = FpMatrix::identity(dim_, field());
    const auto& e = ring_->basis()[index];
    for (int v = 0; v < ring_->nvars(); ++v)
        for (int k = 0; k < e[v]; ++k) out = actions_[v] * out;
    return out;
}

FpMatrix ModuleRep::element_action(const Element& a) const {
    FpMatrix out(dim_, dim_, field());
    for (std::size_t b = 0; b < a.size(); ++b)
        if (a[b] != 0) out = out + scale(monomial_action(b), a[b]);
    return out;
}

void ModuleRep::validate() const {
    const auto& R = *ring_;
    for (int v = 0; v < R.nvars(); ++v)
        for (int w = v + 1; w < R.nvars(); ++w)
            if (!(actions_[v] * actions_[w] == actions_[w] * actions_[v]))
                throw Error("non-commuting actions for variables " + std::to_string(v) + " and " +
                            std::to_string(w));
    for (const auto& g : R.staircase()) {
        FpMatrix m = FpMatrix::identity(dim_, field());
        for (int v = 0; v < R.nvars(); ++v)
            for (int k = 0; k < g[v]; ++k) m = actions_[v] * m;
        if (!m.is_zero()) throw Error("action does not satisfy the defining relations of R");
    }
    for (const auto& a : actions_) {
        FpMatrix p = a;
        for (std::size_t k = 1; k < std::max<std::size_t>(dim_, 1); ++k) p = p * a;
        if (dim_ > 0 && !p.is_zero()) throw Error("action matrix is not nilpotent");
    }
}

// ---------------------------------------------------------------------------

Subspace image_sum(const ModuleRep& M, std::span<const FpMatrix> ops, const Subspace& s) {
    Subspace out(M.dim(), M.field());
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (const auto& op : ops) out.insert(mat_vec(op, s.basis().row(r)));
    return out;
}

bool is_submodule(const ModuleRep& M, const Subspace& s) {
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (const auto& a : M.actions())
            if (!s.contains(mat_vec(a, s.basis().row(r)))) return false;
    return true;
}

Submodule closure(const ModuleRep& M, const Subspace& s) {
    Subspace cur = s;
    std::vector<std::vector<fp_t>> frontier;
    for (std::size_t r = 0; r < s.dim(); ++r) frontier.emplace_back(s.basis().row(r).begin(), s.basis().row(r).end());
    while (!frontier.empty()) {
        std::vector<std::vector<fp_t>> next;
        for (const auto& u : frontier)
            for (const auto& a : M.actions()) {
                auto w = mat_vec(a, u);
                if (cur.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return {cur};
}

Submodule whole(const ModuleRep& M) { return {Subspace::whole(M.dim(), M.field())}; }

Submodule maximal_times(const ModuleRep& M, const Submodule& s) {
    return {image_sum(M, M.actions(), s.space)};
}

Submodule maximal_times(const ModuleRep& M) {
    if (M.dim() == 0) return {Subspace(0, M.field())};
    return {Subspace::span_cols(hstack(M.actions()))};
}

Submodule ideal_times(const ModuleRep& M, const IdealRep& I, const Submodule& s) {
    Subspace out(M.dim(), M.field());
    for (const auto& g : I.mingens)
        for (std::size_t r = 0; r < s.dim(); ++r) {
            auto u = s.space.basis().row(r);
            std::vector<fp_t> w(M.dim(), 0);
            for (std::size_t b = 0; b < g.size(); ++b) {
                if (g[b] == 0) continue;
                auto gu = M.apply_monomial(b, u);
                for (std::size_t k = 0; k < w.size(); ++k) w[k] = M.field().add(w[k], M.field().mul(g[b], gu[k]));
            }
            out.insert(w);
        }
    return {out};
}

Submodule ideal_times(const ModuleRep& M, const IdealRep& I) {
    if (M.dim() == 0 || I.mingens.empty()) return {Subspace(M.dim(), M.field())};
    std::vector<FpMatrix> blocks;
    for (const auto& g : I.mingens) blocks.push_back(M.element_action(g));
    return {Subspace::span_cols(hstack(blocks))};
}

Submodule socle_module(const ModuleRep& M) {
    if (M.dim() == 0) return {Subspace(0, M.field())};
    return {Subspace::span_rows(kernel_rows(vstack(M.actions())))};
}

ModuleRep quotient(const ModuleRep& M, const Submodule& s) {
    if (s.space.ambient() != M.dim()) throw Error("quotient: submodule lives in a different module");
    if (!is_submodule(M, s.space)) throw Error("quotient: subspace is not action-closed");
    const auto Q = s.space.complement_coordinates();
    std::vector<FpMatrix> acts;
    for (const auto& a : M.actions()) {
        FpMatrix qa(Q.size(), Q.size(), M.field());
        for (std::size_t j = 0; j < Q.size(); ++j) {
            const auto w = s.space.reduce(a.col(Q[j]));
            for (std::size_t i = 0; i < Q.size(); ++i) qa(i, j) = w[Q[i]];
        }
        acts.push_back(std::move(qa));
    }
    return ModuleRep(M.ring(), std::move(acts));
}

std::vector<fp_t> project(const Submodule& s, std::span<const fp_t> v) {
    const auto w = s.space.reduce(v);
    const auto Q = s.space.complement_coordinates();
    std::vector<fp_t> out(Q.size());
    for (std::size_t i = 0; i < Q.size(); ++i) out[i] = w[Q[i]];
    return out;
}

ModuleRep restrict_to(const ModuleRep& M, const Submodule& s) {
    const std::size_t k = s.dim();
    std::vector<FpMatrix> acts;
    for (int v = 0; v < M.algebra().nvars(); ++v) {
        FpMatrix ra(k, k, M.field());
        for (std::size_t i = 0; i < k; ++i) {
            const auto w = M.free_rank() ? [&] {
                std::vector<fp_t> out(M.dim(), 0);
                const int xv = M.algebra().times_variable(v, 0);
                if (xv >= 0) M.algebra().multiply_blocks(s.space.basis().row(i), static_cast<std::size_t>(xv), 1, out);
                return out;
            }()
                                         : mat_vec(M.action(v), s.space.basis().row(i));
            if (!s.space.contains(w)) throw Error("restrict_to: subspace is not action-closed");
            const auto c = s.space.coordinates(w);
            for (std::size_t r = 0; r < k; ++r) ra(r, i) = c[r];
        }
        acts.push_back(std::move(ra));
    }
    return ModuleRep(M.ring(), std::move(acts));
}

Subspace to_ambient(const Submodule& s, const Subspace& local) {
    if (local.dim() == 0) return Subspace(s.space.ambient(), s.space.field());
    return Subspace::span_rows(local.basis() * s.space.basis());
}

ModuleRep from_presentation(RingPtr ring, std::size_t gens,
                            const std::vector<std::vector<Element>>& columns) {
    const auto& R = *ring;
    const std::size_t n = R.length();
    ModuleRep F = ModuleRep::free(ring, gens);
    Subspace rel(gens * n, R.field());
    for (const auto& col : columns) {
        if (col.size() != gens) throw Error("relation column has wrong number of entries");
        std::vector<fp_t> v(gens * n, 0);
        for (std::size_t j = 0; j < gens; ++j) {
            if (col[j].size() != n) throw Error("relation entry has wrong length");
            std::copy(col[j].begin(), col[j].end(), v.begin() + static_cast<std::ptrdiff_t>(j * n));
        }
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<fp_t> w(v.size(), 0);
            R.multiply_blocks(v, b, 1, w);
            rel.insert(w);
        }
    }
    return quotient(F, {rel});
}

ModuleRep cyclic_quotient(RingPtr ring, const IdealRep& J) {
    ModuleRep F = ModuleRep::free(ring, 1);
    return quotient(F, {J.span});
}

ModuleRep ring_as_module(RingPtr ring) { return ModuleRep::free(std::move(ring), 1); }

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<FpMatrix> acts;
    for (int v = 0; v < a.algebra().nvars(); ++v) {
        FpMatrix m(n, n, a.field());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.action(v)(i, j);
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.action(v)(i, j);
        acts.push_back(std::move(m));
    }
    return ModuleRep(a.ring(), std::move(acts));
}

// ---------------------------------------------------------------------------

std::size_t length(const ModuleRep& M) { return M.dim(); }

std::size_t min_gens(const ModuleRep& M) { return M.dim() - maximal_times(M).dim(); }

FpMatrix minimal_generators(const ModuleRep& M) {
    const auto mM = maximal_times(M);
    const auto Q = mM.space.complement_coordinates();
    FpMatrix g(M.dim(), Q.size(), M.field());
    for (std::size_t j = 0; j < Q.size(); ++j) g(Q[j], j) = 1;
    return g;
}

Rational gamma(const ModuleRep& M, const IdealRep& I) {
    if (M.dim() == 0) throw Error("gamma: zero module");
    const auto lenM = static_cast<std::int64_t>(M.dim());
    const auto lenIM = static_cast<std::int64_t>(ideal_times(M, I).dim());
    return Rational(lenM, lenM - lenIM) - 1;
}

bool is_I_free(const ModuleRep& M, const IdealRep& I) {
    if (M.dim() == 0) throw Error("is_I_free: zero module");
    const std::size_t s = M.algebra().length() - I.length();
    return M.dim() - ideal_times(M, I).dim() == min_gens(M) * s;
}

bool is_free(const ModuleRep& M) { return M.dim() == min_gens(M) * M.algebra().length(); }

bool check_mJ_annihilates(const MonomialAlgebra& R, const IdealRep& J, const ModuleRep& M) {
    if (&R != M.ring().get()) throw Error("module is over a different ring");
    return maximal_times(M, ideal_times(M, J)).dim() == 0;
}

ModuleRep tensor_naive(const ModuleRep& M, const ModuleRep& N) {
    const std::size_t a = M.dim(), b = N.dim();
    const auto& f = M.field();
    if (a == 0 || b == 0) return ModuleRep::zero(M.ring());
    const FpMatrix Ia = FpMatrix::identity(a, f), Ib = FpMatrix::identity(b, f);
    std::vector<FpMatrix> acts, rels;
    for (int v = 0; v < M.algebra().nvars(); ++v) {
        acts.push_back(kron(M.action(v), Ib));
        rels.push_back(acts.back() - kron(Ia, N.action(v)));
    }
    ModuleRep V(M.ring(), acts);
    return quotient(V, {Subspace::span_cols(hstack(rels))});
}

ModuleRep matlis_dual(const ModuleRep& M) {
    std::vector<FpMatrix> acts;
    for (const auto& a : M.actions()) acts.push_back(a.transpose());
    return ModuleRep(M.ring(), std::move(acts));
}

ModuleRep canonical_module(RingPtr ring) { return matlis_dual(ring_as_module(std::move(ring))); }

}  // namespace artin
