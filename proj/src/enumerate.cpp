#include "artin/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace artin {

namespace {

using Downset = std::vector<Exponent>;  // sorted

Downset permute(const Downset& d, const std::vector<int>& perm) {
    Downset out;
    out.reserve(d.size());
    for (const auto& e : d) {
        Exponent f(e.size());
        for (std::size_t v = 0; v < e.size(); ++v) f[static_cast<std::size_t>(perm[v])] = e[v];
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Downset canonical(const Downset& d, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Downset best = d;
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, permute(d, perm));
    return best;
}

bool contains(const Downset& d, const Exponent& e) { return std::binary_search(d.begin(), d.end(), e); }

// Monomials outside d all of whose immediate divisors lie in d.
std::vector<Exponent> corners(const Downset& d, int n) {
    std::set<Exponent> out;
    for (const auto& e : d)
        for (int v = 0; v < n; ++v) {
            Exponent f = e;
            ++f[static_cast<std::size_t>(v)];
            if (contains(d, f)) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u) {
                if (f[static_cast<std::size_t>(u)] == 0) continue;
                Exponent g = f;
                --g[static_cast<std::size_t>(u)];
                ok = contains(d, g);
            }
            if (ok) out.insert(f);
        }
    return {out.begin(), out.end()};
}

}  // namespace

std::vector<RingPtr> enumerate_rings(int max_vars, int max_len, PrimeField field) {
    if (max_vars < 1 || max_vars > 3) throw Error("enumerate_rings: max_vars must be in [1, 3]");
    if (max_len < 0 || max_len > 12) throw Error("enumerate_rings: max_len must be in [0, 12]");
    struct Found {
        int n;
        std::size_t len;
        std::vector<Exponent> stair;
    };
    std::vector<Found> found;
    if (max_len >= 1) found.push_back({1, 1, {{1}}});
    for (int n = 1; n <= max_vars; ++n) {
        Downset start = {Exponent(static_cast<std::size_t>(n), 0)};
        for (int v = 0; v < n; ++v) {
            Exponent e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(v)] = 1;
            start.push_back(e);
        }
        std::sort(start.begin(), start.end());
        if (static_cast<int>(start.size()) > max_len) continue;
        std::set<Downset> seen = {canonical(start, n)};
        std::deque<Downset> queue = {*seen.begin()};
        while (!queue.empty()) {
            Downset d = std::move(queue.front());
            queue.pop_front();
            const auto cs = corners(d, n);
            found.push_back({n, d.size(), cs});
            if (static_cast<int>(d.size()) == max_len) continue;
            for (const auto& c : cs) {
                Downset next = d;
                next.insert(std::upper_bound(next.begin(), next.end(), c), c);
                auto key = canonical(next, n);
                if (seen.insert(key).second) queue.push_back(std::move(key));
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        return std::tie(a.n, a.len, a.stair) < std::tie(b.n, b.len, b.stair);
    });
    std::vector<RingPtr> out;
    for (const auto& f : found) out.push_back(MonomialAlgebra::build(f.n, f.stair, field));
    return out;
}

std::vector<std::size_t> monomial_generators(const MonomialAlgebra& R, const IdealRep& I) {
    std::vector<std::size_t> mons;
    for (std::size_t r = 0; r < I.span.dim(); ++r) {
        const auto row = I.span.basis().row(r);
        if (std::count_if(row.begin(), row.end(), [](fp_t v) { return v != 0; }) != 1)
            throw Error("monomial_generators: ideal is not monomial");
        mons.push_back(I.span.pivots()[r]);
    }
    std::vector<std::size_t> gens;
    for (auto a : mons) {
        bool minimal = true;
        for (auto b : mons)
            if (b != a && divides(R.basis()[b], R.basis()[a])) minimal = false;
        if (minimal) gens.push_back(a);
    }
    return gens;
}

std::vector<IdealRep> enumerate_ideals(const RingPtr& Rp, IdealMode mode) {
    const auto& R = *Rp;
    const std::size_t n = R.length();
    if (n > 16) throw Error("enumerate_ideals: ring too long");
    struct Cand {
        std::size_t len;
        std::vector<Exponent> gens;
        std::vector<std::size_t> mons;
    };
    std::vector<Cand> cands;
    // subsets of the non-unit monomials, kept when upward closed
    const std::size_t m = n - 1;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        auto in = [&](std::size_t idx) { return idx > 0 && (mask >> (idx - 1) & 1u); };
        bool closed = true;
        for (std::size_t i = 1; i < n && closed; ++i)
            if (in(i))
                for (int v = 0; v < R.nvars() && closed; ++v) {
                    const int j = R.times_variable(v, i);
                    if (j >= 0 && !in(static_cast<std::size_t>(j))) closed = false;
                }
        if (!closed) continue;
        Cand c;
        for (std::size_t i = 1; i < n; ++i)
            if (in(i)) c.mons.push_back(i);
        c.len = c.mons.size();
        for (auto a : c.mons) {
            bool minimal = true;
            for (auto b : c.mons)
                if (b != a && divides(R.basis()[b], R.basis()[a])) minimal = false;
            if (minimal) c.gens.push_back(R.basis()[a]);
        }
        std::sort(c.gens.begin(), c.gens.end());
        cands.push_back(std::move(c));
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return std::tie(a.len, a.gens) < std::tie(b.len, b.gens); });
    std::vector<IdealRep> out;
    for (const auto& c : cands) {
        auto I = monomial_ideal(R, c.mons);
        if (mode == IdealMode::m2I_zero && !check_m2I_zero(R, I)) continue;
        out.push_back(std::move(I));
    }
    return out;
}

std::vector<PresentedModule> enumerate_modules(const RingPtr& R, int max_gens, int max_rels) {
    if (max_gens < 1 || max_gens > 3) throw Error("enumerate_modules: max_gens must be in [1, 3]");
    if (max_rels < 0 || max_rels > 3) throw Error("enumerate_modules: max_rels must be in [0, 3]");
    std::vector<PresentedModule> out;
    for (const auto& J : enumerate_ideals(R)) {
        PresentedModule pm;
        pm.gens = 1;
        for (auto g : monomial_generators(*R, J)) pm.relations.push_back({R->monomial(g)});
        pm.module = cyclic_quotient(R, J);
        out.push_back(std::move(pm));
    }
    const std::size_t n = R->length();
    for (int g = 2; g <= max_gens; ++g) {
        // all nonzero columns with entries in {0} ∪ non-unit monomials
        std::vector<std::vector<Element>> columns;
        std::vector<std::size_t> pick(static_cast<std::size_t>(g), 0);
        while (true) {
            if (std::any_of(pick.begin(), pick.end(), [](std::size_t v) { return v != 0; })) {
                std::vector<Element> col;
                for (auto p : pick) col.push_back(p == 0 ? R->zero() : R->monomial(p));
                columns.push_back(std::move(col));
            }
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == n) pick[k++] = 0;
            if (k == pick.size()) break;
        }
        std::sort(columns.begin(), columns.end());
        const auto gs = static_cast<std::size_t>(g);
        // free module, then increasing column subsets (strictly increasing indices)
        out.push_back({gs, {}, ModuleRep::free(R, gs)});
        std::vector<std::size_t> idx;
        auto emit = [&] {
            std::vector<std::vector<Element>> rel;
            for (auto i : idx) rel.push_back(columns[i]);
            auto M = from_presentation(R, gs, rel);
            out.push_back({gs, std::move(rel), std::move(M)});
        };
        for (int r = 1; r <= max_rels; ++r) {
            idx.assign(static_cast<std::size_t>(r), 0);
            std::iota(idx.begin(), idx.end(), 0);
            if (idx.back() >= columns.size()) break;
            while (true) {
                emit();
                int k = r - 1;
                while (k >= 0 && idx[static_cast<std::size_t>(k)] == columns.size() - static_cast<std::size_t>(r - k)) --k;
                if (k < 0) break;
                ++idx[static_cast<std::size_t>(k)];
                for (int l = k + 1; l < r; ++l) idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
            }
        }
    }
    return out;
}

}  // namespace artin
