#include "artin/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace artin {

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] > b[v]) return false;
    return true;
}

std::vector<Exponent> minimize_staircase(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            redundant = j != i && divides(gens[j], gens[i]);
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool graded_desc_lex(const Exponent& a, const Exponent& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

}  // namespace

RingPtr MonomialAlgebra::build(int nvars, std::vector<Exponent> staircase, PrimeField field) {
    if (nvars < 1) throw Error("ring needs at least one variable");
    if (staircase.empty()) throw Error("not Artinian: empty staircase");
    for (const auto& g : staircase) {
        if (static_cast<int>(g.size()) != nvars)
            throw Error("staircase generator has " + std::to_string(g.size()) +
                        " exponents, expected " + std::to_string(nvars));
        for (int a : g)
            if (a < 0) throw Error("negative exponent in staircase");
        if (total_degree(g) == 0) throw Error("staircase contains the unit; the ring is zero");
    }
    auto alg = std::shared_ptr<MonomialAlgebra>(new MonomialAlgebra());
    alg->nvars_ = nvars;
    alg->field_ = field;
    alg->staircase_ = minimize_staircase(std::move(staircase));

    std::vector<int> bound(nvars, -1);
    for (const auto& g : alg->staircase_) {
        int nonzero = 0, var = -1;
        for (int v = 0; v < nvars; ++v)
            if (g[v] > 0) ++nonzero, var = v;
        if (nonzero == 1) bound[var] = bound[var] < 0 ? g[var] : std::min(bound[var], g[var]);
    }
    for (int v = 0; v < nvars; ++v)
        if (bound[v] < 0)
            throw Error("not Artinian: variable " + std::to_string(v) + " has no pure-power bound");

    auto standard = [&](const Exponent& e) {
        return std::none_of(alg->staircase_.begin(), alg->staircase_.end(),
                            [&](const Exponent& g) { return divides(g, e); });
    };
    // box enumeration
    Exponent e(nvars, 0);
    while (true) {
        if (standard(e)) alg->basis_.push_back(e);
        int v = 0;
        while (v < nvars && ++e[v] >= bound[v]) e[v++] = 0;
        if (v == nvars) break;
    }
    std::sort(alg->basis_.begin(), alg->basis_.end(), graded_desc_lex);

    const std::size_t n = alg->basis_.size();
    std::map<Exponent, int> index;
    for (std::size_t i = 0; i < n; ++i) index[alg->basis_[i]] = static_cast<int>(i);
    alg->table_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Exponent s(nvars);
            for (int v = 0; v < nvars; ++v) s[v] = alg->basis_[i][v] + alg->basis_[j][v];
            auto it = index.find(s);
            alg->table_[i * n + j] = it == index.end() ? -1 : it->second;
        }
    alg->var_table_.assign(static_cast<std::size_t>(nvars) * n, -1);
    for (int v = 0; v < nvars; ++v) {
        Exponent xv(nvars, 0);
        xv[v] = 1;
        FpMatrix act(n, n, field);
        for (std::size_t i = 0; i < n; ++i) {
            Exponent s = alg->basis_[i];
            ++s[v];
            auto it = index.find(s);
            if (it == index.end()) continue;
            alg->var_table_[v * n + i] = it->second;
            act(static_cast<std::size_t>(it->second), i) = 1;
        }
        alg->var_actions_.push_back(std::move(act));
    }
    return alg;
}

std::optional<std::size_t> MonomialAlgebra::index_of(const Exponent& e) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == e) return i;
    return std::nullopt;
}

int MonomialAlgebra::degree(std::size_t i) const { return total_degree(basis_[i]); }

Element MonomialAlgebra::monomial(std::size_t index) const {
    Element a = zero();
    a[index] = 1;
    return a;
}

Element MonomialAlgebra::from_polynomial(const Polynomial& poly) const {
    Element a = zero();
    for (const auto& term : poly) {
        if (static_cast<int>(term.exponent.size()) != nvars_)
            throw Error("term exponent has wrong number of variables");
        for (int x : term.exponent)
            if (x < 0) throw Error("negative exponent in polynomial");
        if (auto idx = index_of(term.exponent))
            a[*idx] = field_.add(a[*idx], field_.reduce(term.coeff));
    }
    return a;
}

Element MonomialAlgebra::multiply(const Element& a, const Element& b) const {
    Element out = zero();
    const std::size_t n = length();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            const int k = product(i, j);
            if (k >= 0) out[k] = field_.add(out[k], field_.mul(a[i], b[j]));
        }
    }
    return out;
}

FpMatrix MonomialAlgebra::element_action(const Element& a) const {
    const std::size_t n = length();
    FpMatrix m(n, n, field_);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const int k = product(i, j);
            if (k >= 0) m(k, j) = field_.add(m(k, j), a[i]);
        }
    }
    return m;
}

void MonomialAlgebra::multiply_blocks(std::span<const fp_t> in, std::size_t index, fp_t coeff,
                                      std::span<fp_t> out) const {
    const std::size_t n = length();
    const int* row = &table_[index * n];
    for (std::size_t base = 0; base < in.size(); base += n)
        for (std::size_t j = 0; j < n; ++j) {
            const fp_t x = in[base + j];
            if (x == 0 || row[j] < 0) continue;
            fp_t& dst = out[base + static_cast<std::size_t>(row[j])];
            dst = field_.add(dst, field_.mul(coeff, x));
        }
}

std::string MonomialAlgebra::monomial_name(std::size_t index,
                                           const std::vector<std::string>& vars) const {
    static const char* defaults[] = {"x", "y", "z", "w", "u", "v"};
    std::ostringstream os;
    bool any = false;
    for (int v = 0; v < nvars_; ++v) {
        const int a = basis_[index][v];
        if (a == 0) continue;
        if (any) os << '*';
        any = true;
        os << (v < static_cast<int>(vars.size()) ? vars[v]
               : v < 6                           ? std::string(defaults[v])
                                                 : "x" + std::to_string(v));
        if (a > 1) os << '^' << a;
    }
    return any ? os.str() : "1";
}

std::string MonomialAlgebra::element_name(const Element& a, const std::vector<std::string>& vars) const {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0)
            out += std::to_string(a[i]);
        else
            out += (a[i] != 1 ? std::to_string(a[i]) + "*" : "") + monomial_name(i, vars);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

Subspace maximal_times(const MonomialAlgebra& R, const Subspace& s) {
    Subspace out(R.length(), R.field());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        auto row = s.basis().row(r);
        for (int v = 0; v < R.nvars(); ++v) {
            Element w = R.zero();
            for (std::size_t i = 0; i < row.size(); ++i) {
                const int k = R.times_variable(v, i);
                if (row[i] != 0 && k >= 0) w[k] = R.field().add(w[k], row[i]);
            }
            out.insert(w);
        }
    }
    return out;
}

Subspace maximal_ideal(const MonomialAlgebra& R) { return maximal_power(R, 1); }

Subspace maximal_power(const MonomialAlgebra& R, int j) {
    Subspace s = Subspace::whole(R.length(), R.field());
    for (int k = 0; k < j && !s.is_zero(); ++k) s = maximal_times(R, s);
    return s;
}

int loewy_length(const MonomialAlgebra& R) {
    Subspace s = Subspace::whole(R.length(), R.field());
    int t = 0;
    while (!s.is_zero()) {
        s = maximal_times(R, s);
        ++t;
    }
    return t;
}

IdealRep ideal_from_subspace(const MonomialAlgebra& R, const Subspace& span) {
    IdealRep I;
    I.span = span;
    Subspace mI = maximal_times(R, span);
    for (std::size_t r = 0; r < span.dim(); ++r) {
        auto row = span.basis().row(r);
        if (mI.insert(row)) I.mingens.emplace_back(row.begin(), row.end());
    }
    std::ostringstream key;
    for (auto p : span.pivots()) key << p << ',';
    key << '|';
    for (auto v : span.basis().data()) key << v << ',';
    I.key = key.str();
    return I;
}

IdealRep ideal_span(const MonomialAlgebra& R, std::vector<Element> gens) {
    Subspace span(R.length(), R.field());
    for (const auto& g : gens) {
        if (g.size() != R.length()) throw Error("ideal generator has wrong length");
        for (std::size_t b = 0; b < R.length(); ++b) {
            Element w = R.zero();
            R.multiply_blocks(g, b, 1, w);
            span.insert(w);
        }
    }
    IdealRep I = ideal_from_subspace(R, span);
    I.gens = std::move(gens);
    return I;
}

IdealRep monomial_ideal(const MonomialAlgebra& R, const std::vector<std::size_t>& monomials) {
    std::vector<Element> gens;
    for (auto m : monomials) gens.push_back(R.monomial(m));
    return ideal_span(R, std::move(gens));
}

IdealRep maximal_ideal_rep(const MonomialAlgebra& R) {
    std::vector<Element> gens;
    for (int v = 0; v < R.nvars(); ++v) {
        Element g = R.zero();
        const int k = R.times_variable(v, 0);
        if (k >= 0) {
            g[k] = 1;
            gens.push_back(std::move(g));
        }
    }
    return ideal_span(R, std::move(gens));
}

Subspace ideal_product(const MonomialAlgebra& R, const IdealRep& a, const IdealRep& b) {
    Subspace out(R.length(), R.field());
    for (const auto& x : a.mingens)
        for (const auto& y : b.mingens) {
            // x·y·R: multiply out by all monomials
            const Element xy = R.multiply(x, y);
            for (std::size_t m = 0; m < R.length(); ++m) {
                Element w = R.zero();
                R.multiply_blocks(xy, m, 1, w);
                out.insert(w);
            }
        }
    return out;
}

Subspace socle_ring(const MonomialAlgebra& R) {
    std::vector<FpMatrix> acts;
    for (int v = 0; v < R.nvars(); ++v) acts.push_back(R.variable_action(v));
    return Subspace::span_rows(kernel_rows(vstack(acts)));
}

bool is_gorenstein(const MonomialAlgebra& R) { return socle_ring(R).dim() == 1; }

RingInvariants ring_invariants(const MonomialAlgebra& R, const IdealRep& I) {
    if (I.span.contains(R.unit())) throw Error("improper ideal: 1 lies in I");
    RingInvariants inv;
    inv.lenR = static_cast<int>(R.length());
    inv.s = inv.lenR - static_cast<int>(I.length());
    inv.c = static_cast<int>(maximal_times(R, I.span).dim());
    inv.h = static_cast<int>(I.length()) - inv.c;
    const Subspace m = maximal_ideal(R);
    const Subspace m2 = maximal_times(R, m);
    inv.e = static_cast<int>(m.dim() - m2.dim());
    inv.len_m2 = static_cast<int>(m2.dim());
    inv.t = loewy_length(R);
    inv.socdim = static_cast<int>(socle_ring(R).dim());
    if (inv.s + inv.h + inv.c != inv.lenR) throw Error("internal: s + h + c != λ(R)");
    return inv;
}

bool check_m2I_zero(const MonomialAlgebra& R, const IdealRep& I) {
    return maximal_times(R, maximal_times(R, I.span)).is_zero();
}

}  // namespace artin
