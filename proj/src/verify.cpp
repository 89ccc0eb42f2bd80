#include "artin/verify.hpp"

#include <algorithm>
#include <bit>

namespace artin {

class Evaluation {
  public:
    Evaluation(bool detail, Mode mode) : detail_(detail), mode_(mode) {}

    bool detail() const { return detail_; }
    bool applicable() const { return report.applicable; }

    template <class Cond, class Witness>
    void hyp(const std::string& name, Cond cond, Witness witness) {
        if (!detail_ && !report.applicable) return;
        if (!report.applicable) {
            // a later hypothesis may be undefined once an earlier one fails
            try {
                const bool h = cond();
                report.hypotheses.push_back({name, h, witness()});
            } catch (const DepthExceeded&) {
                throw;
            } catch (const std::exception& e) {
                report.hypotheses.push_back({name, false, Json{{"undefined", e.what()}}});
            }
            return;
        }
        const bool h = cond();
        report.applicable = h;
        if (detail_) report.hypotheses.push_back({name, h, witness()});
    }
    template <class Cond>
    void hyp(const std::string& name, Cond cond) {
        hyp(name, cond, [] { return Json(); });
    }

    bool wants_conclusion() const { return report.applicable || (detail_ && mode_ == Mode::probe); }

    template <class F>
    void conclude(F f) {
        if (!wants_conclusion()) return;
        try {
            report.conclusion = f();
        } catch (const DepthExceeded&) {
            throw;
        } catch (const std::exception& e) {
            if (report.applicable) throw;
            report.data["conclusion_error"] = e.what();
        }
    }

    template <class Cond, class Witness>
    void internal(const std::string& name, Cond cond, Witness witness) {
        if (!wants_conclusion()) return;
        const bool ok = cond();
        report.internal_ok = report.internal_ok && ok;
        if (detail_) report.internal_checks.push_back({name, ok, witness()});
    }

    template <class F>
    void data(const std::string& key, F f) {
        if (detail_) report.data[key] = f();
    }

    Report report;

  private:
    bool detail_;
    Mode mode_;
};

namespace {

std::string rat(const Rational& r) { return to_string(r); }

Rational ratio(std::size_t a, std::size_t b) {
    return Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

// ---- shared hypothesis helpers --------------------------------------------

struct Ctx {
    Evaluation& ev;
    Instance& in;

    const MonomialAlgebra& R() const { return in.ring->algebra(); }
    const IdealRep& I() const { return in.ideal->I; }
    int s() const { return in.ideal->inv.s; }
    int h() const { return in.ideal->inv.h; }
    int c() const { return in.ideal->inv.c; }
    ModuleProfile& M() const { return *in.M; }
    ModuleProfile& N() const { return *in.N; }
    PairProfile& P() const { return *in.pair; }

    void nonzero(const std::string& name, ModuleProfile& X) {
        ev.hyp(name + " nonzero", [&] { return !X.is_zero(); }, [&] { return Json{{"length", X.length(0)}}; });
    }
    void nonfree(const std::string& name, ModuleProfile& X) {
        ev.hyp(name + " non-free", [&] { return !X.is_zero() && !X.is_free(); },
               [&] { return Json{{"length", X.length(0)}, {"b0", X.betti(0)}, {"lenR", R().length()}}; });
    }
    void ifree(const std::string& name, ModuleProfile& X, int t) {
        ev.hyp(name + " I-free", [&] { return X.I_free(t, I()); }, [&] {
            return Json{{"lambda_quotient", X.length(t) - X.length_times(t, I())},
                        {"b0_s", X.betti(t) * static_cast<std::size_t>(s())}};
        });
    }
    void mI_kills(const std::string& name, ModuleProfile& X) {
        ev.hyp("mI" + name + " = 0", [&] { return X.length_times(0, in.ideal->mI) == 0; },
               [&] { return Json{{"length", X.length_times(0, in.ideal->mI)}}; });
    }
    void tor_zero(PairProfile& P, int i, const std::string& label = "Tor") {
        ev.hyp(label + "_" + std::to_string(i) + " = 0", [&, i] { return P.tor_length(i) == 0; },
               [&, i] { return Json{{"length", P.tor_length(i)}}; });
    }
    void tensor_killed_by_I(PairProfile& P, int i) {
        ev.hyp("I(M⊗N_" + std::to_string(i) + ") = 0", [&, i] { return P.tensor_times(i, I()) == 0; },
               [&, i] { return Json{{"length", P.tensor_times(i, I())}}; });
    }
    void m2I_zero() {
        ev.hyp("m²I = 0", [&] { return in.ideal->m2I_zero; });
    }
    bool soc_is_mI() const { return in.ring->socle() == in.ideal->mI.span; }
    void soc_eq_mI() {
        ev.hyp("Soc(R) = mI", [&] { return soc_is_mI(); },
               [&] { return Json{{"socdim", in.ring->socle().dim()}, {"len_mI", c()}}; });
    }
    // Tor_i = 0 and N_i I-free for every i in [lo, hi]; stops at the first failure.
    void window(PairProfile& P, ModuleProfile& X, int lo, int hi, const std::string& name) {
        int failed = -1;
        std::string why;
        ev.hyp("Tor_i = 0 and " + name + "_i I-free for i in [" + std::to_string(lo) + "," + std::to_string(hi) + "]",
               [&] {
                   for (int i = lo; i <= hi; ++i) {
                       if (P.tor_length(i) != 0) {
                           failed = i, why = "Tor";
                           return false;
                       }
                       if (!X.I_free(i, I())) {
                           failed = i, why = "I-free";
                           return false;
                       }
                   }
                   return true;
               },
               [&] {
                   return failed < 0 ? Json{{"window", {lo, hi}}}
                                     : Json{{"window", {lo, hi}}, {"first_failure", failed}, {"fails", why}};
               });
    }
};

std::vector<Params> none(int) { return {Params{}}; }

std::vector<Params> i_range(int lo, int hi) {
    std::vector<Params> out;
    for (int i = lo; i <= hi; ++i) {
        Params p;
        p.i = i;
        out.push_back(p);
    }
    return out;
}

std::vector<Params> j_range(int lo, int hi) {
    std::vector<Params> out;
    for (int j = lo; j <= hi; ++j) {
        Params p;
        p.j = j;
        out.push_back(p);
    }
    return out;
}

// ---- property -------------------------------------------------------------

void property_1(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    x.nonzero("M", x.M());
    ev.conclude([&] {
        auto& M = x.M();
        const std::size_t quot = M.length(0) - M.length_times(0, x.I());
        const std::size_t bound = M.betti(0) * static_cast<std::size_t>(x.s());
        // I-freeness decided structurally: the kernel of (R/I)^{b0} → M/IM is zero.
        const auto Q = quotient(M.module(), ideal_times(M.module(), x.I()));
        const auto resQ = minimal_resolution(Q, 1);
        const auto F = ModuleRep::free(M.module().ring(), resQ.betti[0]);
        const bool structural = resQ.syzygies[0].embedding == ideal_times(F, x.I()).space;
        ev.data("lambda_quotient", [&] { return quot; });
        ev.data("b0_s", [&] { return bound; });
        ev.data("quotient_free_over_R/I", [&] { return structural; });
        return quot <= bound && ((quot == bound) == structural);
    });
}

void property_2(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    x.nonzero("M", x.M());
    x.ifree("M", x.M(), 0);
    ev.conclude([&] {
        const auto g = x.M().gamma(0, x.I());
        const auto gR = ratio(x.R().length(), static_cast<std::size_t>(x.s())) - 1;
        const bool free = x.M().betti(1) == 0;
        ev.data("gamma_M", [&] { return rat(g); });
        ev.data("gamma_R", [&] { return rat(gR); });
        ev.data("free", [&] { return free; });
        return g <= gR && ((g == gR) == free);
    });
}

void property_3(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    x.nonzero("M", x.M());
    ev.hyp("I²M = 0", [&] { return x.M().length_times(0, in.ideal->I2) == 0; },
           [&] { return Json{{"length", x.M().length_times(0, in.ideal->I2)}}; });
    ev.conclude([&] {
        const auto g = x.M().gamma(0, x.I());
        ev.data("gamma", [&] { return rat(g); });
        ev.data("h", [&] { return x.h(); });
        return g <= Rational(x.h());
    });
}

void property_4(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    auto& M = x.M();
    const auto& J = x.N().relation_ideal();
    ev.hyp("submodule given", [&] { return J.has_value(); });
    if (!J) return;
    const auto& Mr = M.module();
    std::optional<Submodule> sub;
    auto S = [&]() -> const Submodule& {
        if (!sub) sub = ideal_times(Mr, *J);
        return *sub;
    };
    x.nonzero("M", M);
    ev.hyp("M/N nonzero", [&] { return S().dim() < Mr.dim(); });
    ev.conclude([&] {
        const auto IM = ideal_times(Mr, x.I());
        const auto lenM = i64(Mr.dim()), lenIM = i64(IM.dim()), lenN = i64(S().dim());
        const auto lenCap = i64(S().space.intersect(IM.space).dim());
        const auto Q = quotient(Mr, S());
        const auto lenQ = i64(Q.dim()), lenIQ = i64(ideal_times(Q, x.I()).dim());
        const Rational g = Rational(lenIM, lenM - lenIM), gQ = Rational(lenIQ, lenQ - lenIQ);
        const bool lhs = g == gQ;
        const bool rhs = lenCap != 0 && g == Rational(lenN, lenCap);
        // cross-multiplied form of γ(M) = γ(M/N)
        const bool corrected = lenM * lenCap == lenIM * lenN;
        const bool ifree = M.I_free(0, x.I());
        ev.data("gamma_M", [&] { return rat(g); });
        ev.data("gamma_M/N", [&] { return rat(gQ); });
        ev.data("lambda_N", [&] { return lenN; });
        ev.data("lambda_N∩IM", [&] { return lenCap; });
        ev.data("stated_rhs", [&] { return rhs; });
        ev.data("M_I_free", [&] { return ifree; });
        ev.data("reading_I_free", [&] { return !ifree || lhs == rhs; });
        ev.data("corrected_rhs", [&] { return corrected; });
        ev.internal("γ(M) = γ(M/N) iff λ(M)λ(N∩IM) = λ(IM)λ(N)", [&] { return lhs == corrected; },
                    [&] { return Json{{"lhs", lhs}, {"corrected", corrected}}; });
        return lhs == rhs;
    });
}

void property_5(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    x.nonzero("M", x.M());
    x.nonzero("N", x.N());
    x.ifree("M", x.M(), 0);
    x.ifree("N", x.N(), 0);
    ev.conclude([&] {
        const auto gT = x.P().tensor_gamma(0, x.I());
        const auto gM = x.M().gamma(0, x.I()), gN = x.N().gamma(0, x.I());
        ev.data("gamma_M⊗N", [&] { return rat(gT); });
        ev.data("bound", [&] { return rat((gM + 1) * gN); });
        return gT <= (gM + 1) * gN;
    });
}

// ---- Betti ratios and gamma -----------------------------------------------

void betti_common(Ctx& x, int i) {
    x.nonzero("M", x.M());
    x.nonfree("N", x.N());
    x.ifree("N_" + std::to_string(i - 1), x.N(), i - 1);
    x.ifree("N_" + std::to_string(i), x.N(), i);
}

void betti_gamma(Evaluation& ev, Instance& in, const Params& p, int part) {
    Ctx x{ev, in};
    const int i = p.i;
    if (i < 1) throw Error("index i must be at least 1");
    x.tor_zero(x.P(), i);
    betti_common(x, i);
    if (part >= 2) x.mI_kills("M", x.M());
    if (part == 3) x.tor_zero(x.P(), i - 1);
    ev.conclude([&] {
        const auto r = ratio(x.N().betti(i), x.N().betti(i - 1));
        const auto g = x.M().gamma(0, x.I());
        const auto g0 = x.P().tensor_gamma(i - 1, x.I());
        ev.data("ratio", [&] { return rat(r); });
        ev.data("gamma_M", [&] { return rat(g); });
        ev.data("gamma_M⊗N_i-1", [&] { return rat(g0); });
        if (part == 1) {
            const auto g1 = x.P().tensor_gamma(i, x.I());
            const auto rhs = (g - g0) / (g1 + 1);
            ev.data("gamma_M⊗N_i", [&] { return rat(g1); });
            ev.data("rhs", [&] { return rat(rhs); });
            return r == rhs && rhs <= g;
        }
        if (part == 2) return r == g - g0;
        return r == g;
    });
}

void gamma_tor(Evaluation& ev, Instance& in, const Params& p, int condition) {
    Ctx x{ev, in};
    const int i = p.i;
    if (i < 1) throw Error("index i must be at least 1");
    betti_common(x, i);
    const auto ratio_i = [&] { return ratio(x.N().betti(i), x.N().betti(i - 1)); };
    if (condition == 1) {
        ev.hyp("b_i/b_{i-1} ≤ (γ(M) − γ(M⊗N_{i-1}))/(γ(M⊗N_i)+1)",
               [&] {
                   const auto g = x.M().gamma(0, x.I());
                   return ratio_i() <= (g - x.P().tensor_gamma(i - 1, x.I())) / (x.P().tensor_gamma(i, x.I()) + 1);
               },
               [&] { return Json{{"ratio", rat(ratio_i())}}; });
    } else {
        x.tensor_killed_by_I(x.P(), i - 1);
        x.tensor_killed_by_I(x.P(), i);
        ev.hyp("b_i/b_{i-1} ≤ γ(M)", [&] { return ratio_i() <= x.M().gamma(0, x.I()); },
               [&] { return Json{{"ratio", rat(ratio_i())}, {"gamma_M", rat(x.M().gamma(0, x.I()))}}; });
    }
    ev.conclude([&] {
        ev.data("tor_length", [&] { return x.P().tor_length(i); });
        return x.P().tor_length(i) == 0;
    });
    const auto les = [&] {
        const auto lhs = i64(x.P().tensor_length(i));
        const auto rhs = i64(x.N().betti(i - 1) * x.M().length(0)) - i64(x.P().tensor_length(i - 1)) +
                         i64(x.P().tor1_of_syzygy(i));
        return std::pair{lhs, rhs};
    };
    ev.internal("λ(M⊗N_i) = b_{i-1}λ(M) − λ(M⊗N_{i-1}) + λ(Tor_1(M,N_{i-1}))",
                [&] {
                    const auto [l, r] = les();
                    return l == r;
                },
                [&] {
                    const auto [l, r] = les();
                    return Json{{"lhs", l}, {"rhs", r}};
                });
    ev.internal("λ(Tor_1(M,N_{i-1})) = λ(Tor_i(M,N))",
                [&] { return x.P().tor1_of_syzygy(i) == x.P().tor_length(i); },
                [&] { return Json{{"shifted", x.P().tor1_of_syzygy(i)}, {"direct", x.P().tor_length(i)}}; });
}

void gamma_tor_cor(Evaluation& ev, Instance& in, const Params& p) {
    Ctx x{ev, in};
    const int i = p.i, j = p.j;
    if (i < 1 || j < 1) throw Error("indices i, j must be at least 1");
    x.tor_zero(x.P(), i);
    x.nonzero("M", x.M());
    x.nonfree("N", x.N());
    x.ifree("N_" + std::to_string(i - 1), x.N(), i - 1);
    x.ifree("N_" + std::to_string(i), x.N(), i);
    x.tensor_killed_by_I(x.P(), j - 1);
    x.tensor_killed_by_I(x.P(), j);
    x.ifree("N_" + std::to_string(j - 1), x.N(), j - 1);
    x.ifree("N_" + std::to_string(j), x.N(), j);
    ev.conclude([&] {
        ev.data("tor_j_length", [&] { return x.P().tor_length(j); });
        return x.P().tor_length(j) == 0;
    });
}

// ---- integrality ----------------------------------------------------------

int floor_log2(std::size_t v) { return v == 0 ? 0 : static_cast<int>(std::bit_width(v)) - 1; }

void one_1(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    x.nonzero("M", x.M());
    x.nonfree("N", x.N());
    const int hi = static_cast<int>(x.N().betti(0)) + 1;
    x.window(x.P(), x.N(), 1, hi, "N");
    ev.conclude([&] {
        const auto g = x.M().gamma(0, x.I());
        ev.data("gamma_M", [&] { return rat(g); });
        return g >= 1;
    });
}

void one_2(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    x.nonzero("M", x.M());
    x.nonfree("N", x.N());
    x.mI_kills("M", x.M());
    const int hi = floor_log2(x.N().betti(1)) + 1;
    x.window(x.P(), x.N(), 1, hi, "N");
    ev.conclude([&] {
        const auto g = x.M().gamma(0, x.I());
        ev.data("gamma_M", [&] { return rat(g); });
        return g.denominator() == 1;
    });
}

// ---- freeness under eventual vanishing --------------------------------------

void prop2(Evaluation& ev, Instance& in, const Params& p) {
    Ctx x{ev, in};
    if (p.lo < 1 || p.hi < p.lo) throw Error("window must satisfy 1 ≤ lo ≤ hi");
    const int e = in.ring->e(), h = x.h(), len_m2 = static_cast<int>(in.ring->m2().dim());
    const int t = in.ring->loewy();
    ev.hyp("λ(m²) + 2 − b0(I) < e − 1", [&] { return len_m2 + 2 - h < e - 1; },
           [&] { return Json{{"len_m2", len_m2}, {"h", h}, {"e", e}}; });
    ev.hyp("b0(I) ≤ e", [&] { return h <= e; });
    x.mI_kills("M", x.M());
    x.window(x.P(), x.N(), p.lo, p.hi, "N");
    ev.data("variant_loewy", [&] { return len_m2 + 2 - t < e - 1; });
    ev.data("verdict_label", [] { return "window-verified"; });
    ev.conclude([&] {
        ev.data("growth_inequality", [&] {
            Json rows = Json::array();
            const int a = len_m2 + 2 - t;
            for (int i = p.lo; i + 2 <= x.N().depth(); ++i) {
                const auto lhs = i64(x.N().betti(i + 2));
                const auto rhs = e * i64(x.N().betti(i + 1)) - a * i64(x.N().betti(i));
                rows.push_back({{"i", i}, {"holds", lhs >= rhs}});
            }
            return rows;
        });
        return x.M().is_free() || x.N().is_free();
    });
}

// ---- second-syzygy identities ----------------------------------------------

void imbetti_common(Ctx& x) {
    x.tor_zero(x.P(), 1);
    x.tor_zero(x.P(), 2);
    x.nonzero("M", x.M());
    x.nonfree("N", x.N());
    x.mI_kills("M", x.M());
    x.ifree("N", x.N(), 0);
    x.ifree("N_1", x.N(), 1);
    x.ifree("N_2", x.N(), 2);
}

void imbetti(Evaluation& ev, Instance& in, const Params&, int part) {
    Ctx x{ev, in};
    imbetti_common(x);
    if (part == 2) {
        x.ifree("M", x.M(), 0);
        x.ifree("M_1", x.M(), 1);
    }
    ev.conclude([&] {
        const auto b0 = i64(x.M().betti(0));
        if (part == 1) {
            const auto g = x.M().gamma(0, x.I());
            const Rational rhs = (Rational(x.h()) - g) * b0;
            ev.data("b1_M", [&] { return x.M().betti(1); });
            ev.data("rhs", [&] { return rat(rhs); });
            return Rational(i64(x.M().betti(1))) == rhs;
        }
        const auto lhs = i64(x.M().length_times(1, x.I()));
        const auto rhs = (x.c() + x.h() - x.s() * x.h()) * b0;
        ev.data("lambda_IM_1", [&] { return lhs; });
        ev.data("rhs", [&] { return rhs; });
        return lhs == rhs;
    });
}

void sum(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    x.tor_zero(x.P(), 1);
    x.tor_zero(x.P(), 2);
    x.nonfree("M", x.M());
    x.nonfree("N", x.N());
    x.mI_kills("M", x.M());
    x.mI_kills("N", x.N());
    x.ifree("M", x.M(), 0);
    x.ifree("M_1", x.M(), 1);
    x.ifree("M_2", x.M(), 2);
    x.ifree("N", x.N(), 0);
    x.ifree("N_1", x.N(), 1);
    ev.conclude([&] {
        const auto lhs = x.M().gamma(0, x.I()) + x.N().gamma(0, x.I()) - x.P().tensor_gamma(0, x.I());
        ev.data("lhs", [&] { return rat(lhs); });
        ev.data("h", [&] { return x.h(); });
        return lhs == Rational(x.h());
    });
}

void purebetti(Evaluation& ev, Instance& in, const Params& p) {
    Ctx x{ev, in};
    const int i = p.i;
    if (i < 0) throw Error("index i must be nonnegative");
    if (i + 2 >= x.N().depth() || i + 1 > x.M().depth()) throw DepthExceeded();
    x.tor_zero(x.P(), i + 1);
    x.tor_zero(x.P(), i + 2);
    x.m2I_zero();
    x.nonzero("M", x.M());
    x.nonfree("N", x.N());
    x.mI_kills("M", x.M());
    x.ifree("M_" + std::to_string(i), x.M(), i);
    x.ifree("M_" + std::to_string(i + 1), x.M(), i + 1);
    for (int t = i; t <= i + 2; ++t) x.ifree("N_" + std::to_string(t), x.N(), t);
    ev.conclude([&] {
        const auto lhs = i64(x.M().length(i + 1) - x.M().length_times(i + 1, x.I()));
        const auto rhs = x.h() * x.s() * i64(x.M().betti(i)) - i64(x.M().length_times(i, x.I()));
        ev.data("lhs", [&] { return lhs; });
        ev.data("rhs", [&] { return rhs; });
        return lhs == rhs;
    });
}

// ---- socle family ---------------------------------------------------------

void socle_lemma(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    auto& X = x.M();
    if (X.depth() < 2) throw DepthExceeded();
    // applied to the syzygy module L = X_1, whose first syzygy X_2 sits in R^{b1(X)}
    x.soc_eq_mI();
    ev.hyp("L = M_1 non-free", [&] { return X.betti(1) > 0 && X.betti(2) > 0; },
           [&] { return Json{{"b1", X.betti(1)}, {"b2", X.betti(2)}}; });
    const auto F = ModuleRep::free(X.module().ring(), X.betti(1));
    const Submodule L1{X.resolution().syzygies.at(1).embedding};
    std::optional<Subspace> soc, IL;
    auto Soc = [&]() -> const Subspace& {
        if (!soc) soc = socle_module(F).space.intersect(L1.space);
        return *soc;
    };
    auto ILs = [&]() -> const Subspace& {
        if (!IL) IL = ideal_times(F, x.I(), L1).space;
        return *IL;
    };
    ev.hyp("Soc(L_1) ⊂ IL_1", [&] { return Soc().is_subspace_of(ILs()); },
           [&] { return Json{{"socdim", Soc().dim()}, {"len_IL1", ILs().dim()}}; });
    ev.conclude([&] {
        const auto mIF = ideal_times(F, in.ideal->mI).space;
        ev.data("dims", [&] { return Json{Soc().dim(), ILs().dim(), mIF.dim()}; });
        return Soc() == ILs() && ILs() == mIF;
    });
}

void socle_cor(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    x.soc_eq_mI();
    imbetti_common(x);
    x.ifree("M", x.M(), 0);
    x.ifree("M_1", x.M(), 1);
    ev.hyp("Soc(M_1) = IM_1", [&] { return x.M().socle_equals(1, x.I()); });
    ev.conclude([&] {
        ev.data("s", [&] { return x.s(); });
        return x.s() == 1 && x.I().span == in.ring->maximal().span;
    });
}

void betti1socle(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    x.nonfree("M", x.M());
    x.soc_eq_mI();
    ev.conclude([&] {
        auto& M = x.M();
        const auto lhs = i64(M.length(1) - M.length_times(1, x.I()));
        const auto rhs = i64(M.betti(0)) * x.h() - i64(M.length_times(0, x.I()));
        ev.data("lhs", [&] { return lhs; });
        ev.data("rhs", [&] { return rhs; });
        return lhs >= rhs;
    });
}

// ---- three vanishing Tor --------------------------------------------------

Rational quadratic(int s, int h, int c, const Rational& g) {
    return Rational(s) * g * g - Rational(s * h) * g + Rational(c + h - s * h);
}

void three_vanish(Evaluation& ev, Instance& in, const Params& p) {
    Ctx x{ev, in};
    const int j = p.j;
    if (j < 1) throw Error("index j must be at least 1");
    if (j + 2 >= x.N().depth() || j + 2 > x.M().depth()) throw DepthExceeded();
    for (int t = j; t <= j + 2; ++t) x.tor_zero(x.P(), t);
    x.m2I_zero();
    x.nonfree("M", x.M());
    x.nonfree("N", x.N());
    x.mI_kills("M", x.M());
    x.mI_kills("N", x.N());
    for (int t = j; t <= j + 2; ++t) {
        x.ifree("M_" + std::to_string(t), x.M(), t);
        x.ifree("N_" + std::to_string(t), x.N(), t);
    }
    ev.conclude([&] {
        const auto qM = quadratic(x.s(), x.h(), x.c(), x.M().gamma(0, x.I()));
        const auto qN = quadratic(x.s(), x.h(), x.c(), x.N().gamma(0, x.I()));
        ev.data("q_gamma_M", [&] { return rat(qM); });
        ev.data("q_gamma_N", [&] { return rat(qN); });
        return qM.numerator() == 0 && qN.numerator() == 0;
    });
}

void three_vanish_cor(Evaluation& ev, Instance& in, const Params& p) {
    Ctx x{ev, in};
    const int j = p.j;
    if (j < 2) throw Error("index j must be at least 2");
    if (j + 2 > x.M().depth() || j + 2 > x.N().depth()) throw DepthExceeded();
    x.m2I_zero();
    ev.hyp("I nonzero", [&] { return !x.I().is_zero(); });
    ev.hyp("λ(R) < 2sh", [&] { return static_cast<int>(x.R().length()) < 2 * x.s() * x.h(); });
    x.nonzero("M", x.M());
    x.nonfree("N", x.N());
    x.mI_kills("M", x.M());
    for (int t = j; t <= j + 2; ++t) {
        x.ifree("M_" + std::to_string(t), x.M(), t);
        x.ifree("N_" + std::to_string(t), x.N(), t);
    }
    int beta = j + 2;
    if (x.ev.detail() || x.ev.applicable()) {
        beta = std::max({floor_log2(x.M().betti(1)) + 1, floor_log2(x.N().betti(1)) + 1, j + 2});
        int failed = -1;
        ev.hyp("Tor_i = 0 for i in [1, β]",
               [&] {
                   for (int i = 1; i <= beta; ++i)
                       if (x.P().tor_length(i) != 0) {
                           failed = i;
                           return false;
                       }
                   return true;
               },
               [&] { return Json{{"beta", beta}, {"first_failure", failed}}; });
    }
    ev.conclude([&] { return x.M().is_free() || x.N().is_free(); });
}

// ---- duality --------------------------------------------------------------

void duality_common(Ctx& x, ModuleProfile& M, ModuleProfile& D) {
    x.nonzero("M", M);
    x.ev.hyp("Soc(M) = IM", [&] { return M.socle_equals(0, x.I()); });
    x.ev.hyp("Soc(M†) = IM†", [&] { return D.socle_equals(0, x.I()); });
    x.mI_kills("M", M);
    x.mI_kills("M†", D);
}

void duality(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    auto& M = x.M();
    auto& D = M.dual();
    duality_common(x, M, D);
    ev.conclude([&] {
        const int s = x.s();
        const auto gM = M.gamma(0, x.I()), gD = D.gamma(0, x.I());
        const auto b0M = i64(M.betti(0)), b0D = i64(D.betti(0));
        const auto lenID = i64(D.length_times(0, x.I())), lenIM = i64(M.length_times(0, x.I()));
        const Rational first = Rational(b0D, b0M * s);
        const Rational second = Rational(1, s * s) / gD;
        const bool ids = lenID == b0M && lenIM == b0D;
        const bool chain = gM >= first && first == Rational(b0D, lenID * s) && Rational(b0D, lenID * s) >= second;
        const bool eq1 = !M.I_free(0, x.I()) || gM == first;
        const bool eq2 = !D.I_free(0, x.I()) || Rational(b0D, lenID * s) == second;
        ev.data("gamma_M", [&] { return rat(gM); });
        ev.data("gamma_M†", [&] { return rat(gD); });
        ev.data("product", [&] { return rat(gM * gD); });
        ev.data("bound", [&] { return rat(Rational(1, s * s)); });
        ev.data("first_equality", [&] { return gM == first; });
        ev.data("second_equality", [&] { return Rational(b0D, lenID * s) == second; });
        return ids && chain && eq1 && eq2 && gM * gD >= Rational(1, s * s);
    });
}

void duality_prop(Evaluation& ev, Instance& in, const Params& p) {
    Ctx x{ev, in};
    if (p.lo < 1 || p.hi < p.lo) throw Error("window must satisfy 1 ≤ lo ≤ hi");
    auto& M = x.M();
    ev.hyp("I ≠ m", [&] { return !(x.I().span == in.ring->maximal().span); });
    duality_common(x, M, M.dual());
    if (!ev.detail() && !ev.applicable()) return;
    auto& P = in.ring->with_dual(M);
    auto& D = M.dual();
    int failed = -1;
    ev.hyp("M_i, M†_i I-free and Tor_i(M, M†) = 0 for i in window",
           [&] {
               for (int i = p.lo; i <= p.hi; ++i)
                   if (P.tor_length(i) != 0 || !M.I_free(i, x.I()) || !D.I_free(i, x.I())) {
                       failed = i;
                       return false;
                   }
               return true;
           },
           [&] { return Json{{"window", {p.lo, p.hi}}, {"first_failure", failed}}; });
    ev.data("verdict_label", [] { return "window-verified"; });
    ev.conclude([&] { return M.is_free() || D.is_free(); });
}

// ---- canonical module -----------------------------------------------------

void bettiomega(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    auto& W = in.ring->omega();
    auto& P = in.ring->omega_pair();
    x.tor_zero(P, 1, "Tor(ω,ω)");
    x.tor_zero(P, 2, "Tor(ω,ω)");
    x.ifree("ω", W, 0);
    x.ifree("ω_1", W, 1);
    x.ifree("ω_2", W, 2);
    ev.conclude([&] {
        const auto r = ratio(W.betti(1), W.betti(0));
        ev.data("ratio", [&] { return rat(r); });
        return r <= Rational(x.h(), 2);
    });
}

void prop31(Evaluation& ev, Instance& in, const Params&) {
    Ctx x{ev, in};
    auto& W = in.ring->omega();
    x.soc_eq_mI();
    ev.hyp("h > 1", [&] { return x.h() > 1; });
    ev.hyp("λ(ω_1/Iω_1) ≤ λ(ω/Iω)",
           [&] { return W.length(1) - W.length_times(1, x.I()) <= W.length(0) - W.length_times(0, x.I()); });
    ev.conclude([&] {
        const bool bound = Rational(x.c()) <= Rational(x.s() + x.h(), x.h() - 1);
        const bool gor = !(x.h() > x.s() + 2) || in.ring->gorenstein();
        ev.data("c", [&] { return x.c(); });
        ev.data("bound", [&] { return rat(Rational(x.s() + x.h(), x.h() - 1)); });
        return bound && gor;
    });
}

void cor34(Evaluation& ev, Instance& in, const Params&) {
    auto& W = in.ring->omega();
    ev.hyp("Soc(R) = m²", [&] { return in.ring->socle() == in.ring->m2(); });
    ev.hyp("e ≥ 4", [&] { return in.ring->e() >= 4; }, [&] { return Json{{"e", in.ring->e()}}; });
    ev.hyp("b1(ω) ≤ b0(ω)", [&] { return W.betti(1) <= W.betti(0); },
           [&] { return Json{{"b0", W.betti(0)}, {"b1", W.betti(1)}}; });
    ev.conclude([&] { return in.ring->gorenstein(); });
}

void cor35(Evaluation& ev, Instance& in, const Params& p) {
    Ctx x{ev, in};
    const int i = p.i;
    if (i < 2) throw Error("index i must be at least 2");
    if (i + 3 > x.M().depth() || i + 2 >= in.ring->depth()) throw DepthExceeded();
    auto& W = in.ring->omega();
    x.m2I_zero();
    ev.hyp("h > 2", [&] { return x.h() > 2; });
    ev.hyp("b2(ω) ≤ b1(ω)", [&] { return W.betti(2) <= W.betti(1); });
    x.nonfree("M", x.M());
    x.mI_kills("M", x.M());
    for (int t = i; t <= i + 3; ++t) x.ifree("M_" + std::to_string(t), x.M(), t);
    for (int t = 1; t <= 3; ++t) x.ifree("ω_" + std::to_string(t), W, t);
    if (!ev.detail() && !ev.applicable()) return;
    auto& P = in.ring->with_omega(x.M());
    for (int t = i; t <= i + 2; ++t) x.tor_zero(P, t, "Tor(M,ω)");
    ev.conclude([&] { return in.ring->gorenstein(); });
}

template <class F>
std::function<void(Evaluation&, Instance&, const Params&)> part(F f, int k) {
    return [f, k](Evaluation& ev, Instance& in, const Params& p) { f(ev, in, p, k); };
}

}  // namespace

const std::vector<StatementInfo>& statements() {
    static const std::vector<StatementInfo> list = [] {
        std::vector<StatementInfo> v;
        auto add = [&](std::string id, Scope sc, bool flagged, std::vector<std::string> params, std::string text,
                       std::function<void(Evaluation&, Instance&, const Params&)> run,
                       std::function<std::vector<Params>(int)> suite) {
            v.push_back({std::move(id), sc, flagged, std::move(params), std::move(text), std::move(run), std::move(suite)});
        };
        const auto idx = [](int lo, int hi_off) {
            return [lo, hi_off](int D) { return i_range(lo, D - hi_off); };
        };
        add("property.1", Scope::module, false, {}, "λ(M/IM) ≤ b0(M)λ(R/I), equality iff M is I-free", property_1, none);
        add("property.2", Scope::module, false, {}, "M I-free ⇒ γ_I(M) ≤ γ_I(R), equality iff M free", property_2, none);
        add("property.3", Scope::module, false, {}, "I²M = 0 ⇒ γ_I(M) ≤ b0(I)", property_3, none);
        add("property.4", Scope::pair, true, {}, "γ_I(M) = γ_I(M/N) iff γ_I(M) = λ(N)/λ(N∩IM), N = J·M", property_4, none);
        add("property.5", Scope::pair, false, {}, "M, N I-free ⇒ γ_I(M⊗N) ≤ (γ_I(M)+1)γ_I(N)", property_5, none);
        add("bettiandgamma.1", Scope::pair, false, {"i"}, "b_i/b_{i-1} = (γ(M) − γ(M⊗N_{i-1}))/(γ(M⊗N_i)+1) ≤ γ(M)",
            part(betti_gamma, 1), idx(1, 1));
        add("bettiandgamma.2", Scope::pair, false, {"i"}, "mIM = 0 ⇒ b_i/b_{i-1} = γ(M) − γ(M⊗N_{i-1})",
            part(betti_gamma, 2), idx(1, 1));
        add("bettiandgamma.3", Scope::pair, false, {"i"}, "two vanishing Tor ⇒ b_i/b_{i-1} = γ(M)",
            part(betti_gamma, 3), idx(1, 1));
        add("gammaandTor.1", Scope::pair, false, {"i"}, "Betti ratio bound ⇒ Tor_i = 0", part(gamma_tor, 1), idx(1, 1));
        add("gammaandTor.2", Scope::pair, false, {"i"}, "I kills M⊗N_{i-1}, M⊗N_i and ratio ≤ γ(M) ⇒ Tor_i = 0",
            part(gamma_tor, 2), idx(1, 1));
        add("gammaandTor.cor", Scope::pair, false, {"i", "j"}, "Tor_i = 0 propagates to Tor_j = 0", gamma_tor_cor,
            [](int D) {
                std::vector<Params> out;
                for (int i = 1; i < D; ++i)
                    for (int j = 1; j < D; ++j) {
                        Params p;
                        p.i = i, p.j = j;
                        out.push_back(p);
                    }
                return out;
            });
        add("one.1", Scope::pair, true, {}, "vanishing on [1, b0(N)+1] ⇒ γ_I(M) ≥ 1", one_1, none);
        add("one.2", Scope::pair, false, {}, "vanishing on [1, ⌊log2 b1(N)⌋+1] ⇒ γ_I(M) integer", one_2, none);
        add("prop2", Scope::pair, true, {"window"}, "eventual vanishing ⇒ M or N free (window-verified)", prop2,
            [](int D) {
                Params p;
                p.lo = 3, p.hi = D - 1;
                return D >= 4 ? std::vector<Params>{p} : std::vector<Params>{};
            });
        add("imbetti.1", Scope::pair, false, {}, "b1(M) = (b0(I) − γ_I(M))b0(M)", part(imbetti, 1), none);
        add("imbetti.2", Scope::pair, false, {}, "λ(IM_1) = (λ(mI) + b0(I) − λ(R/I)b0(I))b0(M)", part(imbetti, 2), none);
        add("sum", Scope::pair, false, {}, "γ_I(M) + γ_I(N) − γ_I(M⊗N) = b0(I)", sum, none);
        add("purebetti", Scope::pair, false, {"i"}, "λ(M_{i+1}/IM_{i+1}) = b0(I)λ(R/I)b_i(M) − λ(IM_i)", purebetti,
            idx(0, 3));
        add("socle.lemma", Scope::module, false, {}, "Soc(L_1) = IL_1 = mIR^{b0(L)} for the syzygy L = M_1",
            socle_lemma, none);
        add("socle.cor", Scope::pair, false, {}, "Soc(R) = mI and Soc(M_1) = IM_1 ⇒ I = m", socle_cor, none);
        add("betti1socle", Scope::module, false, {}, "Soc(R) = mI ⇒ λ(M_1/IM_1) ≥ b0(M)b0(I) − λ(IM)", betti1socle,
            none);
        add("three-vanish", Scope::pair, false, {"j"}, "three vanishing Tor ⇒ sγ² − shγ + c + h − sh = 0",
            three_vanish, [](int D) { return j_range(1, D - 3); });
        add("three-vanish.cor", Scope::pair, true, {"j"}, "vanishing on [1, β] ⇒ M or N free", three_vanish_cor,
            [](int D) { return j_range(2, D - 3); });
        add("duality", Scope::module, false, {}, "γ_I(M)γ_I(M†) ≥ 1/λ(R/I)² with the stated equality cases", duality,
            none);
        add("duality.prop", Scope::module, false, {"window"}, "eventual vanishing of Tor(M, M†) ⇒ M or M† free",
            duality_prop, [](int D) {
                Params p;
                p.lo = 3, p.hi = D - 1;
                return D >= 4 ? std::vector<Params>{p} : std::vector<Params>{};
            });
        add("bettiomega", Scope::ideal, false, {}, "b1(ω)/b0(ω) ≤ b0(I)/2", bettiomega, none);
        add("prop31", Scope::ideal, false, {}, "λ(mI) ≤ (λ(R/I) + b0(I))/(b0(I) − 1); h > s + 2 ⇒ Gorenstein", prop31,
            none);
        add("cor34", Scope::ring, false, {}, "Soc(R) = m², e ≥ 4, b1(ω) ≤ b0(ω) ⇒ Gorenstein", cor34, none);
        add("cor35", Scope::module, false, {"i"}, "three vanishing Tor(M, ω) ⇒ Gorenstein", cor35, idx(2, 3));
        return v;
    }();
    return list;
}

const StatementInfo& find_statement(const std::string& id) {
    for (const auto& s : statements())
        if (s.id == id) return s;
    throw Error("unknown statement: " + id);
}

Json params_json(const StatementInfo& s, const Params& p) {
    Json out = Json::object();
    for (const auto& n : s.param_names) {
        if (n == "i") out["i"] = p.i;
        if (n == "j") out["j"] = p.j;
        if (n == "window") out["window"] = {p.lo, p.hi};
    }
    return out;
}

Report evaluate(const StatementInfo& s, Instance& in, const Params& p, Mode mode) {
    Evaluation ev(true, mode);
    ev.report.statement = s.id;
    ev.report.mode = mode;
    ev.report.params = params_json(s, p);
    s.run(ev, in, p);
    return std::move(ev.report);
}

char verdict(const StatementInfo& s, Instance& in, const Params& p) {
    Evaluation ev(false, Mode::check);
    try {
        s.run(ev, in, p);
    } catch (const DepthExceeded&) {
        return '?';
    } catch (const std::exception&) {
        return 'X';
    }
    const auto& r = ev.report;
    if (!r.internal_ok) return 'X';
    if (!r.applicable) return '-';
    return r.conclusion == true ? 'T' : 'F';
}

Json Report::to_json() const {
    Json hyps = Json::array();
    for (const auto& h : hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"witness", h.witness}});
    Json internal = Json::array();
    for (const auto& h : internal_checks)
        internal.push_back({{"name", h.name}, {"holds", h.holds}, {"witness", h.witness}});
    return Json{{"statement", statement},
                {"mode", mode == Mode::check ? "check" : "probe"},
                {"params", params},
                {"hypotheses", hyps},
                {"applicable", applicable},
                {"conclusion", conclusion ? Json(*conclusion) : Json()},
                {"counterexample", counterexample()},
                {"internal_checks", internal},
                {"data", data}};
}

}  // namespace artin
