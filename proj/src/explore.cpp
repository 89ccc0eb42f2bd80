#include "artin/explore.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "artin/instance.hpp"

namespace artin {

using nlohmann::json;

namespace {

struct Selected {
    const StatementInfo* info;
    std::vector<Params> params;
};

std::vector<Selected> select(const SuiteOptions& opts) {
    std::vector<Selected> out;
    for (const auto& s : statements()) {
        if (!opts.statements.empty() &&
            std::find(opts.statements.begin(), opts.statements.end(), s.id) == opts.statements.end())
            continue;
        out.push_back({&s, s.suite_params(opts.depth)});
    }
    for (const auto& id : opts.statements) find_statement(id);
    return out;
}

struct Line {
    std::string key;
    std::string text;
};

struct RingOutput {
    std::vector<Line> lines;
    std::vector<Line> findings;
    std::map<std::string, StatementTally> tally;
    std::size_t ideals = 0, modules = 0, pairs = 0;
    std::vector<json> witnesses;
};

std::string scope_name(Scope s) {
    switch (s) {
        case Scope::ring: return "ring";
        case Scope::ideal: return "ideal";
        case Scope::module: return "module";
        default: return "pair";
    }
}

json bounds_json(const CorpusBounds& b) {
    return {{"max_vars", b.max_vars},
            {"max_len", b.max_len},
            {"max_gens", b.max_gens},
            {"max_rels", b.max_rels},
            {"ideals", b.ideals == IdealMode::monomial ? "monomial" : "m2I-zero"}};
}

struct WitnessRequest {
    const StatementInfo* info = nullptr;
};

class RingJob {
  public:
    RingJob(const RingPtr& R, const SuiteOptions& opts, const std::vector<Selected>& sel,
            const std::set<std::tuple<std::size_t, std::size_t, std::size_t>>* sampled, bool witness_mode)
        : opts_(opts), sel_(sel), sampled_(sampled), witness_mode_(witness_mode), ctx_(R, opts.depth) {
        const auto& A = *R;
        for (auto& I : enumerate_ideals(R, opts.bounds.ideals)) {
            std::vector<Element> gens;
            for (auto g : monomial_generators(A, I)) gens.push_back(A.monomial(g));
            ideal_gens_.push_back(std::move(gens));
            ideals_.emplace_back(A, std::move(I));
        }
        for (auto& pm : enumerate_modules(R, opts.bounds.max_gens, opts.bounds.max_rels)) {
            NamedModule nm;
            nm.gens = pm.gens;
            nm.relations = std::move(pm.relations);
            std::vector<Element> entries;
            for (const auto& col : nm.relations)
                for (const auto& e : col) entries.push_back(e);
            nm.relation_ideal = ideal_span(A, entries);
            nm.module = std::move(pm.module);
            modules_.push_back(std::move(nm));
        }
        for (const auto& nm : modules_)
            profiles_.push_back(std::make_unique<ModuleProfile>(nm.module, opts.depth, nm.relation_ideal));
    }

    std::size_t ideal_count() const { return ideals_.size(); }
    std::size_t module_count() const { return modules_.size(); }

    RingOutput run(std::size_t ring_index) {
        RingOutput out;
        out.ideals = ideals_.size();
        out.modules = modules_.size();
        const bool sampling = sampled_ != nullptr;
        if (!sampling) {
            Instance in;
            in.ring = &ctx_;
            emit(out, Scope::ring, in, {}, {});
            for (std::size_t k = 0; k < ideals_.size(); ++k) {
                in.ideal = &ideals_[k];
                emit(out, Scope::ideal, in, ideal_gens_[k], {});
                for (std::size_t a = 0; a < modules_.size(); ++a) {
                    in.M = profiles_[a].get();
                    emit(out, Scope::module, in, ideal_gens_[k], {{"M", &modules_[a]}});
                }
                in.M = nullptr;
            }
        }
        for (std::size_t a = 0; a < modules_.size(); ++a)
            for (std::size_t b = 0; b < modules_.size(); ++b) {
                std::unique_ptr<PairProfile> pair;
                for (std::size_t k = 0; k < ideals_.size(); ++k) {
                    if (sampling && !sampled_->count({ring_index, a * modules_.size() + b, k})) continue;
                    if (!pair) pair = std::make_unique<PairProfile>(*profiles_[a], *profiles_[b]);
                    Instance in{&ctx_, &ideals_[k], profiles_[a].get(), profiles_[b].get(), pair.get()};
                    ++out.pairs;
                    emit(out, Scope::pair, in, ideal_gens_[k], {{"M", &modules_[a]}, {"N", &modules_[b]}});
                }
            }
        return out;
    }

  private:
    void emit(RingOutput& out, Scope scope, Instance& in, const std::vector<Element>& igens,
              const std::vector<std::pair<std::string, const NamedModule*>>& mods) {
        json verdicts = json::object();
        std::vector<std::pair<const StatementInfo*, std::vector<std::size_t>>> hits;
        for (const auto& s : sel_) {
            if (s.info->scope != scope) continue;
            std::string v;
            auto& t = out.tally[s.info->id];
            std::vector<std::size_t> flagged_params;
            for (std::size_t k = 0; k < s.params.size(); ++k) {
                const char c = verdict(*s.info, in, s.params[k]);
                v.push_back(c);
                ++t.evaluated;
                if (c == 'T' || c == 'F') ++t.applicable;
                if (c == 'F' || c == 'X') ++t.counterexamples;
                if (c == 'X') ++t.internal_failures;
                if (c == '?') ++t.skipped;
                if (witness_mode_ ? (c == 'T' || c == 'F') : (c == 'F' || c == 'X')) flagged_params.push_back(k);
            }
            if (v.find_first_not_of('-') != std::string::npos) verdicts[s.info->id] = v;
            if (!flagged_params.empty()) hits.emplace_back(s.info, std::move(flagged_params));
        }
        if (witness_mode_ && hits.empty()) return;
        const json fp = fingerprint_json(ctx_.algebra(), igens, mods);
        json inv = {{"lenR", ctx_.algebra().length()},
                    {"e", ctx_.e()},
                    {"t", ctx_.loewy()},
                    {"socdim", ctx_.socle().dim()},
                    {"len_m2", ctx_.m2().dim()}};
        if (in.ideal) {
            inv["s"] = in.ideal->inv.s;
            inv["h"] = in.ideal->inv.h;
            inv["c"] = in.ideal->inv.c;
        }
        json entry = {{"scope", scope_name(scope)}, {"fingerprint", fp}, {"invariants", inv}, {"verdicts", verdicts}};
        if (in.M) entry["betti"]["M"] = in.M->resolution().betti;
        if (in.N) entry["betti"]["N"] = in.N->resolution().betti;
        if (in.pair) {
            json tor = json::array();
            for (int i = 1; i < opts_.depth; ++i) tor.push_back(in.pair->tor_length(i));
            entry["tor"] = tor;
        }
        const std::string key = fp.dump() + "|" + scope_name(scope);
        if (witness_mode_) {
            for (const auto& [info, ks] : hits) {
                json params = json::array();
                for (auto k : ks) params.push_back(params_json(*info, sel_params(info)[k]));
                out.witnesses.push_back({{"entry", entry}, {"params", params}, {"statement", info->id}});
            }
            return;
        }
        out.lines.push_back({key, entry.dump()});
        for (const auto& [info, ks] : hits)
            for (auto k : ks) {
                const auto& p = sel_params(info)[k];
                const auto rep = evaluate(*info, in, p);
                json f = {{"statement", info->id},
                          {"flagged", info->flagged},
                          {"params", params_json(*info, p)},
                          {"fingerprint", fp},
                          {"report", rep.to_json()}};
                out.findings.push_back({info->id + "|" + key + "|" + std::to_string(k), f.dump()});
            }
    }

    const std::vector<Params>& sel_params(const StatementInfo* info) const {
        for (const auto& s : sel_)
            if (s.info == info) return s.params;
        throw Error("statement not selected");
    }

    const SuiteOptions& opts_;
    const std::vector<Selected>& sel_;
    const std::set<std::tuple<std::size_t, std::size_t, std::size_t>>* sampled_;
    bool witness_mode_;
    RingContext ctx_;
    std::vector<IdealContext> ideals_;
    std::vector<std::vector<Element>> ideal_gens_;
    std::vector<NamedModule> modules_;
    std::vector<std::unique_ptr<ModuleProfile>> profiles_;
};

std::vector<RingOutput> run_rings(const SuiteOptions& opts, const std::vector<Selected>& sel, bool witness_mode,
                                  SuiteSummary& summary) {
    const auto rings = enumerate_rings(opts.bounds.max_vars, opts.bounds.max_len, PrimeField(opts.p));
    summary.rings = rings.size();

    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> sampled;
    const bool sampling = opts.seed.has_value();
    if (sampling) {
        // counts per ring are needed before sampling
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> all;
        for (std::size_t r = 0; r < rings.size(); ++r) {
            const auto ni = enumerate_ideals(rings[r], opts.bounds.ideals).size();
            const auto nm = enumerate_modules(rings[r], opts.bounds.max_gens, opts.bounds.max_rels).size();
            for (std::size_t ab = 0; ab < nm * nm; ++ab)
                for (std::size_t k = 0; k < ni; ++k) all.emplace_back(r, ab, k);
        }
        std::mt19937_64 rng(*opts.seed);
        const std::size_t take = std::min(opts.sample, all.size());
        for (std::size_t k = 0; k < take; ++k) {
            const std::size_t pick = k + static_cast<std::size_t>(rng() % (all.size() - k));
            std::swap(all[k], all[pick]);
            sampled.insert(all[k]);
        }
    }

    std::vector<RingOutput> outs(rings.size());
    std::vector<std::string> errors(rings.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t r = 0; r < rings.size(); ++r) {
        try {
            RingJob job(rings[r], opts, sel, sampling ? &sampled : nullptr, witness_mode);
            outs[r] = job.run(r);
        } catch (const std::exception& e) {
            errors[r] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw Error("suite: " + e);
    return outs;
}

}  // namespace

bool SuiteSummary::clean() const {
    for (const auto& [id, t] : statements) {
        if (t.internal_failures > 0) return false;
        if (t.counterexamples > 0 && !find_statement(id).flagged) return false;
    }
    return true;
}

json SuiteSummary::to_json() const {
    json st = json::object();
    for (const auto& [id, t] : statements)
        st[id] = {{"evaluated", t.evaluated},
                  {"applicable", t.applicable},
                  {"counterexamples", t.counterexamples},
                  {"internal_failures", t.internal_failures},
                  {"skipped_depth", t.skipped},
                  {"flagged", find_statement(id).flagged}};
    return {{"rings", rings},   {"ideals", ideals},   {"modules", modules}, {"pairs", pairs},
            {"entries", entries}, {"statements", st}, {"clean", clean()}};
}

SuiteResult run_suite(const SuiteOptions& opts) {
    const auto sel = select(opts);
    SuiteResult res;
    auto outs = run_rings(opts, sel, false, res.summary);
    std::vector<Line> lines, findings;
    for (auto& o : outs) {
        res.summary.ideals += o.ideals;
        res.summary.modules += o.modules;
        res.summary.pairs += o.pairs;
        for (auto& [id, t] : o.tally) {
            auto& s = res.summary.statements[id];
            s.evaluated += t.evaluated;
            s.applicable += t.applicable;
            s.counterexamples += t.counterexamples;
            s.internal_failures += t.internal_failures;
            s.skipped += t.skipped;
        }
        for (auto& l : o.lines) lines.push_back(std::move(l));
        for (auto& l : o.findings) findings.push_back(std::move(l));
    }
    for (const auto& s : sel) res.summary.statements.try_emplace(s.info->id);
    auto by_key = [](const Line& a, const Line& b) { return a.key < b.key; };
    std::sort(lines.begin(), lines.end(), by_key);
    std::sort(findings.begin(), findings.end(), by_key);
    for (auto& l : lines) res.catalog.push_back(std::move(l.text));
    for (auto& l : findings) res.findings.push_back(std::move(l.text));
    res.summary.entries = res.catalog.size();
    json header = {{"kind", "artin-catalog"},
                   {"version", 1},
                   {"p", opts.p},
                   {"bounds", bounds_json(opts.bounds)},
                   {"depth", opts.depth},
                   {"window", {3, opts.depth - 1}},
                   {"seed", opts.seed ? json(*opts.seed) : json()},
                   {"sample", opts.seed ? json(opts.sample) : json()}};
    res.header = header.dump();
    return res;
}

SuiteSummary run_suite(const SuiteOptions& opts, const std::string& out_path) {
    const auto res = run_suite(opts);
    auto write = [](const std::string& path, const std::string* head, const std::vector<std::string>& lines) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error("cannot write " + path);
        if (head) f << *head << '\n';
        for (const auto& l : lines) f << l << '\n';
        if (!f) throw Error("write failed: " + path);
    };
    write(out_path, &res.header, res.catalog);
    write(out_path + ".findings.jsonl", nullptr, res.findings);
    std::ofstream s(out_path + ".summary.json", std::ios::binary);
    s << res.summary.to_json().dump(2) << '\n';
    if (!s) throw Error("write failed: " + out_path + ".summary.json");
    return res.summary;
}

std::vector<json> search_witnesses(const SuiteOptions& base, const std::string& statement) {
    const auto& info = find_statement(statement);
    SuiteOptions opts = base;
    opts.statements = {statement};
    const auto sel = select(opts);
    SuiteSummary summary;
    auto outs = run_rings(opts, sel, true, summary);
    std::vector<std::pair<std::string, json>> found;
    for (auto& o : outs)
        for (auto& w : o.witnesses) found.emplace_back(w["entry"]["fingerprint"].dump(), std::move(w));
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<json> out;
    for (auto& [key, w] : found) {
        // rebuild every object from the fingerprint alone
        const auto parsed = parse_instance(w["entry"]["fingerprint"]);
        RingContext ctx(parsed.ring, opts.depth);
        IdealContext ideal(*parsed.ring, parsed.I);
        std::unique_ptr<ModuleProfile> M, N;
        std::unique_ptr<PairProfile> P;
        if (parsed.modules.count("M")) {
            const auto& m = parsed.module("M");
            M = std::make_unique<ModuleProfile>(m.module, opts.depth, m.relation_ideal);
        }
        if (parsed.modules.count("N")) {
            const auto& n = parsed.module("N");
            N = std::make_unique<ModuleProfile>(n.module, opts.depth, n.relation_ideal);
            P = std::make_unique<PairProfile>(*M, *N);
        }
        Instance in{&ctx, &ideal, M.get(), N.get(), P.get()};
        json reports = json::array();
        bool confirmed = true;
        const auto all_params = info.suite_params(opts.depth);
        for (const auto& pj : w["params"])
            for (const auto& p : all_params)
                if (params_json(info, p) == pj) {
                    const auto rep = evaluate(info, in, p);
                    confirmed = confirmed && rep.applicable;
                    reports.push_back(rep.to_json());
                }
        w["reports"] = reports;
        w["reverified"] = confirmed;
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace artin
