#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "artin/explore.hpp"
#include "artin/instance.hpp"

namespace artin::cli {

namespace {

using nlohmann::json;

/// Fixed-format two-column table.
class Table {
  public:
    explicit Table(std::ostream& out) : out_(out) {}
    void section(const std::string& title) { out_ << title << '\n'; }
    template <class T>
    void row(const std::string& key, const T& value) {
        std::ostringstream v;
        v << value;
        const auto width = std::count_if(key.begin(), key.end(), [](char c) { return (c & 0xC0) != 0x80; });
        out_ << "  " << key << std::string(width < 22 ? 22 - width : 0, ' ') << ' ' << v.str() << '\n';
    }

  private:
    std::ostream& out_;
};

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
    return s + "]";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Loaded {
    ParsedInstance in;
    RingContext ring;
    IdealContext ideal;

    Loaded(ParsedInstance parsed, int depth)
        : in(std::move(parsed)), ring(in.ring, depth), ideal(*in.ring, in.I) {}

    std::unique_ptr<ModuleProfile> profile(const std::string& name, int depth) const {
        const auto& m = in.module(name);
        return std::make_unique<ModuleProfile>(m.module, depth, m.relation_ideal);
    }
};

std::pair<int, int> parse_window(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw Error("window must look like lo..hi");
    try {
        std::size_t used = 0;
        const int lo = std::stoi(s.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(s);
        const auto rest = s.substr(dots + 2);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw Error("window must look like lo..hi");
    }
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int ring_info(const Loaded& L, bool as_json, std::ostream& out) {
    const auto& R = *L.in.ring;
    json basis = json::array();
    for (std::size_t b = 0; b < R.length(); ++b) basis.push_back(R.monomial_name(b, L.in.vars));
    const auto& inv = L.ideal.inv;
    json j = {{"p", L.in.p},
              {"length", R.length()},
              {"basis", basis},
              {"embedding_dim", L.ring.e()},
              {"loewy_length", L.ring.loewy()},
              {"socle_dim", L.ring.socle().dim()},
              {"len_m2", L.ring.m2().dim()},
              {"gorenstein", L.ring.gorenstein()},
              {"ideal", {{"length", L.ideal.I.length()},
                         {"s", inv.s},
                         {"h", inv.h},
                         {"c", inv.c},
                         {"m2I_zero", L.ideal.m2I_zero}}}};
    if (as_json) {
        print_json(out, j);
        return ok;
    }
    Table t(out);
    t.section("ring");
    t.row("p", L.in.p);
    t.row("lambda(R)", R.length());
    std::string names;
    for (const auto& b : basis) names += (names.empty() ? "" : " ") + b.get<std::string>();
    t.row("basis", names);
    t.row("e", L.ring.e());
    t.row("loewy length", L.ring.loewy());
    t.row("dim Soc(R)", L.ring.socle().dim());
    t.row("lambda(m^2)", L.ring.m2().dim());
    t.row("gorenstein", yes_no(L.ring.gorenstein()));
    t.section("ideal I");
    t.row("lambda(I)", L.ideal.I.length());
    t.row("s = lambda(R/I)", inv.s);
    t.row("h = b0(I)", inv.h);
    t.row("c = lambda(mI)", inv.c);
    t.row("m^2 I = 0", yes_no(L.ideal.m2I_zero));
    return ok;
}

json module_json(const Loaded& L, ModuleProfile& P) {
    json j = {{"length", P.length(0)},
              {"b0", P.betti(0)},
              {"I_free", P.I_free(0, L.ideal.I)},
              {"socle_dim", P.socle_dim(0)},
              {"free", P.is_free()}};
    if (!P.is_zero()) {
        j["gamma_I"] = to_string(P.gamma(0, L.ideal.I));
        j["gamma_m"] = to_string(P.gamma(0, L.ring.maximal()));
    } else {
        j["gamma_I"] = nullptr;
        j["gamma_m"] = nullptr;
    }
    return j;
}

std::vector<std::string> module_names(const Loaded& L, const std::vector<std::string>& wanted) {
    if (!wanted.empty()) return wanted;
    std::vector<std::string> all;
    for (const auto& [k, v] : L.in.modules) all.push_back(k);
    return all;
}

int module_info(const Loaded& L, const std::vector<std::string>& wanted, bool as_json, std::ostream& out) {
    json j = json::object();
    for (const auto& name : module_names(L, wanted)) {
        auto P = L.profile(name, 1);
        j[name] = module_json(L, *P);
    }
    if (as_json) {
        print_json(out, j);
        return ok;
    }
    Table t(out);
    for (const auto& [name, m] : j.items()) {
        t.section("module " + name);
        t.row("lambda", m["length"].get<std::size_t>());
        t.row("b0", m["b0"].get<std::size_t>());
        t.row("gamma_I", m["gamma_I"].is_null() ? "-" : m["gamma_I"].get<std::string>());
        t.row("gamma_m", m["gamma_m"].is_null() ? "-" : m["gamma_m"].get<std::string>());
        t.row("I-free", yes_no(m["I_free"]));
        t.row("free", yes_no(m["free"]));
        t.row("dim Soc", m["socle_dim"].get<std::size_t>());
    }
    return ok;
}

int resolve_cmd(const Loaded& L, const std::vector<std::string>& wanted, int depth, bool as_json,
                std::ostream& out) {
    if (depth < 0) throw Error("depth must be non-negative");
    const auto& R = *L.in.ring;
    json j = json::object();
    for (const auto& name : module_names(L, wanted)) {
        const auto res = minimal_resolution(L.in.module(name).module, depth);
        json diffs = json::array();
        for (int k = 1; k <= res.depth(); ++k) {
            json rows = json::array();
            for (std::size_t r = 0; r < res.betti[k - 1]; ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < res.betti[k]; ++c)
                    row.push_back(R.element_name(res.entry(R, k, r, c), L.in.vars));
                rows.push_back(row);
            }
            diffs.push_back(rows);
        }
        j[name] = {{"betti", res.betti}, {"differentials", diffs}};
    }
    if (as_json) {
        print_json(out, j);
        return ok;
    }
    Table t(out);
    for (const auto& [name, m] : j.items()) {
        t.section("resolution of " + name);
        t.row("betti", join(m["betti"].get<std::vector<std::size_t>>()));
        int k = 1;
        for (const auto& d : m["differentials"]) {
            std::string s;
            for (const auto& row : d) {
                std::string r;
                for (const auto& e : row) r += (r.empty() ? "" : " ") + e.get<std::string>();
                s += (s.empty() ? "(" : "; ") + r;
            }
            t.row("d" + std::to_string(k++), s.empty() ? "0" : s + ")");
        }
    }
    return ok;
}

int tor_cmd(const Loaded& L, const std::string& m, const std::string& n, int max_i, bool as_json,
            std::ostream& out) {
    if (max_i < 0) throw Error("max-i must be non-negative");
    auto M = L.profile(m, max_i + 1), N = L.profile(n, max_i + 1);
    PairProfile P(*M, *N);
    std::vector<std::size_t> lens;
    for (int i = 0; i <= max_i; ++i) lens.push_back(P.tor_length(i));
    if (as_json) {
        json j = json::array();
        for (int i = 0; i <= max_i; ++i) j.push_back({{"i", i}, {"length", lens[i]}, {"vanishes", lens[i] == 0}});
        print_json(out, {{"M", m}, {"N", n}, {"tor", j}});
        return ok;
    }
    Table t(out);
    t.section("lambda Tor_i(" + m + ", " + n + ")");
    for (int i = 0; i <= max_i; ++i) t.row("Tor_" + std::to_string(i), lens[i]);
    return ok;
}

struct VerifyOptions {
    std::string statement;
    bool probe = false;
    std::string window;
    std::optional<int> i, j;
    std::string m = "M", n = "N";
    int depth = 5;
};

int verify_cmd(Loaded& L, const VerifyOptions& o, bool as_json, std::ostream& out) {
    std::vector<const StatementInfo*> which;
    if (o.statement == "all") {
        for (const auto& s : statements()) which.push_back(&s);
    } else {
        which.push_back(&find_statement(o.statement));
    }
    std::unique_ptr<ModuleProfile> M, N;
    std::unique_ptr<PairProfile> P;
    if (L.in.modules.count(o.m)) M = L.profile(o.m, o.depth);
    if (L.in.modules.count(o.n)) N = L.profile(o.n, o.depth);
    if (M && N) P = std::make_unique<PairProfile>(*M, *N);
    Instance in{&L.ring, &L.ideal, M.get(), N.get(), P.get()};

    json reports = json::array();
    bool found = false;
    for (const auto* s : which) {
        if ((s->scope == Scope::module || s->scope == Scope::pair) && !M)
            throw Error("statement " + s->id + " needs module " + o.m);
        if (s->scope == Scope::pair && !N) throw Error("statement " + s->id + " needs module " + o.n);
        std::vector<Params> params;
        const bool explicit_params = o.i || o.j || !o.window.empty();
        if (explicit_params || o.statement != "all") {
            Params p;
            if (o.i) p.i = *o.i;
            if (o.j) p.j = *o.j;
            if (!o.window.empty()) std::tie(p.lo, p.hi) = parse_window(o.window);
            params.push_back(p);
        } else {
            params = s->suite_params(o.depth);
        }
        for (const auto& p : params) {
            const auto r = evaluate(*s, in, p, o.probe ? Mode::probe : Mode::check);
            found = found || r.counterexample();
            reports.push_back(r.to_json());
        }
    }
    if (as_json) {
        print_json(out, o.statement == "all" ? reports : reports[0]);
    } else {
        Table t(out);
        for (const auto& r : reports) {
            t.section(r["statement"].get<std::string>() + " " + r["params"].dump());
            for (const auto& h : r["hypotheses"])
                t.row(h["name"].get<std::string>(), h["holds"].get<bool>() ? "holds" : "fails");
            t.row("applicable", yes_no(r["applicable"]));
            t.row("conclusion", r["conclusion"].is_null() ? "-" : (r["conclusion"].get<bool>() ? "true" : "false"));
            for (const auto& h : r["internal_checks"])
                t.row("check: " + h["name"].get<std::string>(), h["holds"].get<bool>() ? "ok" : "FAILED");
            for (const auto& [k, v] : r["data"].items()) t.row(k, v.is_string() ? v.get<std::string>() : v.dump());
            if (r["counterexample"].get<bool>()) t.row("verdict", "COUNTEREXAMPLE");
        }
    }
    return found ? counterexample : ok;
}

struct ExploreOptions {
    CorpusBounds bounds;
    std::string ideals = "monomial";
    int depth = 5;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::size_t sample = 1000;
    std::vector<std::string> statements;
};

SuiteOptions suite_options(const ExploreOptions& e, std::uint32_t p) {
    SuiteOptions o;
    o.bounds = e.bounds;
    if (e.ideals == "monomial")
        o.bounds.ideals = IdealMode::monomial;
    else if (e.ideals == "m2I-zero")
        o.bounds.ideals = IdealMode::m2I_zero;
    else
        throw Error("ideals must be monomial or m2I-zero");
    o.depth = e.depth;
    o.p = p;
    o.statements = e.statements;
    o.seed = e.seed;
    o.sample = e.sample;
    if (o.depth < 2) throw Error("depth must be at least 2");
    return o;
}

int explore_cmd(const ExploreOptions& e, std::uint32_t p, bool as_json, std::ostream& out) {
    const auto opts = suite_options(e, p);
    const auto s = run_suite(opts, e.out);
    if (as_json) {
        print_json(out, s.to_json());
    } else {
        Table t(out);
        t.section("explore");
        t.row("rings", s.rings);
        t.row("ideals", s.ideals);
        t.row("modules", s.modules);
        t.row("pairs", s.pairs);
        t.row("catalog entries", s.entries);
        t.row("catalog", e.out);
        t.section("statement               applicable  counterexamples  flagged");
        for (const auto& [id, tally] : s.statements) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "  %-22s %10zu  %15zu  %s\n", id.c_str(), tally.applicable,
                          tally.counterexamples, find_statement(id).flagged ? "yes" : "no");
            out << buf;
        }
        t.row("clean", yes_no(s.clean()));
    }
    return s.clean() ? ok : counterexample;
}

int witnesses_cmd(const ExploreOptions& e, const std::string& statement, std::uint32_t p, bool as_json,
                  std::ostream& out) {
    const auto found = search_witnesses(suite_options(e, p), statement);
    if (as_json) {
        print_json(out, found);
        return ok;
    }
    Table t(out);
    t.section("witnesses for " + statement);
    t.row("count", found.size());
    for (const auto& w : found)
        t.row(w["reverified"].get<bool>() ? "reverified" : "NOT reverified", w["entry"]["fingerprint"].dump());
    return ok;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants, resolutions and Tor over Artinian monomial algebras", "artin"};
    app.require_subcommand(1);
    bool as_json = false;
    std::optional<std::uint32_t> prime;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--p", prime, "characteristic (default $ARTIN_P or 101)");

    std::string file;
    std::vector<std::string> modules;
    int depth = 3, max_i = 3;
    VerifyOptions vo;
    ExploreOptions eo;
    std::string witness_statement;

    auto* ring = app.add_subcommand("ring-info", "ring and ideal invariants");
    ring->add_option("file", file)->required();
    auto* mod = app.add_subcommand("module-info", "lambda, b0, gamma, I-freeness and socle of modules");
    mod->add_option("file", file)->required();
    mod->add_option("--module", modules, "module names (default: all)");
    auto* res = app.add_subcommand("resolve", "minimal free resolution");
    res->add_option("file", file)->required();
    res->add_option("--module", modules, "module names (default: all)");
    res->add_option("--depth", depth, "number of differentials");
    auto* tor = app.add_subcommand("tor", "lengths of Tor_i(M, N)");
    tor->add_option("file", file)->required();
    tor->add_option("--max-i", max_i);
    tor->add_option("--M", vo.m);
    tor->add_option("--N", vo.n);
    auto* ver = app.add_subcommand("verify", "evaluate a statement on an instance");
    ver->add_option("file", file)->required();
    ver->add_option("--statement", vo.statement, "statement id or all")->required();
    ver->add_flag("--probe", vo.probe, "evaluate conclusions even when hypotheses fail");
    ver->add_option("--window", vo.window, "index window lo..hi");
    ver->add_option("--i", vo.i);
    ver->add_option("--j", vo.j);
    ver->add_option("--M", vo.m);
    ver->add_option("--N", vo.n);
    ver->add_option("--depth", vo.depth, "resolution depth");
    auto add_bounds = [&](CLI::App* c) {
        c->add_option("--max-vars", eo.bounds.max_vars);
        c->add_option("--max-len", eo.bounds.max_len);
        c->add_option("--max-gens", eo.bounds.max_gens);
        c->add_option("--max-rels", eo.bounds.max_rels);
        c->add_option("--ideals", eo.ideals, "monomial or m2I-zero");
        c->add_option("--depth", eo.depth, "resolution depth");
        c->add_option("--seed", eo.seed, "sample pair instances with this seed");
        c->add_option("--sample", eo.sample, "number of sampled pair instances");
    };
    auto* exp = app.add_subcommand("explore", "enumerate the corpus and run every statement");
    add_bounds(exp);
    exp->add_option("--out", eo.out, "catalog path")->required();
    exp->add_option("--statement", eo.statements, "restrict to these statements");
    auto* wit = app.add_subcommand("witnesses", "corpus instances satisfying a statement's hypotheses");
    add_bounds(wit);
    wit->add_option("--statement", witness_statement)->required();
    auto* can = app.add_subcommand("canonical", "canonical form of an instance file");
    can->add_option("file", file)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << '\n';
        return error;
    }

    try {
        const std::uint32_t p = prime.value_or(default_prime());
        auto load = [&](int d) {
            if (!prime) return std::make_unique<Loaded>(parse_instance_file(file), d);
            std::ifstream f(file);
            if (!f) throw Error("cannot open " + file);
            auto doc = nlohmann::json::parse(f, nullptr, false);
            if (doc.is_discarded()) throw Error(file + ": not valid JSON");
            doc["p"] = *prime;
            return std::make_unique<Loaded>(parse_instance(doc), d);
        };
        if (*ring) return ring_info(*load(1), as_json, out);
        if (*mod) return module_info(*load(1), modules, as_json, out);
        if (*res) return resolve_cmd(*load(1), modules, depth, as_json, out);
        if (*tor) return tor_cmd(*load(1), vo.m, vo.n, max_i, as_json, out);
        if (*ver) {
            auto L = load(vo.depth);
            return verify_cmd(*L, vo, as_json, out);
        }
        if (*exp) return explore_cmd(eo, p, as_json, out);
        if (*wit) return witnesses_cmd(eo, witness_statement, p, as_json, out);
        if (*can) {
            const auto L = load(1);
            std::vector<std::pair<std::string, const NamedModule*>> mods;
            for (const auto& [name, m] : L->in.modules) mods.emplace_back(name, &m);
            auto fp = fingerprint_json(*L->in.ring, L->in.ideal_gens, mods);
            fp["vars"] = L->in.vars;
            out << fp.dump() << '\n';
            return ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return error;
    }
    return error;
}

}  // namespace artin::cli
