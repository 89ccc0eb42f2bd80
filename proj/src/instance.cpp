#include "artin/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

namespace artin {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw Error(path + ": " + what); }

const json& member(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
    return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected integer");
    return v.get<std::int64_t>();
}

const json& as_array(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected array");
    return v;
}

Exponent as_exponent(const json& v, std::size_t nvars, const std::string& path) {
    as_array(v, path);
    if (v.size() != nvars) fail(path, "expected " + std::to_string(nvars) + " exponents");
    Exponent e;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto a = as_int(v[k], path + "[" + std::to_string(k) + "]");
        if (a < 0) fail(path + "[" + std::to_string(k) + "]", "negative exponent");
        e.push_back(static_cast<int>(a));
    }
    return e;
}

Element as_polynomial(const MonomialAlgebra& R, const json& v, const std::string& path) {
    as_array(v, path);
    Polynomial poly;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto tp = path + "[" + std::to_string(k) + "]";
        if (!v[k].is_object()) fail(tp, "expected term object");
        Term t;
        t.coeff = as_int(member(v[k], "c", tp), tp + ".c");
        t.exponent = as_exponent(member(v[k], "e", tp), static_cast<std::size_t>(R.nvars()), tp + ".e");
        poly.push_back(std::move(t));
    }
    return R.from_polynomial(poly);
}

}  // namespace

const NamedModule& ParsedInstance::module(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw Error("no module named \"" + name + "\"");
    return it->second;
}

std::uint32_t default_prime() {
    if (const char* env = std::getenv("ARTIN_P")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || !is_prime(v) || v >= (1ull << 31))
            throw Error("ARTIN_P must be a prime below 2^31");
        return static_cast<std::uint32_t>(v);
    }
    return 101;
}

std::vector<std::string> default_vars(int nvars) {
    static const char* names[] = {"x", "y", "z", "w", "u", "v"};
    std::vector<std::string> out;
    for (int v = 0; v < nvars; ++v) out.push_back(v < 6 ? names[v] : "x" + std::to_string(v));
    return out;
}

ParsedInstance parse_instance(const json& doc) {
    if (!doc.is_object()) fail("$", "expected object");
    ParsedInstance out;
    if (doc.contains("p")) {
        const auto p = as_int(doc["p"], "$.p");
        if (p < 2 || p >= (1ll << 31) || !is_prime(static_cast<std::uint64_t>(p))) fail("$.p", "not a prime below 2^31");
        out.p = static_cast<std::uint32_t>(p);
    } else {
        out.p = default_prime();
    }
    const auto& vars = as_array(member(doc, "vars", "$"), "$.vars");
    if (vars.empty()) fail("$.vars", "expected at least one variable");
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (!vars[k].is_string()) fail("$.vars[" + std::to_string(k) + "]", "expected string");
        out.vars.push_back(vars[k].get<std::string>());
    }
    const auto nvars = out.vars.size();
    const auto& stair = as_array(member(doc, "staircase", "$"), "$.staircase");
    std::vector<Exponent> gens;
    for (std::size_t k = 0; k < stair.size(); ++k)
        gens.push_back(as_exponent(stair[k], nvars, "$.staircase[" + std::to_string(k) + "]"));
    out.ring = MonomialAlgebra::build(static_cast<int>(nvars), gens, PrimeField(out.p));
    const auto& R = *out.ring;

    const auto& ideal = as_array(member(doc, "ideal_I", "$"), "$.ideal_I");
    for (std::size_t k = 0; k < ideal.size(); ++k)
        out.ideal_gens.push_back(as_polynomial(R, ideal[k], "$.ideal_I[" + std::to_string(k) + "]"));
    out.I = ideal_span(R, out.ideal_gens);

    const auto& mods = member(doc, "modules", "$");
    if (!mods.is_object()) fail("$.modules", "expected object");
    for (const auto& [name, spec] : mods.items()) {
        const auto mp = "$.modules." + name;
        if (!spec.is_object()) fail(mp, "expected object");
        NamedModule nm;
        const auto g = as_int(member(spec, "gens", mp), mp + ".gens");
        if (g < 0) fail(mp + ".gens", "negative generator count");
        nm.gens = static_cast<std::size_t>(g);
        const auto& cols = as_array(member(spec, "relations", mp), mp + ".relations");
        std::vector<Element> entries;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto cp = mp + ".relations[" + std::to_string(c) + "]";
            as_array(cols[c], cp);
            if (cols[c].size() != nm.gens) fail(cp, "expected " + std::to_string(nm.gens) + " entries");
            std::vector<Element> col;
            for (std::size_t r = 0; r < cols[c].size(); ++r) {
                col.push_back(as_polynomial(R, cols[c][r], cp + "[" + std::to_string(r) + "]"));
                entries.push_back(col.back());
            }
            nm.relations.push_back(std::move(col));
        }
        nm.module = from_presentation(out.ring, nm.gens, nm.relations);
        nm.module.validate();
        nm.relation_ideal = ideal_span(R, entries);
        out.modules.emplace(name, std::move(nm));
    }
    return out;
}

ParsedInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(path + ": invalid JSON: " + e.what());
    }
    return parse_instance(doc);
}

json polynomial_json(const MonomialAlgebra& R, const Element& a) {
    json out = json::array();
    for (std::size_t b = 0; b < a.size(); ++b)
        if (a[b] != 0) out.push_back({{"c", a[b]}, {"e", R.basis()[b]}});
    return out;
}

json fingerprint_json(const MonomialAlgebra& R, const std::vector<Element>& ideal_gens,
                      const std::vector<std::pair<std::string, const NamedModule*>>& modules) {
    auto sorted = [](std::vector<json> v) {
        std::sort(v.begin(), v.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
        return json(v);
    };
    std::vector<json> ideal;
    for (const auto& g : ideal_gens) ideal.push_back(polynomial_json(R, g));
    json mods = json::object();
    for (const auto& [name, nm] : modules) {
        std::vector<json> cols;
        for (const auto& col : nm->relations) {
            json c = json::array();
            for (const auto& e : col) c.push_back(polynomial_json(R, e));
            cols.push_back(std::move(c));
        }
        mods[name] = {{"gens", nm->gens}, {"relations", sorted(std::move(cols))}};
    }
    return {{"p", R.field().prime()},
            {"vars", default_vars(R.nvars())},
            {"staircase", R.staircase()},
            {"ideal_I", sorted(std::move(ideal))},
            {"modules", mods}};
}

}  // namespace artin
