#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

#include "artin/explore.hpp"
#include "artin/instance.hpp"

using namespace artin;

namespace {

using Key = std::vector<std::pair<int, int>>;

Key canonical(std::vector<std::pair<int, int>> cells) {
    std::sort(cells.begin(), cells.end());
    auto swapped = cells;
    for (auto& [a, b] : swapped) std::swap(a, b);
    std::sort(swapped.begin(), swapped.end());
    return std::min(cells, swapped);
}

std::vector<std::pair<int, int>> one_var(int len) {
    std::vector<std::pair<int, int>> c;
    for (int a = 0; a < len; ++a) c.emplace_back(a, 0);
    return c;
}

/// Rings in at most two variables with λ ≤ max_len, listed by nested loops
/// over column heights h_0 ≥ h_1 ≥ … of the standard-monomial diagram.
std::set<Key> naive_rings(int max_len) {
    std::set<Key> out;
    for (int len = 1; len <= max_len; ++len) out.insert(one_var(len));
    std::vector<int> h(max_len + 1, 0);
    for (h[0] = 1; h[0] <= max_len; ++h[0])
        for (h[1] = 1; h[1] <= h[0] && h[0] + h[1] <= max_len; ++h[1])
            for (h[2] = 0; h[2] <= h[1] && h[0] + h[1] + h[2] <= max_len; ++h[2])
                for (h[3] = 0; h[3] <= h[2] && h[0] + h[1] + h[2] + h[3] <= max_len; ++h[3])
                    for (h[4] = 0; h[4] <= h[3] && h[0] + h[1] + h[2] + h[3] + h[4] <= max_len; ++h[4])
                        for (h[5] = 0; h[5] <= h[4] && h[0] + h[1] + h[2] + h[3] + h[4] + h[5] <= max_len; ++h[5]) {
                            if (h[0] < 2) continue;  // y must survive
                            if (max_len > 6) FAIL("naive enumerator only covers λ ≤ 6");
                            Key cells;
                            for (int a = 0; a < 6; ++a)
                                for (int b = 0; b < h[a]; ++b) cells.emplace_back(a, b);
                            out.insert(canonical(cells));
                        }
    return out;
}

Key ring_key(const MonomialAlgebra& R) {
    Key cells;
    for (const auto& e : R.basis()) cells.emplace_back(e[0], R.nvars() > 1 ? e[1] : 0);
    if (R.nvars() == 1) return one_var(static_cast<int>(R.length()));
    return canonical(cells);
}

}  // namespace

TEST_CASE("chain rings") {
    const auto rings = enumerate_rings(1, 4);
    REQUIRE(rings.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(rings[k]->nvars() == 1);
        CHECK(rings[k]->length() == k + 1);
    }
}

TEST_CASE("golden ring appears once its length is allowed") {
    const auto golden = ring_key(*fixtures::golden_ring());
    auto contains = [&](int len) {
        int hits = 0;
        for (const auto& R : enumerate_rings(2, len))
            if (R->nvars() == 2 && ring_key(*R) == golden) ++hits;
        return hits;
    };
    CHECK(contains(5) == 1);
    CHECK(contains(8) == 1);
    CHECK(contains(3) == 0);
}

TEST_CASE("ring enumeration matches nested loops") {
    for (int len = 1; len <= 6; ++len) {
        std::set<Key> got;
        std::size_t count = 0;
        for (const auto& R : enumerate_rings(2, len)) {
            ++count;
            CHECK(got.insert(ring_key(*R)).second);
        }
        const auto want = naive_rings(len);
        CHECK(got == want);
        CHECK(count == want.size());
    }
    CHECK_THROWS(enumerate_rings(4, 5));
    CHECK_THROWS(enumerate_rings(2, 13));
    CHECK(enumerate_rings(2, 0).empty());
}

TEST_CASE("ideals of the golden ring") {
    auto R = fixtures::golden_ring();
    const auto ideals = enumerate_ideals(R);
    CHECK(ideals.size() == 8);
    std::set<std::string> keys;
    for (const auto& I : ideals) {
        CHECK(I.length() < R->length());
        CHECK(keys.insert(I.key).second);
    }
    CHECK(ideals.front().is_zero());
    CHECK(keys.count(fixtures::golden_I(*R).key));
    CHECK(keys.count(maximal_ideal_rep(*R).key));
    for (const auto& I : enumerate_ideals(R, IdealMode::m2I_zero)) {
        const IdealContext ctx(*R, I);
        CHECK(ctx.m2I_zero);
    }
}

TEST_CASE("modules of the golden ring") {
    auto R = fixtures::golden_ring();
    const auto mods = enumerate_modules(R, 1, 1);
    CHECK(mods.size() == 8);
    bool free = false, y2 = false, x = false;
    for (const auto& m : mods) {
        CHECK(m.module.dim() > 0);
        free = free || m.relations.empty();
        if (m.relations.size() == 1) {
            y2 = y2 || m.relations[0][0] == fixtures::mono(*R, 0, 2);
            x = x || m.relations[0][0] == fixtures::mono(*R, 1, 0);
        }
    }
    CHECK(free);
    CHECK(y2);
    CHECK(x);
    CHECK(enumerate_modules(R, 2, 1).size() > mods.size());
}

TEST_CASE("suite on small bounds") {
    SuiteOptions opts;
    opts.bounds.max_len = 5;
    const auto a = run_suite(opts);
    const auto b = run_suite(opts);
    CHECK(a.header == b.header);
    CHECK(a.catalog == b.catalog);
    CHECK(a.findings == b.findings);
    CHECK(a.summary.entries == a.catalog.size());
    CHECK(a.summary.statements.at("bettiandgamma.1").applicable >= 1);
    CHECK(std::is_sorted(a.catalog.begin(), a.catalog.end(), [](const std::string& x, const std::string& y) {
        const auto jx = nlohmann::json::parse(x), jy = nlohmann::json::parse(y);
        return std::pair(jx["fingerprint"].dump(), jx["scope"].get<std::string>()) <
               std::pair(jy["fingerprint"].dump(), jy["scope"].get<std::string>());
    }));
    const auto header = nlohmann::json::parse(a.header);
    CHECK(header["seed"].is_null());
    CHECK(header["depth"] == 5);

    const auto golden = parse_instance_file(ARTIN_SOURCE_DIR "/example_paper.json");
    const auto fp = fingerprint_json(*golden.ring, golden.ideal_gens,
                                     {{"M", &golden.module("M")}, {"N", &golden.module("N")}});
    bool seen = false;
    for (const auto& line : a.catalog) {
        const auto j = nlohmann::json::parse(line);
        if (j["fingerprint"] == fp) {
            seen = true;
            CHECK(j["verdicts"]["bettiandgamma.1"].get<std::string>().front() == 'T');
            CHECK(j["betti"]["N"][2] == 2);
            CHECK(j["tor"][0] == 0);
        }
    }
    CHECK(seen);
}

TEST_CASE("empty bounds give an empty catalog") {
    SuiteOptions opts;
    opts.bounds.max_len = 0;
    const auto r = run_suite(opts);
    CHECK(r.catalog.empty());
    CHECK(r.summary.entries == 0);
    CHECK(r.summary.statements.at("bettiandgamma.1").evaluated == 0);
}

TEST_CASE("seeded sampling") {
    SuiteOptions opts;
    opts.bounds.max_len = 5;
    opts.seed = 11;
    opts.sample = 40;
    const auto a = run_suite(opts), b = run_suite(opts);
    CHECK(a.catalog == b.catalog);
    CHECK(a.summary.pairs == 40);
    CHECK(nlohmann::json::parse(a.header)["seed"] == 11);
    opts.seed = 12;
    CHECK(run_suite(opts).catalog != a.catalog);
}

TEST_CASE("witness search") {
    SuiteOptions opts;
    opts.bounds.max_len = 5;
    const auto found = search_witnesses(opts, "bettiandgamma.1");
    REQUIRE_FALSE(found.empty());
    std::set<std::string> fps;
    for (const auto& w : found) {
        CHECK(w["reverified"] == true);
        CHECK(fps.insert(w["entry"]["fingerprint"].dump()).second);
    }
    const auto golden = parse_instance_file(ARTIN_SOURCE_DIR "/example_paper.json");
    const auto fp = fingerprint_json(*golden.ring, golden.ideal_gens,
                                     {{"M", &golden.module("M")}, {"N", &golden.module("N")}});
    CHECK(fps.count(fp.dump()));
    CHECK_THROWS_WITH(search_witnesses(opts, "no-such"), "unknown statement: no-such");
    CHECK(search_witnesses(opts, "cor34").empty());
}
