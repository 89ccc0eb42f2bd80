#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string golden = ARTIN_SOURCE_DIR "/example_paper.json";

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int s = artin::cli::dispatch(args, out, err);
    return {s, out.str(), err.str()};
}

fs::path scratch_dir() {
    auto d = fs::temp_directory_path() / ("artin_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("verify on the golden file") {
    const auto r = run({"verify", golden, "--statement", "bettiandgamma.1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("applicable             yes") != std::string::npos);
    CHECK(r.out.find("conclusion             true") != std::string::npos);
    const auto j = run({"--json", "verify", golden, "--statement", "bettiandgamma.1"});
    CHECK(j.status == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["applicable"] == true);
    CHECK(doc["conclusion"] == true);
    CHECK(doc["data"]["ratio"] == "1/1");
    CHECK(run({"--json", "verify", golden, "--statement", "bettiandgamma.1"}).out == j.out);
    CHECK(doc.dump(2) + "\n" == j.out);
}

TEST_CASE("tor and resolve on the golden file") {
    const auto t = run({"--json", "tor", golden, "--max-i", "1"});
    CHECK(t.status == 0);
    const auto doc = nlohmann::json::parse(t.out);
    CHECK(doc["tor"][1]["length"] == 0);
    CHECK(doc["tor"][1]["vanishes"] == true);
    CHECK(doc["tor"][0]["length"] == 2);

    const auto r = run({"--json", "resolve", golden, "--module", "N", "--depth", "2"});
    const auto res = nlohmann::json::parse(r.out)["N"];
    CHECK(res["betti"] == nlohmann::json({1, 1, 2}));
    CHECK(res["differentials"][0] == nlohmann::json({{"x"}}));
    CHECK(res["differentials"][1] == nlohmann::json::array({nlohmann::json::array({"x", "y^2"})}));
}

TEST_CASE("module-info and ring-info") {
    const auto m = nlohmann::json::parse(run({"--json", "module-info", golden}).out);
    CHECK(m["M"]["gamma_I"] == "1/1");
    CHECK(m["M"]["gamma_m"] == "3/1");
    CHECK(m["M"]["I_free"] == true);
    CHECK(m["N"]["I_free"] == true);
    CHECK(m["M"]["length"] == 4);
    const auto r = nlohmann::json::parse(run({"--json", "ring-info", golden}).out);
    CHECK(r["length"] == 5);
    CHECK(r["basis"] == nlohmann::json({"1", "x", "y", "x*y", "y^2"}));
    for (const char* p : {"2", "3"}) {
        auto other = nlohmann::json::parse(run({"--json", "--p", p, "ring-info", golden}).out);
        CHECK(other["p"] == std::stoi(p));
        other["p"] = 101;
        CHECK(other == r);
    }
}

TEST_CASE("characteristic from the environment") {
    const auto d = scratch_dir();
    auto doc = nlohmann::json::parse(slurp(golden));
    doc.erase("p");
    std::ofstream(d / "nop.json") << doc.dump();
    ::setenv("ARTIN_P", "3", 1);
    const auto r = nlohmann::json::parse(run({"--json", "ring-info", (d / "nop.json").string()}).out);
    ::unsetenv("ARTIN_P");
    CHECK(r["p"] == 3);
    fs::remove_all(d);
}

TEST_CASE("exit statuses") {
    CHECK(run({"verify", golden, "--statement", "no-such"}).status == 1);
    CHECK(run({"verify", golden, "--statement", "no-such"}).err == "error: unknown statement: no-such\n");
    CHECK(run({"frobnicate"}).status == 1);
    CHECK(run({"ring-info", "/nonexistent.json"}).status == 1);
    CHECK(run({"--help"}).status == 0);

    const auto d = scratch_dir();
    auto doc = nlohmann::json::parse(slurp(golden));
    doc["modules"]["M"]["gens"] = 2;
    std::ofstream(d / "bad.json") << doc.dump();
    const auto bad = run({"module-info", (d / "bad.json").string()});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("$.modules.M.relations[0]") != std::string::npos);

    // gammaandTor.cor fails here with i = 1, j = 2
    const nlohmann::json cx = {
        {"p", 101},
        {"vars", {"x", "y"}},
        {"staircase", {{2, 0}, {1, 1}, {0, 2}}},
        {"ideal_I", {{{{"c", 1}, {"e", {1, 0}}}}, {{{"c", 1}, {"e", {0, 1}}}}}},
        {"modules",
         {{"M", {{"gens", 1}, {"relations", {{{{{"c", 1}, {"e", {0, 1}}}}}}}}},
          {"N", {{"gens", 1}, {"relations", {{{{{"c", 1}, {"e", {1, 0}}}}}}}}}}}};
    std::ofstream(d / "cx.json") << cx.dump();
    const auto r = run({"verify", (d / "cx.json").string(), "--statement", "gammaandTor.cor", "--i", "1", "--j", "2"});
    CHECK(r.status == 2);
    CHECK(r.out.find("COUNTEREXAMPLE") != std::string::npos);
    CHECK(run({"verify", (d / "cx.json").string(), "--statement", "gammaandTor.cor", "--i", "1", "--j", "2",
               "--probe"})
              .status == 2);
    CHECK(run({"verify", golden, "--statement", "prop2", "--window", "3..x"}).status == 1);
    fs::remove_all(d);
}

TEST_CASE("canonical form is stable") {
    const auto d = scratch_dir();
    const auto a = run({"canonical", golden});
    CHECK(a.status == 0);
    std::ofstream(d / "canon.json") << a.out;
    CHECK(run({"canonical", (d / "canon.json").string()}).out == a.out);
    fs::remove_all(d);
}

TEST_CASE("explore is byte-reproducible") {
    const auto d = scratch_dir();
    const auto one = (d / "one.jsonl").string(), two = (d / "two.jsonl").string();
    const auto a = run({"--json", "explore", "--max-vars", "2", "--max-len", "5", "--depth", "5", "--out", one});
    const auto b = run({"--json", "explore", "--max-vars", "2", "--max-len", "5", "--depth", "5", "--out", two});
    CHECK(a.out == b.out);
    CHECK(a.status == 2);
    CHECK(nlohmann::json::parse(a.out)["clean"] == false);
    CHECK(slurp(one) == slurp(two));
    CHECK(slurp(one + ".findings.jsonl") == slurp(two + ".findings.jsonl"));
    CHECK_FALSE(slurp(one).empty());
    const auto header = nlohmann::json::parse(slurp(one).substr(0, slurp(one).find('\n')));
    CHECK(header["bounds"]["max_len"] == 5);
    CHECK(run({"explore", "--max-vars", "4", "--out", one}).status == 1);

    const auto w = run({"--json", "witnesses", "--max-len", "5", "--statement", "bettiandgamma.1"});
    CHECK(w.status == 0);
    CHECK_FALSE(nlohmann::json::parse(w.out).empty());
    fs::remove_all(d);
}
