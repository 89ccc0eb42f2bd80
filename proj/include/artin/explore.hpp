#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/enumerate.hpp"
#include "artin/verify.hpp"

namespace artin {

struct CorpusBounds {
    int max_vars = 2;
    int max_len = 8;
    int max_gens = 1;
    int max_rels = 0;
    IdealMode ideals = IdealMode::monomial;
};

struct SuiteOptions {
    CorpusBounds bounds;
    int depth = 5;
    std::uint32_t p = 101;
    /// Restrict to these statements; empty means all.
    std::vector<std::string> statements;
    /// Seeded sampling of pair instances; every instance when unset.
    std::optional<std::uint64_t> seed;
    std::size_t sample = 0;
};

struct StatementTally {
    std::size_t evaluated = 0;
    std::size_t applicable = 0;
    std::size_t counterexamples = 0;
    std::size_t internal_failures = 0;
    std::size_t skipped = 0;
};

struct SuiteSummary {
    std::size_t rings = 0, ideals = 0, modules = 0, pairs = 0, entries = 0;
    std::map<std::string, StatementTally> statements;

    /// No counterexample outside the flagged statements and no internal failure.
    bool clean() const;
    nlohmann::json to_json() const;
};

struct SuiteResult {
    SuiteSummary summary;
    std::string header;
    /// Catalog lines in canonical order, without the header.
    std::vector<std::string> catalog;
    /// Counterexamples and internal failures, with full reports.
    std::vector<std::string> findings;
};

SuiteResult run_suite(const SuiteOptions& opts);
/// Writes `<out>` (header plus catalog) and `<out>.findings.jsonl`.
SuiteSummary run_suite(const SuiteOptions& opts, const std::string& out_path);

/// Instances whose hypotheses all hold for the statement, each re-parsed from
/// its fingerprint and re-verified with a full report.
std::vector<nlohmann::json> search_witnesses(const SuiteOptions& opts, const std::string& statement);

}  // namespace artin
