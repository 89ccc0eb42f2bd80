#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/module.hpp"
#include "json.hpp"

namespace artin {

/// A module read from an instance file, with the presentation kept.
struct NamedModule {
    std::size_t gens = 0;
    std::vector<std::vector<Element>> relations;
    ModuleRep module;
    /// Ideal generated by all presentation entries.
    IdealRep relation_ideal;
};

struct ParsedInstance {
    std::uint32_t p = 101;
    std::vector<std::string> vars;
    RingPtr ring;
    std::vector<Element> ideal_gens;
    IdealRep I;
    std::map<std::string, NamedModule> modules;

    const NamedModule& module(const std::string& name) const;
};

/// Default characteristic: $ARTIN_P if set, else 101.
std::uint32_t default_prime();

/// Validates against the instance schema; errors name the offending JSON path.
ParsedInstance parse_instance(const nlohmann::json& doc);
ParsedInstance parse_instance_file(const std::string& path);

/// Terms {"c", "e"} for the nonzero coefficients, in basis order.
nlohmann::json polynomial_json(const MonomialAlgebra& R, const Element& a);

/// Instance-schema document for the given objects. Ideal generators and relation
/// columns are sorted by their serialized form, so the result is canonical for
/// a fixed presentation.
nlohmann::json fingerprint_json(const MonomialAlgebra& R, const std::vector<Element>& ideal_gens,
                                const std::vector<std::pair<std::string, const NamedModule*>>& modules);

/// Default variable names x, y, z.
std::vector<std::string> default_vars(int nvars);

}  // namespace artin
