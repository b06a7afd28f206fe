#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "linrel/suites.hpp"

namespace linrel::cli {

using Json = nlohmann::ordered_json;

/// A parsed instance document: one field, named objects (plain or
/// symplectic), named relations and subspaces, plus chains, WW morphisms,
/// triples and isotropic pairs built from those names.
struct Instance {
    FieldSpec field = FieldSpec::rationals();
    std::map<std::string, VectorSpaceObj> objects;
    std::map<std::string, SymplecticSpace> symp_objects;
    std::map<std::string, LinearRelation> relations;
    std::map<std::string, SympRelation> symp_relations;
    std::map<std::string, Subspace> subspaces;
    std::map<std::string, std::vector<std::string>> chains;

    struct WWEntry {
        CategoryTag tag;
        std::string shadow;
        std::size_t defect, excess;
    };
    std::map<std::string, WWEntry> ww_morphisms;

    struct TripleEntry {
        std::size_t ambient_dim;
        std::string a, b, c;
    };
    std::map<std::string, TripleEntry> triples;

    struct IsoPairEntry {
        std::string space, a, b;
    };
    std::map<std::string, IsoPairEntry> isotropic_pairs;
};

Instance parse_instance_text(const std::string& text);
Instance parse_instance_file(const std::string& path);

/// Scalars render as strings over Q ("2", "-1/3") and as residues over GF(p).
Json scalar_to_json(const Scalar& s);
Json basis_to_json(const Matrix& basis);
Json subspace_to_json(const Subspace& s);

struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 validation, 2 parse, 3 suite failure
    Json report;
};

CommandResult cmd_compose(const Instance& inst, const std::string& chain_name,
                          std::uint64_t seed);
CommandResult cmd_ww(const Instance& inst, const std::string& chain_name, CategoryTag tag,
                     std::uint64_t seed);
/// `name` is a ww morphism, or a chain when a tag is supplied.
CommandResult cmd_ww_two_term(const Instance& inst, const std::string& name,
                              const std::optional<CategoryTag>& tag, std::uint64_t seed);
CommandResult cmd_check(const std::string& suite, const SuiteParams& params);
CommandResult cmd_decompose(const Instance& inst, const std::string& item, std::uint64_t seed);
CommandResult cmd_cotangent(const Instance& inst, const std::string& relation,
                            const std::string& second, std::uint64_t seed);
CommandResult cmd_invariants(const Instance& inst, const std::string& relation,
                             std::uint64_t seed);

}  // namespace linrel::cli
