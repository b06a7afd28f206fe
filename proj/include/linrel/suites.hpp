#pragma once

#include <string>

#include "linrel/randomgen.hpp"

namespace linrel {

struct SuiteParams {
    std::uint64_t seed = 1;
    std::size_t cases = 100;
    FieldSpec field = FieldSpec::prime_field(7);
    std::size_t max_dim = 4;
};

struct CaseFailure {
    std::size_t index;
    std::uint64_t case_seed;  // rerun with --seed <case_seed> --cases 1 to reproduce
    std::string message;
};

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t passes = 0;
    std::vector<CaseFailure> failures;
    bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Runs a named invariant suite: duality, additivity, duality-exchange,
/// inequality, ww-assoc, two-term, tables, oracle-gf2, cotangent, iso-coiso.
/// Each case is generated from its own seed drawn off the master seed.
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

/// All parenthesized pairwise accumulations of a chain: every binary tree
/// over the links, accumulating pair excess/defect at each node. Used by the
/// additivity suite and the acceptance harness.
struct ParenthesizedIndices {
    std::size_t excess, defect;
};
std::vector<ParenthesizedIndices> all_parenthesizations(const RelationChain& chain);

}  // namespace linrel
