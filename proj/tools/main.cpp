#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "linrel/instance.hpp"

namespace {

using linrel::cli::CommandResult;

void emit(const CommandResult& result, const std::string& output_path) {
    const std::string text = result.report.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path);
        if (!out) throw linrel::ValidationError("cannot write output file '" + output_path + "'");
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear relations, their symplectic variants, and the "
                 "Wehrheim-Woodward central extension"};
    app.require_subcommand(1);

    std::string input_path, output_path, chain_name, item_name, relation_name, second_name;
    std::string tag_text = "lrel", suite_name, field_text = "gf:7";
    std::uint64_t seed = 0;
    std::size_t cases = 100, max_dim = 4;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("--input", input_path, "instance file")->required();
        cmd->add_option("--seed", seed, "seed echoed in the report");
        cmd->add_option("--output", output_path, "write the report here instead of stdout");
    };

    CLI::App* compose = app.add_subcommand("compose", "compose a chain and report its indices");
    add_io(compose, true);
    compose->add_option("--chain", chain_name, "chain name")->required();

    CLI::App* ww = app.add_subcommand("ww", "fold a chain into a WW morphism");
    add_io(ww, true);
    ww->add_option("--chain", chain_name, "chain name")->required();
    ww->add_option("--tag", tag_text, "category: lrel, slrel, ilrel, clrel");

    CLI::App* two_term = app.add_subcommand("ww-two-term", "two-term representation of a WW morphism");
    add_io(two_term, true);
    two_term->add_option("--ww", item_name, "ww morphism name (or use --chain)");
    two_term->add_option("--chain", chain_name, "chain name (embedded with --tag)");
    two_term->add_option("--tag", tag_text, "category tag for --chain");

    CLI::App* check = app.add_subcommand("check", "run a seeded invariant suite");
    check->add_option("--suite", suite_name, "suite name")->required();
    check->add_option("--seed", seed, "master seed");
    check->add_option("--cases", cases, "number of cases");
    check->add_option("--field", field_text, "q or gf:P");
    check->add_option("--max-dim", max_dim, "object dimension bound");
    check->add_option("--output", output_path, "write the report here instead of stdout");

    CLI::App* decompose = app.add_subcommand("decompose", "elementary-type multiplicities");
    add_io(decompose, true);
    decompose->add_option("--item", item_name, "triple or isotropic pair name")->required();

    CLI::App* cotangent = app.add_subcommand("cotangent", "apply the cotangent functor");
    add_io(cotangent, true);
    cotangent->add_option("--relation", relation_name, "relation name")->required();
    cotangent->add_option("--second", second_name, "optional second relation for the pair law");

    CLI::App* invariants = app.add_subcommand("invariants", "isomorphism invariants of a relation");
    add_io(invariants, true);
    invariants->add_option("--relation", relation_name, "relation name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        CommandResult result;
        if (check->parsed()) {
            linrel::SuiteParams params{seed, cases, linrel::FieldSpec::parse(field_text), max_dim};
            result = linrel::cli::cmd_check(suite_name, params);
        } else {
            linrel::cli::Instance inst = linrel::cli::parse_instance_file(input_path);
            if (compose->parsed()) {
                result = linrel::cli::cmd_compose(inst, chain_name, seed);
            } else if (ww->parsed()) {
                result = linrel::cli::cmd_ww(inst, chain_name, linrel::parse_tag(tag_text), seed);
            } else if (two_term->parsed()) {
                std::optional<linrel::CategoryTag> tag;
                std::string name = item_name;
                if (name.empty()) {
                    name = chain_name;
                    tag = linrel::parse_tag(tag_text);
                }
                if (name.empty()) {
                    throw linrel::ValidationError("ww-two-term needs --ww or --chain");
                }
                result = linrel::cli::cmd_ww_two_term(inst, name, tag, seed);
            } else if (decompose->parsed()) {
                result = linrel::cli::cmd_decompose(inst, item_name, seed);
            } else if (cotangent->parsed()) {
                result = linrel::cli::cmd_cotangent(inst, relation_name, second_name, seed);
            } else if (invariants->parsed()) {
                result = linrel::cli::cmd_invariants(inst, relation_name, seed);
            }
        }
        emit(result, output_path);
        return result.exit_code;
    } catch (const linrel::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const linrel::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
