// Command line front end: reads a problem document, runs the requested
// computation and prints a human-readable or machine-readable report.

#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "tcb/commands.hpp"

namespace {

std::pair<int, int> parse_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos) {
        throw tcb::schema_error("range must look like lo..hi");
    }
    try {
        int lo = std::stoi(text.substr(0, sep));
        int hi = std::stoi(text.substr(sep + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw tcb::schema_error("range must look like lo..hi");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree bounds and membership decisions for tight closure of homogeneous "
                 "primary ideals in two-dimensional hypersurface rings"};
    app.require_subcommand(1);

    std::string input_path;
    std::string element;
    std::string range_text;
    bool json = false;
    std::size_t max_pairs = 200000;
    int max_denominator_exp = 64;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* opt = cmd->add_option("--input", input_path, "problem document (JSON)");
        if (needs_input) opt->required();
        cmd->add_flag("--json", json, "print the machine-readable report");
        cmd->add_option("--max-pairs", max_pairs, "S-pair limit for Groebner runs");
        cmd->add_option("--max-denominator-exp", max_denominator_exp,
                        "search cap for chart denominators x^N, y^N");
    };

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the degree-bound formulas");
    add_common(bounds, true);
    CLI::App* syzygy = app.add_subcommand("syzygy", "relation module and splitting twists");
    add_common(syzygy, true);
    CLI::App* decide = app.add_subcommand("decide", "tight-closure membership of one element");
    add_common(decide, true);
    decide->add_option("--element", element, "candidate element (overrides the document)");
    CLI::App* sweep = app.add_subcommand("sweep", "decide every monomial in a degree range");
    add_common(sweep, true);
    sweep->add_option("--range", range_text, "degree range lo..hi (overrides the document)");
    CLI::App* cohomology = app.add_subcommand("cohomology", "h^0/h^1 tables for O_Y(k)");
    add_common(cohomology, true);
    cohomology->add_option("--range", range_text, "twist range lo..hi (default -10..10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // command line errors are input errors
    }

    try {
        tcb::CommandOptions options;
        options.json = json;
        options.max_pairs = max_pairs;
        options.max_denominator_exp = max_denominator_exp;
        if (!element.empty()) options.element = element;
        if (!range_text.empty()) options.range = parse_range(range_text);

        tcb::ProblemDocument doc = tcb::ProblemDocument::from_file(input_path);

        tcb::CommandResult result;
        if (bounds->parsed()) {
            result = tcb::cmd_bounds(doc, options);
        } else if (syzygy->parsed()) {
            result = tcb::cmd_syzygy(doc, options);
        } else if (decide->parsed()) {
            result = tcb::cmd_decide(doc, options);
        } else if (sweep->parsed()) {
            result = tcb::cmd_sweep(doc, options);
        } else {
            result = tcb::cmd_cohomology(doc, options);
        }
        std::cout << (json ? result.machine_json : result.human);
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return tcb::exit_code_for(e);
    }
}
