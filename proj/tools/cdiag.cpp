#include <cdiag/catdef.hpp>
#include <cdiag/commands.hpp>
#include <cdiag/errors.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace cdiag;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct Input
{
    std::string builtin;
    std::string file;
};

auto load(const Input & input) -> std::pair<FiniteCategory, std::string>
{
    if (input.builtin.empty() == input.file.empty())
        throw InvalidArgument("exactly one of --builtin and --file is required");
    if (! input.builtin.empty())
        return {builtin_category(input.builtin), input.builtin};
    std::ifstream in(input.file);
    if (! in)
        throw InvalidArgument("cannot read " + input.file);
    std::stringstream text;
    text << in.rdbuf();
    try {
        return {validate_category(parse_catdef(text.str())), input.file};
    }
    catch (const Error & e) {
        throw InvalidArgument(input.file + ": " + e.what());
    }
}

auto add_input(CLI::App * cmd, Input & input) -> void
{
    cmd->add_option("--builtin", input.builtin, "builtin category selector");
    cmd->add_option("--file", input.file, "CATDEF file");
}

}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Levels of the classifying diagram of a finite category"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output;
    std::optional<std::size_t> chain_limit, scan_limit, table_limit, iso_limit;
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output, "write the report to this path");
    app.add_option("--chain-limit", chain_limit)->check(CLI::PositiveNumber);
    app.add_option("--scan-limit", scan_limit)->check(CLI::PositiveNumber);
    app.add_option("--table-limit", table_limit)->check(CLI::PositiveNumber);
    app.add_option("--iso-limit", iso_limit)->check(CLI::PositiveNumber);

    Input input;
    int level = 1, to_level = -1, truncation = 3, max_n = 3, max_dim = 2, q = 2;
    std::string variant = "all", target;
    bool oracle = false;

    auto decompose = app.add_subcommand("decompose", "components and stabilizers of levels of N(C)");
    add_input(decompose, input);
    decompose->add_option("--level", level, "first level")->check(CLI::NonNegativeNumber);
    decompose->add_option("--to", to_level, "last level (defaults to --level)");

    auto segal = app.add_subcommand("segal", "Segal map bijection");
    add_input(segal, input);
    segal->add_option("--level", level, "first level (>= 2)");
    segal->add_option("--to", to_level, "last level");

    auto complete = app.add_subcommand("complete", "iso(C) against iso(C^I[1])");
    add_input(complete, input);

    auto discrete = app.add_subcommand("discrete", "discreteness of N(C)");
    add_input(discrete, input);
    discrete->add_option("--truncation", truncation)->check(CLI::PositiveNumber);

    auto nerve = app.add_subcommand("nerve", "truncated nerve of a groupoid");
    add_input(nerve, input);
    nerve->add_option("--truncation", truncation)->check(CLI::NonNegativeNumber);

    auto finset = app.add_subcommand("finset", "closed-form decomposition for finite sets");
    finset->add_option("--max", max_n)->check(CLI::NonNegativeNumber);
    finset->add_option("--variant", variant)->check(CLI::IsMember({"all", "inj", "surj"}));
    finset->add_flag("--oracle", oracle, "compare with brute-force orbits");

    auto finvect = app.add_subcommand("finvect", "rank orbits for vector spaces over F_q");
    finvect->add_option("--max-dim", max_dim)->check(CLI::NonNegativeNumber);
    finvect->add_option("--q", q);
    finvect->add_flag("--oracle", oracle, "compare with brute-force orbits");

    auto diff = app.add_subcommand("oracle-diff", "closed forms against brute force");
    diff->add_option("target", target, "finset or vect")->required()->check(CLI::IsMember({"finset", "vect"}));
    diff->add_option("--max", max_n, "cardinality bound (finset)");
    diff->add_option("--max-dim", max_dim, "dimension bound (vect)");
    diff->add_option("--variant", variant)->check(CLI::IsMember({"all", "inj", "surj"}));
    diff->add_option("--q", q);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Limits limits;
        if (const char * env = std::getenv("CDIAG_LIMITS"))
            apply_limit_overrides(limits, env);
        if (chain_limit)
            limits.chain_limit = *chain_limit;
        if (scan_limit)
            limits.scan_limit = *scan_limit;
        if (table_limit)
            limits.table_limit = *table_limit;
        if (iso_limit)
            limits.iso_limit = *iso_limit;
        if (to_level < 0)
            to_level = level;

        Report report;
        if (decompose->parsed()) {
            auto [cat, source] = load(input);
            report = decompose_report(cat, source, level, to_level, limits);
        }
        else if (segal->parsed()) {
            if (level < 2)
                level = 2, to_level = std::max(to_level, 2);
            auto [cat, source] = load(input);
            report = segal_report(cat, source, level, to_level, limits);
        }
        else if (complete->parsed()) {
            auto [cat, source] = load(input);
            report = completeness_report(cat, source, limits);
        }
        else if (discrete->parsed()) {
            auto [cat, source] = load(input);
            report = discrete_report(cat, source, truncation, limits);
        }
        else if (nerve->parsed()) {
            auto [cat, source] = load(input);
            report = nerve_report(cat, source, truncation, limits);
        }
        else if (finset->parsed())
            report = finset_report(max_n, parse_function_class(variant), oracle, limits);
        else if (finvect->parsed())
            report = finvect_report(max_dim, q, oracle, limits);
        else
            report = oracle_diff_report(target, target == "vect" ? max_dim : max_n, parse_function_class(variant), q, limits);

        auto text = format == "json" ? to_json_text(report) : to_text(report);
        if (output.empty())
            std::cout << text;
        else {
            std::ofstream out(output);
            if (! (out << text))
                throw InvalidArgument("cannot write " + output);
        }
        return report.failed() ? exit_mismatch : exit_ok;
    }
    catch (const EngineError & e) {
        std::cerr << "cdiag: internal consistency failure: " << e.what() << '\n';
        return exit_mismatch;
    }
    catch (const Error & e) {
        std::cerr << "cdiag: " << e.what() << '\n';
        return exit_usage;
    }
}
