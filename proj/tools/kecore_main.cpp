// Command-line front end: recognizes Konig-Egervary graphs, computes maximum
// matchings and core(G) (the intersection of all maximum independent sets),
// cross-checks results against a brute-force oracle, and generates seeded
// KE test graphs.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kecore/cli.hpp"

namespace {

using kecore::cli::OutputFormat;
using kecore::cli::RunConfig;

void add_format_flag(CLI::App* cmd, RunConfig& config) {
    cmd->add_option_function<std::string>(
           "--format",
           [&config](const std::string& v) {
               config.format = v == "json" ? OutputFormat::Json : OutputFormat::Text;
           },
           "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
}

void add_input_arg(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("input", config.input, "Edge-list file, or '-' for stdin")
        ->default_str("-");
}

void add_workers_flag(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--workers", config.workers, "Worker threads for the per-vertex map")
        ->check(CLI::PositiveNumber)
        ->default_val(1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Konig-Egervary graph toolkit: recognition, maximum matching, core computation"};
    app.require_subcommand(1);

    RunConfig config;
    std::string mode = "auto";
    std::string flavor = "ke";
    double prob = 0.0;

    CLI::App* core = app.add_subcommand("core", "Compute core(G) of a KE graph");
    add_input_arg(core, config);
    core->add_option("--mode", mode, "Algorithm selection")
        ->check(CLI::IsMember({"auto", "general", "bipartite", "perfect"}))
        ->default_str("auto");
    add_workers_flag(core, config);
    add_format_flag(core, config);

    CLI::App* iske = app.add_subcommand("is-ke", "Test the KE property (alpha + mu = n)");
    add_input_arg(iske, config);
    add_format_flag(iske, config);

    CLI::App* matching = app.add_subcommand("matching", "Compute a maximum matching");
    add_input_arg(matching, config);
    add_format_flag(matching, config);

    CLI::App* alpha = app.add_subcommand("alpha", "Independence number of a KE graph");
    add_input_arg(alpha, config);
    add_format_flag(alpha, config);

    CLI::App* unique = app.add_subcommand("unique-mis", "Test for a unique maximum independent set");
    add_input_arg(unique, config);
    add_workers_flag(unique, config);
    add_format_flag(unique, config);

    CLI::App* verify = app.add_subcommand("verify", "Cross-check solver against the brute-force oracle");
    add_input_arg(verify, config);
    add_workers_flag(verify, config);
    add_format_flag(verify, config);

    CLI::App* gen = app.add_subcommand("gen", "Generate a seeded KE graph");
    gen->add_option("--n", config.gen.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--mu", config.gen.mu, "Matching number (2*mu <= n)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--p", prob, "Probability of each optional edge")->default_val(0.0);
    gen->add_option("--seed", config.gen.seed, "64-bit seed")->default_val(0);
    gen->add_option("--flavor", flavor, "Graph family")
        ->check(CLI::IsMember({"ke", "bipartite-ke", "perfect-matching-ke"}))
        ->default_str("ke");

    CLI11_PARSE(app, argc, argv);

    if (core->parsed()) {
        config.command = "core";
        if (mode == "general") config.mode = kecore::CoreMode::General;
        else if (mode == "bipartite") config.mode = kecore::CoreMode::Bipartite;
        else if (mode == "perfect") config.mode = kecore::CoreMode::Perfect;
    } else if (iske->parsed()) {
        config.command = "is-ke";
    } else if (matching->parsed()) {
        config.command = "matching";
    } else if (alpha->parsed()) {
        config.command = "alpha";
    } else if (unique->parsed()) {
        config.command = "unique-mis";
    } else if (verify->parsed()) {
        config.command = "verify";
    } else if (gen->parsed()) {
        config.command = "gen";
        config.gen.extra_edge_prob = prob;
        config.gen.flavor = kecore::gen_flavor_from_string(flavor);
    }

    return kecore::cli::run(config, std::cin, std::cout, std::cerr);
}
