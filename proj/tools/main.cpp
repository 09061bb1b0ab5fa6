#include <unistd.h>

#include <CLI11.hpp>
#include <iostream>

#include "hamsep/cli.hpp"

using namespace hamsep;
using namespace hamsep::cli;

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian cycles, separators and witness sets on triangulations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool quiet = false, plain = false;
    app.add_flag("-q,--quiet", quiet, "No progress output on stderr");
    app.add_flag("--plain", plain, "Progress as plain lines, no terminal control codes");

    std::string format = "auto";
    auto add_input = [&](CLI::App* cmd, std::string& input) {
        cmd->add_option("input", input, "Graph file (planar_code or signed rotation text)")->required();
        cmd->add_option("--format", format, "auto | planar_code | rotation");
    };

    ValidateOptions validate;
    auto* validate_cmd = app.add_subcommand("validate", "Check that each graph is a triangulation of genus <= 1");
    add_input(validate_cmd, validate.input);

    CensusOptions census;
    std::string census_c = "1/400", census_method = "auto";
    auto* census_cmd = app.add_subcommand("census", "4-separators and separating 3-/4-cycles as CSV");
    add_input(census_cmd, census.input);
    census_cmd->add_option("--c", census_c, "Threshold constant, separators <= c n");
    census_cmd->add_option("--method", census_method, "auto | brute | flow | cycles");
    census_cmd->add_option("--brute-limit", census.brute_force_limit, "Largest n for brute force under auto");

    WitnessOptions witness;
    std::string witness_c = "1/400";
    auto* witness_cmd = app.add_subcommand("witness", "Run the witness-set pipeline, JSON report");
    add_input(witness_cmd, witness.input);
    witness_cmd->add_option("--c", witness_c, "Separator constant, 0 <= c < 1/324");
    witness_cmd->add_option("--check-f", witness.check_f, "Edge choice sets to check (0 = off)");
    witness_cmd->add_option("--seed", witness.seed, "Seed for sampled edge choices");
    witness_cmd->add_flag("!--no-hamiltonian", witness.hamiltonicity, "Skip hamiltonicity of G - F");

    CountOptions count;
    std::string count_method = "both", avoid;
    auto* count_cmd = app.add_subcommand("count", "Count hamiltonian cycles as CSV");
    add_input(count_cmd, count.input);
    count_cmd->add_option("--method", count_method, "both | bt | dp");
    count_cmd->add_option("--avoid", avoid, "Edges to delete first, e.g. 0-1,2-3");

    ExperimentOptions experiment;
    std::string sizes, experiment_c = "1/400";
    auto* experiment_cmd = app.add_subcommand("experiment", "conjecture | lemma7 | scaling");
    experiment_cmd->add_option("name", experiment.name)->required()->check(
        CLI::IsMember({"conjecture", "lemma7", "scaling"}));
    experiment_cmd->add_option("--seed", experiment.seed);
    experiment_cmd->add_option("--sizes", sizes, "e.g. 12..20 or 12,14,16");
    experiment_cmd->add_option("--instances", experiment.instances, "Instances (lemma7) or random per size (conjecture)");
    experiment_cmd->add_option("--out", experiment.out_dir, "Directory for <name>.csv and <name>.json");
    experiment_cmd->add_option("--jobs", experiment.jobs, "Accepted for compatibility; runs sequentially");
    experiment_cmd->add_option("--c", experiment_c);
    experiment_cmd->add_option("--budget", experiment.budget, "Edge choice sets per instance");

    GenerateOptions generate;
    std::string generate_format = "rotation";
    auto* generate_cmd = app.add_subcommand("generate", "Write a generated triangulation");
    generate_cmd->add_option("family", generate.family)->required()->check(
        CLI::IsMember({"double_wheel", "octahedron", "icosahedron", "k6", "random", "low_separator"}));
    generate_cmd->add_option("-n", generate.n, "Vertices");
    generate_cmd->add_option("--seed", generate.seed);
    generate_cmd->add_option("--flips", generate.flips, "Random flips before repair (default 4n)");
    generate_cmd->add_option("--format", generate_format, "rotation | planar_code");
    generate_cmd->add_option("-o,--output", generate.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Streams io{std::cout, std::cerr, quiet, plain || !isatty(STDERR_FILENO)};
    try {
        const InputFormat in_format = parse_format(format);
        if (*validate_cmd) {
            validate.format = in_format;
            return cmd_validate(validate, io);
        }
        if (*census_cmd) {
            census.format = in_format;
            census.c = parse_rational(census_c);
            if (census_method == "auto")
                census.method = SeparatorMethod::automatic;
            else if (census_method == "brute")
                census.method = SeparatorMethod::brute_force;
            else if (census_method == "flow")
                census.method = SeparatorMethod::flow;
            else if (census_method == "cycles")
                census.method = SeparatorMethod::cycle_candidates;
            else
                throw std::invalid_argument("unknown separator method '" + census_method + "'");
            return cmd_census(census, io);
        }
        if (*witness_cmd) {
            witness.format = in_format;
            witness.c = parse_rational(witness_c);
            return cmd_witness(witness, io);
        }
        if (*count_cmd) {
            count.format = in_format;
            count.method = parse_method(count_method);
            count.avoid = parse_edge_list(avoid);
            return cmd_count(count, io);
        }
        if (*experiment_cmd) {
            if (!sizes.empty())
                experiment.sizes = parse_sizes(sizes);
            experiment.c = parse_rational(experiment_c);
            return cmd_experiment(experiment, io);
        }
        if (*generate_cmd) {
            generate.format = parse_format(generate_format);
            return cmd_generate(generate, io);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
