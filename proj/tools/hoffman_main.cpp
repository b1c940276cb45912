// Command-line front end: spectral lower bounds for chromatic-like graph
// parameters, exact oracles with certificates, theorem verification
// suites, and rounding simulations.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hoffman/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Spectral lower bounds for coloring-like graph parameters, with oracles"};
    app.require_subcommand(1);

    hoffman::cli::BoundsOptions bounds_opt;
    std::vector<std::string> improve_args;
    auto* bounds = app.add_subcommand("bounds", "Spectral bound reports as JSON lines");
    bounds->add_option("input", bounds_opt.input, "Input path or '-' for stdin")->required();
    bounds->add_option("--format", bounds_opt.format, "graph6 | dimacs | edgelist")
        ->check(CLI::IsMember({"graph6", "dimacs", "edgelist"}));
    double alpha_flag = -1.0, lambda_flag = 0.0;
    auto* alpha_opt = bounds->add_option("--alpha", alpha_flag, "Also report the covering bound at this alpha");
    auto* lambda_opt = bounds->add_option("--lambda", lambda_flag, "Also report the clustering bound at this lambda");
    bounds->add_option("--weights", bounds_opt.weights_path,
                       "Edge-list file with a symmetric weighting supported on the input edges; "
                       "the spectral bound is evaluated on it");
    bounds->add_option("--improve-w", improve_args,
                       "ITERS SEED: coordinate search for a stronger weighting")
        ->expected(2);

    hoffman::cli::ExactOptions exact_opt;
    std::vector<std::string> covering_args;
    auto* exact = app.add_subcommand("exact", "Exact oracles with certificates");
    exact->add_option("input", exact_opt.input, "Input path or '-' for stdin")->required();
    exact->add_option("--format", exact_opt.format, "graph6 | dimacs | edgelist")
        ->check(CLI::IsMember({"graph6", "dimacs", "edgelist"}));
    exact->add_flag("--chi", exact_opt.chi, "Chromatic number (branch and bound)");
    bool chiv_flag = false;
    exact->add_flag("--chiv", chiv_flag, "Vector chromatic number (numerical, needs --seed)");
    double clustering_flag = 0.0;
    auto* clustering_opt =
        exact->add_option("--clustering", clustering_flag, "Exact clustering number at this lambda");
    exact->add_option("--covering", covering_args, "PSI ALPHA: exact covering number")->expected(2);
    exact->add_option("--out", exact_opt.out_dir, "Directory for certificate files");
    std::uint64_t exact_seed = 0;
    auto* exact_seed_opt = exact->add_option("--seed", exact_seed, "Seed for the vector coloring solver");

    hoffman::cli::VerifyCliOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Run the theorem verification matrix");
    verify->add_option("--corpus", verify_opt.corpus, "'default' or a corpus file");
    verify->add_option("--tol", verify_opt.options.tolerance, "Inequality tolerance");
    verify->add_option("--only", verify_opt.options.only,
                       "Check-name prefix filter (hoffman, thm1, thm2, thm3, chi0, lemma)");
    verify->add_option("--seed", verify_opt.options.seed, "Seed for the numerical solvers")->required();
    verify->add_option("--threads", verify_opt.options.threads, "Worker threads (also HOFFMAN_THREADS)");
    verify->add_flag("--negative-control", verify_opt.options.negative_control,
                     "Corrupt every oracle by 1; the run must then fail (self-test)");

    hoffman::cli::SimulateOptions sim_opt;
    auto* simulate = app.add_subcommand("simulate", "Rounding simulation for a cover family");
    simulate->add_option("--graph", sim_opt.graph_path, "Graph file")->required();
    simulate->add_option("--format", sim_opt.format, "graph6 | dimacs | edgelist")
        ->check(CLI::IsMember({"graph6", "dimacs", "edgelist"}));
    simulate->add_option("--family", sim_opt.family_path, "Cover family certificate (JSON)")->required();
    simulate->add_option("--trials", sim_opt.trials, "Number of trials");
    simulate->add_option("--seed", sim_opt.seed, "Seed")->required();
    simulate->add_option("--hist", sim_opt.histogram_csv, "Write the bad-edge histogram as CSV");

    hoffman::cli::GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "Generate graphs as graph6 lines");
    gen->add_option("--family", gen_opt.family,
                    "complete | cycle | petersen | complete_bipartite | random_regular | "
                    "erdos_renyi | enumerate")
        ->required();
    gen->add_option("--n", gen_opt.n, "Vertex count (first part size for bipartite)");
    gen->add_option("--d", gen_opt.d, "Degree (second part size for bipartite)");
    gen->add_option("--p", gen_opt.p, "Edge probability for erdos_renyi");
    auto* gen_seed = gen->add_option("--seed", gen_opt.seed, "Seed for random families");
    gen->add_option("--max-n", gen_opt.max_n, "Largest order for 'enumerate'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed()) {
            if (*alpha_opt) bounds_opt.alpha = alpha_flag;
            if (*lambda_opt) bounds_opt.lambda = lambda_flag;
            if (!improve_args.empty()) {
                bounds_opt.improve_iterations = std::stoi(improve_args[0]);
                bounds_opt.improve_seed = std::stoull(improve_args[1]);
            }
            return hoffman::cli::run_bounds(bounds_opt, std::cin, std::cout);
        }
        if (exact->parsed()) {
            exact_opt.chiv = chiv_flag;
            if (chiv_flag && !*exact_seed_opt) {
                std::cerr << "error: --chiv needs an explicit --seed\n";
                return 2;
            }
            exact_opt.seed = exact_seed;
            if (*clustering_opt) exact_opt.clustering_lambda = clustering_flag;
            if (!covering_args.empty()) exact_opt.covering = {{covering_args[0], covering_args[1]}};
            return hoffman::cli::run_exact(exact_opt, std::cin, std::cout);
        }
        if (verify->parsed()) return hoffman::cli::run_verify(verify_opt, std::cout);
        if (simulate->parsed()) return hoffman::cli::run_simulate(sim_opt, std::cout);
        if (gen->parsed()) {
            if ((gen_opt.family == "random_regular" || gen_opt.family == "erdos_renyi") &&
                !*gen_seed) {
                std::cerr << "error: random families need an explicit --seed\n";
                return 2;
            }
            return hoffman::cli::run_gen(gen_opt, std::cout);
        }
    } catch (const hoffman::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
