// mstsf: generate scale-free graphs, compute MSTs, verify trees, run ensembles.
//
// Exit codes: 0 ok, 1 I/O or runtime failure, 2 usage, 3 disconnected input,
// 4 verification failure. Standard output carries one key=value per line.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mstsf/edge_list.hpp"
#include "mstsf/experiment.hpp"
#include "mstsf/generator.hpp"
#include "mstsf/mst.hpp"
#include "mstsf/text.hpp"

namespace {

using namespace mstsf;

enum Exit : int { kOk = 0, kIo = 1, kUsage = 2, kDisconnected = 3, kVerify = 4 };

struct GenerateArgs {
    std::size_t nodes = 0;
    std::size_t m = 2;
    std::uint64_t seed = 1;
    std::string disorder = "none";
    std::string out;
};

struct MstArgs {
    std::string in;
    std::string algo = "kruskal";
    std::string out;
};

struct VerifyArgs {
    std::string graph;
    std::string tree;
};

struct ExperimentArgs {
    std::string config;
    std::optional<std::string> sizes;
    std::optional<std::size_t> m;
    std::optional<std::string> disorder;
    std::optional<std::size_t> realizations;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::size_t> threads;
};

int cmd_generate(const GenerateArgs& args) {
    const GeneratorParams params{args.nodes, args.m, args.seed};
    try {
        validate(params);
    } catch (const std::invalid_argument& e) {
        std::cerr << "generate: " << e.what() << '\n';
        return kUsage;
    }
    const Disorder disorder = *parse_disorder(args.disorder);
    const WeightedGraph g = assign_disorder(generate_preferential_attachment(params), disorder);

    std::ofstream out(args.out);
    if (!out) {
        std::cerr << "generate: cannot write " << args.out << '\n';
        return kIo;
    }
    write_graph(out, g,
                {{"generator", "pa"},
                 {"n", std::to_string(args.nodes)},
                 {"m", std::to_string(args.m)},
                 {"seed", std::to_string(args.seed)},
                 {"disorder", args.disorder},
                 {"rng", std::string(kRngName)}});
    if (!out.flush()) {
        std::cerr << "generate: write failed for " << args.out << '\n';
        return kIo;
    }
    std::cout << "nodes=" << g.num_nodes() << "\nedges=" << g.num_edges() << '\n';
    return kOk;
}

int cmd_mst(const MstArgs& args) {
    EdgeListFile file;
    try {
        file = load_graph(args.in);
    } catch (const std::exception& e) {
        std::cerr << "mst: " << e.what() << '\n';
        return kIo;
    }
    SpanningTree tree;
    try {
        tree = args.algo == "prim" ? prim(file.graph) : kruskal(file.graph);
    } catch (const DisconnectedGraphError& e) {
        std::cerr << "mst: " << e.what() << '\n';
        std::cout << "components=" << e.components() << '\n';
        return kDisconnected;
    }
    if (!args.out.empty()) {
        std::ofstream out(args.out);
        write_tree(out, file.graph, tree);
        if (!out.flush()) {
            std::cerr << "mst: cannot write " << args.out << '\n';
            return kIo;
        }
    }
    std::cout << "weight=" << format_double(tree.total_weight) << "\nedges=" << tree.edges.size() << '\n';
    return kOk;
}

int verification_failure(const char* reason, const std::string& detail) {
    std::cout << "status=fail\nreason=" << reason << '\n';
    std::cerr << "verify: " << reason << ": " << detail << '\n';
    return kVerify;
}

int cmd_verify(const VerifyArgs& args) {
    EdgeListFile graph_file;
    TreeFile tree_file;
    try {
        graph_file = load_graph(args.graph);
        tree_file = load_tree(args.tree);
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return kIo;
    }
    const WeightedGraph& g = graph_file.graph;
    if (tree_file.n_nodes != g.num_nodes()) {
        return verification_failure("node-count", "tree has " + std::to_string(tree_file.n_nodes) +
                                                      " nodes, graph has " + std::to_string(g.num_nodes()));
    }
    if (const auto check = verify_spanning_tree(g, tree_file.tree); !check) {
        return verification_failure(reason_code(check.defect), check.detail);
    }
    for (const auto& we : tree_file.edges) {
        const double actual = g.weight(*g.find_edge(we.u, we.v));
        if (!weights_close(we.weight, actual)) {
            return verification_failure(reason_code(TreeDefect::WeightMismatch),
                                        "edge {" + std::to_string(we.u) + "," + std::to_string(we.v) +
                                            "} listed with weight " + format_double(we.weight));
        }
    }
    std::string scope = "structure";
    if (g.num_nodes() <= kBruteForceMaxNodes) {
        const auto best = brute_force_mst(g);
        if (!weights_close(best.min_weight, tree_file.tree.total_weight)) {
            return verification_failure("not-minimum", "tree weight " + format_double(tree_file.tree.total_weight) +
                                                           ", minimum is " + format_double(best.min_weight));
        }
        scope = "structure+optimality";
    }
    std::cout << "status=ok\nchecked=" << scope << '\n';
    return kOk;
}

int cmd_experiment(const ExperimentArgs& args) {
    ExperimentPlan plan;
    try {
        if (!args.config.empty()) {
            std::ifstream in(args.config);
            if (!in) {
                std::cerr << "experiment: cannot open " << args.config << '\n';
                return kIo;
            }
            plan = parse_config(in);
        }
        if (args.sizes) apply_setting(plan, "sizes", *args.sizes);
        if (args.m) apply_setting(plan, "m", std::to_string(*args.m));
        if (args.disorder) apply_setting(plan, "disorder", *args.disorder);
        if (args.realizations) apply_setting(plan, "realizations", std::to_string(*args.realizations));
        if (args.seed) apply_setting(plan, "seed", std::to_string(*args.seed));
        if (args.out) apply_setting(plan, "out", *args.out);
        if (args.threads) apply_setting(plan, "threads", std::to_string(*args.threads));
        validate(plan.config);
    } catch (const std::exception& e) {
        std::cerr << "experiment: " << e.what() << '\n';
        return kUsage;
    }

    for (Disorder d : plan.disorders) {
        ExperimentConfig cfg = plan.config;
        cfg.disorder = d;
        const std::string type(to_string(d));
        try {
            const EnsembleResult result = run_ensemble(cfg);
            write_results(result);
            for (const auto& s : result.sizes) {
                std::cout << type << ".n" << s.n << ".mean_alpha=" << format_double(s.mean_alpha) << '\n'
                          << type << ".n" << s.n << ".std_alpha=" << format_double(s.std_alpha) << '\n';
            }
            if (result.sizes.size() >= 2) {
                std::vector<EfficiencyRow> rows;
                for (const auto& s : result.sizes) rows.push_back({s.n, s.mean_alpha, s.std_alpha, s.alphas.size()});
                std::cout << type << ".loglog_slope=" << format_double(efficiency_slope(rows)) << '\n';
            }
            std::cout << type << ".failures=" << result.failures.size() << '\n';
        } catch (const EnsembleError& e) {
            std::cerr << "experiment: " << e.what() << '\n';
            return kIo;
        } catch (const std::exception& e) {
            std::cerr << "experiment: " << e.what() << '\n';
            return kIo;
        }
    }
    std::cout << "output_dir=" << plan.config.output_dir.string() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum spanning trees of weighted scale-free graphs"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a preferential-attachment graph");
    generate->add_option("--nodes", gen.nodes, "Number of nodes")->required();
    generate->add_option("--m", gen.m, "Edges per new node")->capture_default_str();
    generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    generate->add_option("--disorder", gen.disorder, "Edge weights")
        ->check(CLI::IsMember({"none", "type1", "type2"}))
        ->capture_default_str();
    generate->add_option("--out", gen.out, "Output edge-list file")->required();

    MstArgs mst;
    auto* mst_cmd = app.add_subcommand("mst", "Compute a minimum spanning tree");
    mst_cmd->add_option("--in", mst.in, "Input edge-list file")->required();
    mst_cmd->add_option("--algo", mst.algo, "Algorithm")
        ->check(CLI::IsMember({"kruskal", "prim"}))
        ->capture_default_str();
    mst_cmd->add_option("--out", mst.out, "Output tree file");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Check that a tree file is a minimum spanning tree of a graph");
    verify->add_option("--graph", ver.graph, "Graph edge-list file")->required();
    verify->add_option("--tree", ver.tree, "Tree file")->required();

    ExperimentArgs exp;
    auto* experiment = app.add_subcommand("experiment", "Run the disorder ensembles and write CSV results");
    experiment->add_option("--config", exp.config, "key=value config file");
    experiment->add_option("--sizes", exp.sizes, "Comma-separated graph sizes");
    experiment->add_option("--m", exp.m, "Edges per new node");
    experiment->add_option("--disorder", exp.disorder, "none|type1|type2|both")
        ->check(CLI::IsMember({"none", "type1", "type2", "both"}));
    experiment->add_option("--realizations", exp.realizations, "Realizations per size");
    experiment->add_option("--seed", exp.seed, "Base seed");
    experiment->add_option("--out", exp.out, "Output directory");
    experiment->add_option("--threads", exp.threads, "Worker threads (0: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*generate) return cmd_generate(gen);
        if (*mst_cmd) return cmd_mst(mst);
        if (*verify) return cmd_verify(ver);
        if (*experiment) return cmd_experiment(exp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
    return kUsage;
}
