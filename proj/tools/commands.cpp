#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "report.hpp"
#include "topclose/generators.hpp"
#include "topclose/metrics.hpp"
#include "topclose/textbook.hpp"
#include "topclose/top_k.hpp"

namespace topclose::cli {

namespace {

struct InputFlags {
    std::string path;
    bool directed = false;
    bool undirected = false;
    std::size_t k = 10;
    unsigned threads = 1;
    std::string format = "json";
};

struct TopkFlags {
    bool stats = false;
    bool check = false;
};

struct GenFlags {
    std::string model;
    std::size_t nodes = 0;
    double probability = 0.0;
    std::size_t degree = 1;
    std::uint64_t seed = 0;
    bool directed = false;
    std::string out;
};

void add_input_flags(CLI::App &cmd, InputFlags &flags) {
    cmd.add_option("--input", flags.path, "Edge-list file")->required();
    auto *dir = cmd.add_flag("--directed", flags.directed, "Treat lines as arcs");
    auto *undir = cmd.add_flag("--undirected", flags.undirected, "Treat lines as edges (default)");
    dir->excludes(undir);
    cmd.add_option("-k,--k", flags.k, "Number of top vertices")->check(CLI::PositiveNumber);
    cmd.add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
}

Graph load(const InputFlags &flags) {
    return load_edge_list_file(flags.path, flags.directed);
}

InputInfo describe(const InputFlags &flags, const Graph &g) {
    return InputInfo{flags.path, g.node_count(), g.arc_count(), g.directed()};
}

RunReport engine_report(const InputFlags &flags, const Graph &g, bool full_stats) {
    const TopKRun run = top_k(g, flags.k, flags.threads);
    RunReport report;
    report.algorithm = "engine";
    report.input = describe(flags, g);
    report.k = flags.k;
    report.threads = flags.threads;
    report.result = run.result;
    report.stats.visited_arcs = run.stats.visited_arcs;
    report.stats.textbook_arcs = run.stats.textbook_arcs;
    if (full_stats) {
        const Metrics m = metrics(run.stats.visited_arcs, run.stats.textbook_arcs, g.arc_count(), g.node_count());
        report.stats.improvement_factor = m.improvement_factor;
        report.stats.performance_ratio = m.performance_ratio;
        report.stats.cut_vertices = run.stats.cut_count;
        report.stats.completed_vertices = run.stats.completed_count;
        report.stats.skipped_vertices = run.stats.skipped_count;
    }
    report.stats.preprocessing_seconds = run.stats.preprocessing_seconds;
    report.stats.total_seconds = run.stats.total_seconds;
    return report;
}

RunReport textbook_report(const InputFlags &flags, const Graph &g) {
    const auto start = std::chrono::steady_clock::now();
    const ClosenessTable table = exact_closeness_all(g, flags.threads);
    RunReport report;
    report.algorithm = "textbook";
    report.input = describe(flags, g);
    report.k = flags.k;
    report.threads = flags.threads;
    report.result = rank_table(g, table, flags.k);
    report.stats.textbook_arcs = table.textbook_arcs;
    report.stats.performance_ratio =
        metrics(table.textbook_arcs, table.textbook_arcs, g.arc_count(), g.node_count()).performance_ratio;
    report.stats.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void emit(std::ostream &out, const InputFlags &flags, const RunReport &report, bool with_stats) {
    if (flags.format == "tsv") {
        write_tsv(out, report, with_stats);
    } else {
        out << nlohmann::json(report).dump(2) << '\n';
    }
}

int cmd_topk(const InputFlags &flags, const TopkFlags &topk, std::ostream &out, std::ostream &err) {
    const Graph g = load(flags);
    RunReport report = engine_report(flags, g, topk.stats);
    int code = kExitOk;
    if (topk.check) {
        const ClosenessTable table = exact_closeness_all(g, flags.threads);
        report.stats.textbook_arcs = table.textbook_arcs;
        if (topk.stats) {
            report.stats.improvement_factor =
                metrics(*report.stats.visited_arcs, table.textbook_arcs, g.arc_count(), g.node_count())
                    .improvement_factor;
        }
        if (!same_closeness(report.result, rank_table(g, table, flags.k))) {
            err << "topclose: engine result disagrees with the textbook ranking\n";
            code = kExitMismatch;
        }
    }
    emit(out, flags, report, topk.stats);
    return code;
}

int cmd_oracle(const InputFlags &flags, std::ostream &out) {
    const Graph g = load(flags);
    emit(out, flags, textbook_report(flags, g), true);
    return kExitOk;
}

int cmd_compare(const InputFlags &flags, std::ostream &out) {
    const Graph g = load(flags);
    CompareReport report;
    report.engine = engine_report(flags, g, true);
    report.textbook = textbook_report(flags, g);
    report.engine.stats.textbook_arcs = report.textbook.stats.textbook_arcs;
    report.engine.stats.improvement_factor =
        metrics(*report.engine.stats.visited_arcs, report.textbook.stats.textbook_arcs, g.arc_count(), g.node_count())
            .improvement_factor;
    report.match = same_closeness(report.engine.result, report.textbook.result);
    if (flags.format == "tsv") {
        write_tsv(out, report);
    } else {
        out << nlohmann::json(report).dump(2) << '\n';
    }
    return report.match ? kExitOk : kExitMismatch;
}

int cmd_gen(const GenFlags &flags, std::ostream &out) {
    const auto model = parse_model(flags.model);
    if (!model) {
        throw UsageError("unknown model '" + flags.model + "'");
    }
    GeneratorParams params;
    params.model = *model;
    params.nodes = flags.nodes;
    params.probability = flags.probability;
    params.attachment = flags.degree;
    params.directed = flags.directed;
    params.seed = flags.seed;
    const Graph g = generate(params);
    if (flags.out.empty()) {
        write_edge_list(out, g);
        return kExitOk;
    }
    std::ofstream file(flags.out);
    if (!file) {
        throw std::runtime_error("cannot write " + flags.out);
    }
    write_edge_list(file, g);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact top-k closeness centrality"};
    app.name("topclose");
    app.require_subcommand(1);

    InputFlags topk_in, oracle_in, compare_in;
    TopkFlags topk_flags;
    GenFlags gen_flags;

    auto *topk = app.add_subcommand("topk", "Top-k closeness with pruned BFS");
    add_input_flags(*topk, topk_in);
    topk->add_flag("--stats", topk_flags.stats, "Include visited-arc statistics");
    topk->add_flag("--check", topk_flags.check, "Verify against the all-BFS baseline (exit 3 on mismatch)");

    auto *oracle = app.add_subcommand("oracle", "Top-k closeness with one full BFS per vertex");
    add_input_flags(*oracle, oracle_in);

    auto *compare = app.add_subcommand("compare", "Run engine and baseline, report both and the improvement factor");
    add_input_flags(*compare, compare_in);

    auto *gen = app.add_subcommand("gen", "Generate a canonical edge list");
    gen->add_option("--model", gen_flags.model, "gnp | pa | path | star | cycle")->required();
    gen->add_option("--nodes", gen_flags.nodes, "Vertex count")->required();
    gen->add_option("--prob", gen_flags.probability, "Arc probability (gnp)");
    gen->add_option("--degree", gen_flags.degree, "Arcs per new vertex (pa)");
    gen->add_option("--seed", gen_flags.seed, "Random seed");
    gen->add_flag("--directed", gen_flags.directed, "Generate a directed graph");
    gen->add_option("--out", gen_flags.out, "Output path (default: standard output)");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("topclose");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "topclose: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (topk->parsed()) return cmd_topk(topk_in, topk_flags, out, err);
        if (oracle->parsed()) return cmd_oracle(oracle_in, out);
        if (compare->parsed()) return cmd_compare(compare_in, out);
        if (gen->parsed()) return cmd_gen(gen_flags, out);
    } catch (const ParseError &e) {
        err << "topclose: parse error at " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception &e) {
        err << "topclose: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

} // namespace topclose::cli
