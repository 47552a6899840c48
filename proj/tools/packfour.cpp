// packfour: command-line front end for the (1,1,2,2)-packing coloring library.
//
// Exit codes (stable):
//   0  success
//   1  verification failed / internal error
//   2  unreadable input or usage error
//   3  hypothesis violation (not cubic, not claw-free)
//   4  search stuck (only reachable with --force on non-claw-free graphs)

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "packfour/certificate.hpp"
#include "packfour/experiments.hpp"
#include "packfour/generators.hpp"
#include "packfour/graph_io.hpp"
#include "packfour/oracle.hpp"
#include "packfour/parallel.hpp"
#include "packfour/pipeline.hpp"

namespace {

using namespace packfour;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitStuck = 4;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PACKFOUR_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric PACKFOUR_SEED\n";
        }
    }
    return 1;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

InputFormat parse_format(const std::string& name) {
    if (name == "graph6") return InputFormat::Graph6;
    if (name == "edgelist") return InputFormat::EdgeList;
    return InputFormat::Auto;
}

struct Output {
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file.open(path, std::ios::binary);
            if (!file) throw Error("cannot write " + path);
        }
    }
    std::ostream& stream() { return file.is_open() ? static_cast<std::ostream&>(file) : std::cout; }
    std::ofstream file;
};

// ---------------------------------------------------------------- color

struct ColorArgs {
    std::string input;
    std::string out;
    std::string dot;
    std::string format = "auto";
    bool force = false;
    int jobs = 1;
};

struct ColorOutcome {
    int code = kExitOk;
    std::string certificate;
    std::string dot;
    std::string message;
};

ColorOutcome color_one(const GraphRecord& record, const ColorArgs& args) {
    ColorOutcome out;
    const std::string where = "record at line " + std::to_string(record.line) + ": ";
    if (!record.graph) {
        out.code = kExitInput;
        out.message = where + record.error;
        return out;
    }
    const auto& g = *record.graph;
    try {
        auto result = color_claw_free_cubic(g, {.weights = {}, .force = args.force});
        out.certificate = result.certificate(g);
        if (!args.dot.empty()) out.dot = write_dot(g, &result.coloring, &kClassNames);
    } catch (const NotCubic& e) {
        out.code = kExitHypothesis;
        out.message = where + e.what();
    } catch (const NotClawFree& e) {
        out.code = kExitHypothesis;
        out.message = where + e.what() + " (use --force to run anyway)";
    } catch (const StuckOddCycle& e) {
        out.code = kExitStuck;
        out.message = where + "stuck: " + e.what();
    } catch (const Stuck& e) {
        out.code = kExitStuck;
        out.message = where + "stuck: " + e.what();
    } catch (const Error& e) {
        out.code = kExitFailed;
        out.message = where + e.what();
    }
    return out;
}

int run_color(const ColorArgs& args) {
    std::vector<GraphRecord> records;
    try {
        records = read_graphs(read_input(args.input), parse_format(args.format));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    std::vector<ColorOutcome> outcomes(records.size());
    parallel_for(records.size(), args.jobs, [&](std::size_t i) { outcomes[i] = color_one(records[i], args); });

    Output out(args.out);
    std::optional<Output> dot;
    if (!args.dot.empty()) dot.emplace(args.dot);
    int code = kExitOk;
    for (const auto& o : outcomes) {
        if (!o.certificate.empty()) out.stream() << o.certificate << "\n";
        if (dot && !o.dot.empty()) dot->stream() << o.dot;
        if (!o.message.empty()) std::cerr << o.message << "\n";
        code = std::max(code, o.code);
    }
    return code;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& graph_path, const std::string& cert_path, const std::string& format) {
    std::vector<GraphRecord> graphs;
    std::vector<std::string> certs;
    try {
        graphs = read_graphs(read_input(graph_path), parse_format(format));
        std::istringstream lines(read_input(cert_path));
        for (std::string line; std::getline(lines, line);)
            if (line.find_first_not_of(" \t\r") != std::string::npos) certs.push_back(line);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    if (graphs.size() != certs.size()) {
        std::cerr << "mismatch: " << graphs.size() << " graph(s) but " << certs.size() << " certificate(s)\n";
        return kExitFailed;
    }
    int code = kExitOk;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const std::string where = "certificate " + std::to_string(i) + ": ";
        if (!graphs[i].graph) {
            std::cerr << where << "graph unreadable: " << graphs[i].error << "\n";
            code = std::max(code, kExitInput);
            continue;
        }
        const auto& g = *graphs[i].graph;
        try {
            auto cert = parse_certificate(certs[i]);
            if (!describes_graph(cert, g)) {
                std::cout << where << "FAIL graph does not match the certificate\n";
                code = std::max(code, kExitFailed);
                continue;
            }
            if (auto bad = verify_spacking(g, cert.spec, cert.coloring)) {
                std::cout << where << "FAIL " << bad->describe() << "\n";
                code = std::max(code, kExitFailed);
                continue;
            }
            std::cout << where << "ok (" << cert.spec.to_string() << ")\n";
        } catch (const Error& e) {
            std::cout << where << "FAIL " << e.what() << "\n";
            code = std::max(code, kExitFailed);
        }
    }
    return code;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
    std::string input;
    std::string spec = "1,1,2,2";
    std::string summary;
    int cap = kDefaultVertexCap;
    int jobs = 1;
};

int run_oracle(const OracleArgs& args) {
    std::optional<SSpec> spec;
    try {
        spec = parse_sspec(args.spec);
    } catch (const SSpecError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitInput;
    }
    std::vector<std::string> records;
    try {
        std::istringstream lines(read_input(args.input));
        for (std::string line; std::getline(lines, line);) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '#') continue;
            records.push_back(line);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    auto report = batch_decide(records, *spec, args.cap, args.jobs);
    std::cout << report.tsv();
    if (args.summary.empty()) {
        std::cerr << report.summary_json() << "\n";
    } else {
        Output out(args.summary);
        out.stream() << report.summary_json() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- gen

void emit(const Graph& g) { std::cout << write_graph6(g) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified (1,1,2,2)-packing colorings of claw-free cubic graphs"};
    app.require_subcommand(1);

    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "Color claw-free cubic graphs and emit JSON certificates");
    color->add_option("input", color_args.input, "graph6 lines or an edge list (default: stdin)");
    color->add_option("--out", color_args.out, "Certificate output file, one JSON object per line");
    color->add_option("--dot", color_args.dot, "Also write a Graphviz rendering of each coloring");
    color->add_option("--format", color_args.format, "Input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    color->add_flag("--force", color_args.force, "Run on non-claw-free cubic graphs, reporting stuck searches");
    color->add_option("--jobs", color_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::string verify_graph;
    std::string verify_cert;
    std::string verify_format = "auto";
    auto* verify = app.add_subcommand("verify", "Re-check certificates against their graphs");
    verify->add_option("graph", verify_graph, "Graph input")->required();
    verify->add_option("certificate", verify_cert, "Certificate file")->required();
    verify->add_option("--format", verify_format, "Graph input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Exact S-packing colorability of graph6 records");
    oracle->add_option("input", oracle_args.input, "graph6 lines (default: stdin)");
    oracle->add_option("--s", oracle_args.spec, "S-spec, e.g. 1,1,2,3");
    oracle->add_option("--cap", oracle_args.cap, "Largest order searched");
    oracle->add_option("--jobs", oracle_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
    oracle->add_option("--summary", oracle_args.summary, "JSON summary file (default: stderr)");

    auto* gen = app.add_subcommand("gen", "Generate graphs as graph6 lines");
    gen->require_subcommand(1);
    std::uint64_t seed = default_seed();
    gen->add_option("--seed", seed, "RNG seed (default: $PACKFOUR_SEED or 1)");

    std::string named_name;
    int named_param = 0;
    auto* gen_named = gen->add_subcommand("named", "k4, prism, petersen, k33, cycle N, necklace K, ladder K, mobius K");
    gen_named->add_option("name", named_name)->required();
    gen_named->add_option("param", named_param);

    std::string inflate_base = "k4";
    int inflate_n = 10;
    auto* gen_inflate = gen->add_subcommand("inflate", "Triangle inflation of a cubic base graph");
    gen_inflate->add_option("--base", inflate_base, "k4, k33, prism, petersen, or random");
    gen_inflate->add_option("--n", inflate_n, "Base order for --base random");

    int necklace_k = 0;
    auto* gen_necklace = gen->add_subcommand("necklace", "Diamond necklace with K diamonds");
    gen_necklace->add_option("k", necklace_k)->required();

    int random_n = 0;
    int random_count = 1;
    bool random_connected = false;
    auto* gen_random = gen->add_subcommand("random-cubic", "Random cubic graphs (configuration model)");
    gen_random->add_option("n", random_n)->required();
    gen_random->add_option("--count", random_count);
    gen_random->add_flag("--connected", random_connected);

    int problem1_n = 4;
    auto* gen_problem1 = gen->add_subcommand("problem1", "Gadget substitution of a random cubic base of order N");
    gen_problem1->add_option("n", problem1_n)->required();

    int corpus_max_n = 60;
    auto* gen_corpus = gen->add_subcommand("corpus", "The claw-free cubic test corpus");
    gen_corpus->add_option("--max-n", corpus_max_n);
    int corpus_random = kDefaultRandomInflations;
    gen_corpus->add_option("--random", corpus_random, "Number of random inflations");

    int p1corpus_max_n = 16;
    auto* gen_p1corpus = gen->add_subcommand("problem1-corpus", "Graphs with every vertex on a 3- or 4-cycle");
    gen_p1corpus->add_option("--max-n", p1corpus_max_n);

    std::string experiment_name;
    int experiment_max_n = 14;
    int experiment_cap = kDefaultVertexCap;
    int experiment_jobs = 1;
    auto* experiment = app.add_subcommand("experiment", "Run the open-problem experiments");
    experiment->add_option("problem", experiment_name, "problem1 or problem2")->required();
    experiment->add_option("--max-n", experiment_max_n, "Largest graph order included");
    experiment->add_option("--cap", experiment_cap, "Oracle vertex cap");
    experiment->add_option("--jobs", experiment_jobs)->check(CLI::PositiveNumber);
    experiment->add_option("--seed", seed, "Corpus seed (default: $PACKFOUR_SEED or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (*color) return run_color(color_args);
        if (*verify) return run_verify(verify_graph, verify_cert, verify_format);
        if (*oracle) return run_oracle(oracle_args);
        if (*gen_named) emit(named_graph(named_name, named_param));
        if (*gen_inflate) {
            if (inflate_base == "random")
                emit(inflate(random_cubic(inflate_n, seed)));
            else
                emit(inflate(named_graph(inflate_base)));
        }
        if (*gen_necklace) emit(diamond_necklace(necklace_k));
        if (*gen_random)
            for (int i = 0; i < random_count; ++i)
                emit(random_cubic(random_n, seed + static_cast<std::uint64_t>(i), {.connected = random_connected}));
        if (*gen_problem1) emit(problem1_family(problem1_n, seed));
        if (*gen_corpus)
            for (const auto& e : claw_free_corpus(seed, corpus_random))
                if (e.graph.order() <= corpus_max_n) emit(e.graph);
        if (*gen_p1corpus)
            for (const auto& e : problem1_corpus(p1corpus_max_n)) emit(e.graph);
        if (*experiment) {
            if (experiment_name == "problem1") {
                std::cout << run_problem1(experiment_max_n, experiment_cap, experiment_jobs).text();
            } else if (experiment_name == "problem2") {
                std::cout << run_problem2(seed, experiment_max_n, experiment_cap, experiment_jobs).text();
            } else {
                std::cerr << "usage error: unknown experiment '" << experiment_name
                          << "' (expected problem1 or problem2)\n";
                return kExitInput;
            }
        }
    } catch (const BadParameter& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitInput;
    } catch (const UnknownName& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitOk;
}
