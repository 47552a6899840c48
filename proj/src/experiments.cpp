#include "packfour/experiments.hpp"

#include <algorithm>
#include <set>

#include "packfour/generators.hpp"
#include "packfour/graph_io.hpp"
#include "packfour/parallel.hpp"
#include "packfour/pipeline.hpp"

namespace packfour {

namespace {

void record_oracle(ExperimentRow& row, const Graph& g, const SSpec& s, int cap) {
    auto result = exists_spacking(g, s, cap);
    if (!row.method.empty()) row.detail += "; ";
    row.method = "oracle";
    row.verdict = to_string(result.verdict);
    if (result.verdict == Verdict::No) {
        row.candidate = true;
        row.detail += "exhausted";
    } else if (result.verdict == Verdict::Unknown) {
        row.detail += "n exceeds cap " + std::to_string(cap);
    } else {
        row.detail += "oracle coloring verified";
    }
}

}  // namespace

std::size_t ExperimentReport::count(const std::string& verdict) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [&](const ExperimentRow& r) { return r.verdict == verdict; }));
}

std::vector<ExperimentRow> ExperimentReport::candidates() const {
    std::vector<ExperimentRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out), [](const ExperimentRow& r) { return r.candidate; });
    return out;
}

std::string ExperimentReport::text() const {
    auto flagged = candidates();
    std::string out = "# " + problem + " s=" + spec.to_string() + " graphs=" + std::to_string(rows.size()) +
                      " yes=" + std::to_string(count("yes")) + " no=" + std::to_string(count("no")) +
                      " unknown=" + std::to_string(count("unknown")) + " candidates=" + std::to_string(flagged.size()) +
                      "\n";
    for (const auto& r : rows)
        out += r.name + '\t' + std::to_string(r.n) + '\t' + r.method + '\t' + r.verdict + '\t' + r.detail + '\n';
    for (const auto& r : flagged) out += "candidate\t" + r.name + '\t' + r.graph6 + '\n';
    return out;
}

ExperimentReport run_problem1(int max_n, int vertex_cap, int jobs) {
    ExperimentReport report{"problem1", spec_1122(), {}};
    auto corpus = problem1_corpus(max_n);
    report.rows.resize(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        const auto& g = corpus[i].graph;
        auto& row = report.rows[i];
        row.name = corpus[i].name;
        row.n = g.order();
        row.graph6 = write_graph6(g);
        if (!every_vertex_on_short_cycle(g)) {
            row.verdict = "unknown";
            row.detail = "not in the class: some vertex on no 3- or 4-cycle";
            return;
        }
        try {
            color_claw_free_cubic(g, {.weights = {}, .force = true});
            row.method = "pipeline";
            row.verdict = "yes";
            row.detail = "pipeline coloring verified";
        } catch (const StuckOddCycle& e) {
            row.method = "pipeline";
            row.detail = "pipeline stuck on odd cycle of length " + std::to_string(e.cycle.length());
            record_oracle(row, g, report.spec, vertex_cap);
        } catch (const Error& e) {
            row.method = "pipeline";
            row.detail = std::string("pipeline failed: ") + e.what();
            record_oracle(row, g, report.spec, vertex_cap);
        }
    });
    return report;
}

ExperimentReport run_problem2(std::uint64_t seed, int max_n, int vertex_cap, int jobs) {
    ExperimentReport report{"problem2", SSpec({1, 1, 2, 3}), {}};
    std::vector<CorpusEntry> graphs;
    std::set<std::string> seen;
    for (auto& entry : claw_free_corpus(seed)) {
        if (entry.graph.order() > max_n) continue;
        if (!seen.insert(write_graph6(entry.graph)).second) continue;
        graphs.push_back(std::move(entry));
    }
    report.rows.resize(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        auto& row = report.rows[i];
        row.name = graphs[i].name;
        row.n = graphs[i].graph.order();
        row.graph6 = write_graph6(graphs[i].graph);
        record_oracle(row, graphs[i].graph, report.spec, vertex_cap);
    });
    return report;
}

}  // namespace packfour
