#include "packfour/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

#include "packfour/graph_io.hpp"
#include "packfour/parallel.hpp"

namespace packfour {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

class Backtracker {
public:
    Backtracker(const Graph& g, const SSpec& s) : spec_(s), r_(s.size()) {
        const auto n = idx(g.order());
        auto dist = all_pairs_distances(g);
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        conflicts_.assign(n, std::vector<std::vector<Vertex>>(r_));
        for (Vertex v = 0; v < g.order(); ++v)
            for (std::size_t c = 0; c < r_; ++c)
                for (Vertex u = 0; u < g.order(); ++u)
                    if (u != v && dist[idx(v)][idx(u)] <= s.bound(static_cast<int>(c) + 1))
                        conflicts_[idx(v)][c].push_back(u);
        color_.assign(n, 0);
        blocked_.assign(n, std::vector<int>(r_, 0));
        blocked_classes_.assign(n, 0);
        used_.assign(r_, 0);
    }

    bool solve(std::size_t pos = 0) {
        if (pos == order_.size()) return true;
        Vertex v = order_[pos];
        for (std::size_t c = 0; c < r_; ++c) {
            if (blocked_[idx(v)][c]) continue;
            if (used_[c] == 0 && c > 0 && spec_.bounds()[c] == spec_.bounds()[c - 1] && used_[c - 1] == 0) continue;
            color_[idx(v)] = static_cast<int>(c) + 1;
            ++used_[c];
            bool wiped = false;
            for (Vertex u : conflicts_[idx(v)][c]) {
                if (color_[idx(u)] != 0) continue;
                if (blocked_[idx(u)][c]++ == 0 && ++blocked_classes_[idx(u)] == r_) wiped = true;
            }
            if (!wiped && solve(pos + 1)) return true;
            for (Vertex u : conflicts_[idx(v)][c]) {
                if (color_[idx(u)] != 0) continue;
                if (--blocked_[idx(u)][c] == 0) --blocked_classes_[idx(u)];
            }
            --used_[c];
            color_[idx(v)] = 0;
        }
        return false;
    }

    Coloring coloring() const { return Coloring{color_}; }

private:
    const SSpec& spec_;
    std::size_t r_;
    std::vector<Vertex> order_;
    std::vector<std::vector<std::vector<Vertex>>> conflicts_;  // [v][class] -> vertices too close
    std::vector<int> color_;
    std::vector<std::vector<int>> blocked_;
    std::vector<std::size_t> blocked_classes_;
    std::vector<int> used_;
};

std::string coloring_text(const Coloring& c) {
    std::string out;
    for (std::size_t i = 0; i < c.color.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.color[i]);
    }
    return out;
}

BatchVerdict decide_record(std::size_t index, const std::string& record, const SSpec& s, int cap) {
    BatchVerdict out;
    out.index = index;
    out.graph6 = record;
    Graph g;
    try {
        g = parse_graph6(record);
    } catch (const Error& e) {
        out.verdict = "error";
        out.detail = e.what();
        return out;
    }
    out.n = g.order();
    auto result = exists_spacking(g, s, cap);
    out.verdict = to_string(result.verdict);
    switch (result.verdict) {
    case Verdict::Yes:
        out.detail = coloring_text(*result.coloring);
        break;
    case Verdict::No:
        out.detail = "exhausted";
        out.candidate = is_conjecture_spec(s) && is_cubic(g) && !find_claw(g);
        if (out.candidate) out.detail += "; candidate counterexample " + record;
        break;
    case Verdict::Unknown:
        out.detail = "n=" + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap);
        break;
    }
    return out;
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix out;
    out.reserve(idx(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(bfs_distances(g, v));
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

OracleResult exists_spacking(const Graph& g, const SSpec& s, int vertex_cap) {
    if (g.order() > vertex_cap) return {Verdict::Unknown, std::nullopt};
    Backtracker search(g, s);
    if (!search.solve()) return {Verdict::No, std::nullopt};
    auto coloring = search.coloring();
    if (auto bad = verify_spacking(g, s, coloring))
        throw Error("oracle produced an invalid coloring: " + bad->describe());
    return {Verdict::Yes, std::move(coloring)};
}

bool is_conjecture_spec(const SSpec& s) { return s == SSpec({1, 1, 2, 2}) || s == SSpec({1, 1, 2, 3}); }

BatchReport batch_decide(std::span<const std::string> records, const SSpec& s, int vertex_cap, int jobs) {
    BatchReport report{s, std::vector<BatchVerdict>(records.size())};
    parallel_for(records.size(), jobs,
                 [&](std::size_t i) { report.verdicts[i] = decide_record(i, records[i], s, vertex_cap); });
    return report;
}

std::string BatchReport::tsv() const {
    std::string out;
    for (const auto& v : verdicts) {
        out += std::to_string(v.index) + '\t' + (v.n < 0 ? std::string("-") : std::to_string(v.n)) + '\t' + v.verdict +
               '\t' + v.detail + '\n';
    }
    return out;
}

std::string BatchReport::summary_json() const {
    nlohmann::json j;
    j["s_spec"] = std::vector<int>(spec.bounds().begin(), spec.bounds().end());
    j["total"] = verdicts.size();
    for (const char* key : {"yes", "no", "unknown", "error"})
        j[key] = std::count_if(verdicts.begin(), verdicts.end(), [&](const BatchVerdict& v) { return v.verdict == key; });
    auto candidates = nlohmann::json::array();
    for (const auto& v : verdicts)
        if (v.candidate) candidates.push_back({{"index", v.index}, {"graph6", v.graph6}});
    j["candidates"] = std::move(candidates);
    return j.dump();
}

}  // namespace packfour
