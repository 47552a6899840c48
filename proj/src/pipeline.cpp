#include "packfour/pipeline.hpp"

#include "packfour/certificate.hpp"

namespace packfour {

NotClawFree::NotClawFree(Claw c)
    : Error("graph is not claw-free: claw centered at " + std::to_string(c.center) + " with leaves " +
            std::to_string(c.leaves[0]) + "," + std::to_string(c.leaves[1]) + "," + std::to_string(c.leaves[2])),
      claw(c) {}

std::string PipelineResult::certificate(const Graph& g) const {
    return write_certificate(g, coloring, lemma.trace, reduction.additions);
}

PipelineResult color_claw_free_cubic(const Graph& g, const PipelineOptions& options) {
    require_cubic(g);
    if (!options.force)
        if (auto claw = find_claw(g)) throw NotClawFree(*claw);

    PipelineResult result;
    result.lemma = break_triangles(g, options.weights);
    result.reduction = reduce_odd_cycles(g, result.lemma.pair);

    const auto& rem = result.reduction.remainder;
    auto split = bipartition_or_odd_cycle(rem.graph);
    if (!std::holds_alternative<Bipartition>(split))
        throw Error("internal: remainder still has an odd cycle after reduction");
    const auto& parts = std::get<Bipartition>(split);

    auto& color = result.coloring.color;
    color.assign(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : parts.first) color[static_cast<std::size_t>(rem.to_original[static_cast<std::size_t>(v)])] = 1;
    for (Vertex v : parts.second) color[static_cast<std::size_t>(rem.to_original[static_cast<std::size_t>(v)])] = 2;
    for (Vertex v : result.reduction.a_star) color[static_cast<std::size_t>(v)] = 3;
    for (Vertex v : result.reduction.b_star) color[static_cast<std::size_t>(v)] = 4;

    if (auto bad = verify_spacking(g, spec_1122(), result.coloring))
        throw Error("internal: pipeline coloring failed verification: " + bad->describe());
    return result;
}

const char* to_string(Method m) { return m == Method::Pipeline ? "pipeline" : "oracle"; }

Outcome color_or_report(const Graph& g, const SSpec& s, int vertex_cap) {
    Outcome out;
    if (s == spec_1122() && is_cubic(g) && !find_claw(g)) {
        out.method = Method::Pipeline;
        try {
            out.coloring = color_claw_free_cubic(g).coloring;
            out.colorable = Verdict::Yes;
            return out;
        } catch (const Error& e) {
            // Unexpected on valid input; fall through to the exact search.
            out.reason = std::string("pipeline failed: ") + e.what();
        }
    }
    auto result = exists_spacking(g, s, vertex_cap);
    out.method = Method::Oracle;
    out.colorable = result.verdict;
    out.coloring = std::move(result.coloring);
    if (result.verdict == Verdict::Unknown) {
        if (!out.reason.empty()) out.reason += "; ";
        out.reason += "n=" + std::to_string(g.order()) + " exceeds oracle cap " + std::to_string(vertex_cap);
    }
    return out;
}

}  // namespace packfour
