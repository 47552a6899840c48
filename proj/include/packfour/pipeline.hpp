#pragma once

#include <optional>
#include <string>

#include "packfour/graph.hpp"
#include "packfour/odd_cycle_reducer.hpp"
#include "packfour/oracle.hpp"
#include "packfour/packing.hpp"
#include "packfour/triangle_breaker.hpp"

namespace packfour {

class NotClawFree : public Error {
public:
    explicit NotClawFree(Claw claw);
    Claw claw;
};

struct PipelineOptions {
    Weights weights;
    /// Skip the claw-free check. The reducer then either finishes (and the
    /// result is verified like any other) or throws StuckOddCycle.
    bool force = false;
};

struct PipelineResult {
    /// Class indices 1..4 stand for 1a, 1b, 2a, 2b.
    Coloring coloring;
    TriangleBreakResult lemma;
    ReductionState reduction;

    std::string certificate(const Graph& g) const;
};

/// (1,1,2,2)-packing coloring of a claw-free cubic graph: 2a and 2b are the
/// extended 2-packings A* and B*; 1a and 1b are the sides of the bipartite
/// remainder, with each component's smallest vertex in 1a. The coloring is
/// verified before it is returned.
///
/// Throws NotCubic, NotClawFree (unless forced), StuckOddCycle, or Error if
/// the final verification fails.
PipelineResult color_claw_free_cubic(const Graph& g, const PipelineOptions& options = {});

enum class Method { Pipeline, Oracle };

const char* to_string(Method m);

struct Outcome {
    Method method = Method::Oracle;
    Verdict colorable = Verdict::Unknown;
    std::optional<Coloring> coloring;
    std::string reason;
};

/// Uses the pipeline for s = (1,1,2,2) on claw-free cubic graphs and the exact
/// oracle otherwise. Errors are folded into the outcome.
Outcome color_or_report(const Graph& g, const SSpec& s, int vertex_cap = kDefaultVertexCap);

}  // namespace packfour
