#pragma once

#include <optional>
#include <vector>

#include "packfour/graph.hpp"
#include "packfour/triangle_breaker.hpp"

namespace packfour {

enum class Side { A, B };

const char* to_string(Side side);

/// One vertex absorbed into A* or B*, with the odd cycle it destroyed.
struct Absorption {
    Vertex vertex;
    Side side;
    OddCycle cycle;  // original vertex ids
};

struct ReductionState {
    std::vector<Vertex> base_a;
    std::vector<Vertex> base_b;
    std::vector<Vertex> a_star;  // sorted
    std::vector<Vertex> b_star;  // sorted
    InducedSubgraph remainder;   // G[V ∖ (A* ∪ B*)]
    std::vector<Absorption> additions;
};

/// Every vertex of an odd cycle in the remainder is within distance 2 of both
/// A* and B*. The claw, if g has one, is attached for diagnosis.
class StuckOddCycle : public Error {
public:
    StuckOddCycle(ReductionState state, OddCycle cycle, std::optional<Claw> claw);
    ReductionState state;
    OddCycle cycle;
    std::optional<Claw> claw;
};

ReductionState initial_reduction_state(const Graph& g, const PackingPair& pair);

/// A if v is at distance >= 3 (in g) from all of A*, else B if the same holds
/// for B*, else nothing.
std::optional<Side> addable_side(const Graph& g, const ReductionState& state, Vertex v);

/// Repeatedly takes the shortest odd cycle of the remainder and moves its
/// first addable vertex into A* or B* until the remainder is bipartite.
/// Success is guaranteed for claw-free cubic g; otherwise StuckOddCycle may
/// be thrown.
ReductionState reduce_odd_cycles(const Graph& g, const PackingPair& pair);

}  // namespace packfour
