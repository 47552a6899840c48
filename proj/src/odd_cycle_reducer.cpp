#include "packfour/odd_cycle_reducer.hpp"

#include <algorithm>

namespace packfour {

namespace {

std::vector<Vertex> complement(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<char> taken(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : a) taken[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : b) taken[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!taken[static_cast<std::size_t>(v)]) keep.push_back(v);
    return keep;
}

std::string cycle_text(const OddCycle& c) {
    std::string out;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) out += "-";
        out += std::to_string(c.vertices[i]);
    }
    return out;
}

}  // namespace

const char* to_string(Side side) { return side == Side::A ? "A" : "B"; }

StuckOddCycle::StuckOddCycle(ReductionState s, OddCycle c, std::optional<Claw> w)
    : Error("no vertex of odd cycle " + cycle_text(c) + " can join A* or B*" +
            (w ? " (graph has a claw centered at " + std::to_string(w->center) + ")" : std::string())),
      state(std::move(s)), cycle(std::move(c)), claw(w) {}

ReductionState initial_reduction_state(const Graph& g, const PackingPair& pair) {
    ReductionState s;
    s.base_a = pair.a;
    s.base_b = pair.b;
    s.a_star = pair.a;
    s.b_star = pair.b;
    std::sort(s.a_star.begin(), s.a_star.end());
    std::sort(s.b_star.begin(), s.b_star.end());
    s.remainder = induced_subgraph(g, complement(g, s.a_star, s.b_star));
    return s;
}

std::optional<Side> addable_side(const Graph& g, const ReductionState& state, Vertex v) {
    if (set_distance_at_least(g, v, state.a_star, 3)) return Side::A;
    if (set_distance_at_least(g, v, state.b_star, 3)) return Side::B;
    return std::nullopt;
}

ReductionState reduce_odd_cycles(const Graph& g, const PackingPair& pair) {
    auto state = initial_reduction_state(g, pair);
    while (auto local = shortest_odd_cycle(state.remainder.graph)) {
        OddCycle cycle;
        for (Vertex x : local->vertices) cycle.vertices.push_back(state.remainder.to_original[static_cast<std::size_t>(x)]);

        std::optional<std::pair<Vertex, Side>> pick;
        for (Vertex x : cycle.vertices)
            if (auto side = addable_side(g, state, x)) {
                pick.emplace(x, *side);
                break;
            }
        if (!pick) throw StuckOddCycle(std::move(state), std::move(cycle), find_claw(g));

        auto [vertex, side] = *pick;
        auto& target = side == Side::A ? state.a_star : state.b_star;
        target.insert(std::upper_bound(target.begin(), target.end(), vertex), vertex);
        state.additions.push_back({vertex, side, std::move(cycle)});
        state.remainder = induced_subgraph(g, complement(g, state.a_star, state.b_star));
    }
    return state;
}

}  // namespace packfour
