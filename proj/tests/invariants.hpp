#pragma once

// Replays lemma and reducer traces from scratch and reports the first broken
// invariant as a message (empty string when everything holds).

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "packfour/odd_cycle_reducer.hpp"
#include "packfour/triangle_breaker.hpp"

namespace invariants {

using namespace packfour;

inline std::string join(const std::vector<Vertex>& v) {
    std::string out;
    for (Vertex x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return "{" + out + "}";
}

inline bool contains(const std::vector<Vertex>& v, Vertex x) { return std::find(v.begin(), v.end(), x) != v.end(); }

inline bool remainder_triangle_free(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (const auto& t : fixtures::brute_triangles(g))
        if (std::none_of(t.begin(), t.end(), [&](Vertex v) { return contains(a, v) || contains(b, v); }))
            return false;
    return true;
}

// Rebuilds A and B move by move. After every move: disjoint 2-packings,
// conditions (1)(2)(3) away from K4 components, cached (w, gamma) equal to a
// recomputation, and w strictly larger than before. Finally gamma = 0 and the
// step count is at most 2n.
inline std::string check_lemma_trace(const Graph& g, const TriangleBreakResult& r, const Weights& weights = {}) {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    double w = 0.0;
    std::size_t step = 0;
    for (const auto& m : r.trace) {
        const std::string where = "step " + std::to_string(step++) + " (" + describe(m) + "): ";
        if (std::abs(m.w_before - w) > 1e-9) return where + "w_before does not match the running weight";
        if (m.remove_a) {
            if (!contains(a, *m.remove_a)) return where + "removes a vertex not in A";
            std::erase(a, *m.remove_a);
        }
        if (m.remove_b) {
            if (!contains(b, *m.remove_b)) return where + "removes a vertex not in B";
            std::erase(b, *m.remove_b);
        }
        a.insert(a.end(), m.add_a.begin(), m.add_a.end());
        b.insert(b.end(), m.add_b.begin(), m.add_b.end());
        if (!fixtures::disjoint(a, b)) return where + "A and B intersect";
        if (!fixtures::brute_is_k_packing(g, a, 2)) return where + "A is not a 2-packing " + join(a);
        if (!fixtures::brute_is_k_packing(g, b, 2)) return where + "B is not a 2-packing " + join(b);
        auto bad = check_packing_pair(g, a, b, PairScope::SkipK4Components);
        if (!bad.empty()) return where + bad.front().describe();
        auto fresh = make_packing_pair(g, weights, a, b);
        if (std::abs(fresh.weight - m.w_after) > 1e-9) return where + "cached w differs from recomputation";
        if (fresh.gamma != m.gamma_after) return where + "cached gamma differs from recomputation";
        if (!(m.w_after > w + 1e-9)) return where + "w did not increase";
        w = m.w_after;
    }
    if (r.trace.size() > 2 * static_cast<std::size_t>(g.order())) return "trace longer than 2n";
    auto sa = a;
    auto sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != r.pair.a || sb != r.pair.b) return "final pair differs from the replayed trace";
    if (!remainder_triangle_free(g, a, b)) return "a triangle survives the lemma stage";
    if (r.pair.gamma != 0) return "reported gamma is not zero";
    return {};
}

// Checks the reducer state: A* and B* extend the lemma pair by exactly the
// logged additions, stay disjoint 2-packings, every absorbed vertex lay on its
// logged cycle, and the remainder is bipartite.
inline std::string check_reduction(const Graph& g, const PackingPair& pair, const ReductionState& s) {
    std::vector<Vertex> a = pair.a;
    std::vector<Vertex> b = pair.b;
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : a) removed[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : b) removed[static_cast<std::size_t>(v)] = 1;
    std::size_t step = 0;
    for (const auto& add : s.additions) {
        const std::string where = "addition " + std::to_string(step++) + ": ";
        const auto& cyc = add.cycle.vertices;
        if (cyc.size() % 2 == 0 || cyc.size() < 5) return where + "logged cycle is not an odd cycle of length >= 5";
        if (!contains(cyc, add.vertex)) return where + "vertex not on its cycle";
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (removed[static_cast<std::size_t>(cyc[i])]) return where + "cycle uses a removed vertex";
            if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return where + "cycle is not a cycle";
        }
        (add.side == Side::A ? a : b).push_back(add.vertex);
        removed[static_cast<std::size_t>(add.vertex)] = 1;
        if (!fixtures::disjoint(a, b)) return where + "A* and B* intersect";
        if (!fixtures::brute_is_k_packing(g, a, 2)) return where + "A* is not a 2-packing";
        if (!fixtures::brute_is_k_packing(g, b, 2)) return where + "B* is not a 2-packing";
        if (!remainder_triangle_free(g, a, b)) return where + "remainder has a triangle";
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != s.a_star || b != s.b_star) return "A*/B* differ from the replayed additions";
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) rest.push_back(v);
    if (rest != s.remainder.to_original) return "remainder vertex set is wrong";
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex root : rest) {
        if (side[static_cast<std::size_t>(root)] >= 0) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (removed[static_cast<std::size_t>(w)]) continue;
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
                    return "remainder is not bipartite";
                }
            }
        }
    }
    return {};
}

}  // namespace invariants
