#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "invariants.hpp"
#include "packfour/generators.hpp"
#include "packfour/graph_io.hpp"
#include "packfour/triangle_breaker.hpp"

using namespace packfour;

namespace {

bool has_condition(const std::vector<PairViolation>& v, int condition) {
    return std::any_of(v.begin(), v.end(), [&](const PairViolation& p) { return p.condition == condition; });
}

bool offers(const std::vector<Move>& moves, std::vector<Vertex> add_a, std::vector<Vertex> add_b) {
    return std::any_of(moves.begin(), moves.end(), [&](const Move& m) {
        return !m.remove_a && !m.remove_b && m.add_a == add_a && m.add_b == add_b;
    });
}

// Every packing pair of g (conditions (1)(2)(3) on the whole graph), by
// backtracking over none/A/B per vertex.
template <class Fn>
void for_each_packing_pair(const Graph& g, Fn&& fn) {
    const auto d = fixtures::floyd_warshall(g);
    const auto counts = triangle_membership_counts(g);
    const auto tris = list_triangles(g);
    const int n = g.order();
    std::vector<int> mark(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    auto fits = [&](Vertex v, const std::vector<Vertex>& side) {
        for (Vertex u : side)
            if (d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] < 3) return false;
        for (const auto& t : tris)
            if (t.contains(v))
                for (Vertex u : t.vertices)
                    if (u != v && mark[static_cast<std::size_t>(u)]) return false;
        return true;
    };
    auto go = [&](auto&& self, Vertex v) -> void {
        if (v == n) {
            fn(a, b);
            return;
        }
        self(self, v + 1);
        if (counts[static_cast<std::size_t>(v)] == 0) return;
        for (int side = 1; side <= 2; ++side) {
            auto& set = side == 1 ? a : b;
            if (!fits(v, set)) continue;
            set.push_back(v);
            mark[static_cast<std::size_t>(v)] = side;
            self(self, v + 1);
            mark[static_cast<std::size_t>(v)] = 0;
            set.pop_back();
        }
    };
    go(go, 0);
}

}  // namespace

TEST_SUITE("triangle_breaker") {

TEST_CASE("vertex weights") {
    const Weights w;
    auto k4 = triangle_membership_counts(complete_k4());
    auto pr = triangle_membership_counts(prism());
    auto pe = triangle_membership_counts(petersen());
    CHECK(vertex_weight(w, k4, 0) == 2.0);
    CHECK(vertex_weight(w, pr, 0) == 1.0);
    CHECK(vertex_weight(w, pe, 0) == 0.0);
    // Diamond middles lie in exactly two triangles.
    auto nd = triangle_membership_counts(diamond_necklace(3));
    CHECK(vertex_weight(w, nd, 1) == 2.0);
    CHECK(vertex_weight(w, nd, 0) == 1.0);

    CHECK_THROWS_AS((Weights{1.0, 1.0}.validate()), Error);
    CHECK_THROWS_AS((Weights{2.0, 0.0}.validate()), Error);
    CHECK_NOTHROW((Weights{3.0, 0.5}.validate()));
}

TEST_CASE("packing pair conditions") {
    std::vector<Vertex> zero{0}, one{1}, four{4};
    auto k4 = check_packing_pair(complete_k4(), zero, one);
    CHECK(has_condition(k4, 3));
    CHECK(check_packing_pair(complete_k4(), zero, one, PairScope::SkipK4Components).empty());
    CHECK(check_packing_pair(prism(), zero, four).empty());
    auto pe = check_packing_pair(petersen(), zero, {});
    REQUIRE(pe.size() == 1);
    CHECK(pe[0].condition == 2);
    CHECK(pe[0].witnesses == std::vector<Vertex>{0});

    std::vector<Vertex> near{0, 1};
    CHECK(has_condition(check_packing_pair(prism(), near, {}), 1));
    CHECK(has_condition(check_packing_pair(prism(), zero, zero), 1));
}

TEST_CASE("surviving triangles") {
    const Weights w;
    CHECK(surviving_triangles(prism(), make_packing_pair(prism(), w, {}, {})).size() == 2);
    CHECK(surviving_triangles(prism(), make_packing_pair(prism(), w, {0}, {4})).empty());
    CHECK(surviving_triangles(petersen(), make_packing_pair(petersen(), w, {}, {})).empty());
    auto p = make_packing_pair(prism(), w, {0}, {4});
    CHECK(p.weight == 2.0);
    CHECK(p.gamma == 0);
}

TEST_CASE("improving moves near a surviving triangle") {
    const Weights w;
    for (const auto& g : {prism(), inflate(k33()), diamond_necklace(4)}) {
        auto empty = make_packing_pair(g, w, {}, {});
        const auto t = list_triangles(g).front();
        auto moves = enumerate_improving_moves(g, w, empty, t);
        for (Vertex v : t.vertices) CHECK(offers(moves, {v}, {}));
    }
    auto p = prism();
    auto moves = enumerate_improving_moves(p, w, make_packing_pair(p, w, {0}, {}), Triangle{{3, 4, 5}});
    CHECK((offers(moves, {}, {3}) || offers(moves, {}, {4}) || offers(moves, {}, {5})));
    for (const auto& m : moves) {
        CHECK(m.w_after >= m.w_before);
        CHECK(m.w_before == 1.0);
    }
}

TEST_CASE("lemma examples") {
    auto k4 = break_triangles(complete_k4());
    CHECK(k4.pair.a == std::vector<Vertex>{0});
    CHECK(k4.pair.b == std::vector<Vertex>{1});
    CHECK(k4.pair.gamma == 0);
    REQUIRE(k4.trace.size() == 1);
    CHECK(k4.trace[0].k4_component);

    auto pr = break_triangles(prism());
    CHECK(pr.pair.gamma == 0);
    CHECK(pr.trace.size() <= 2);
    CHECK(pr.pair.a == std::vector<Vertex>{0});
    CHECK(pr.pair.b == std::vector<Vertex>{3});
    CHECK(invariants::check_lemma_trace(prism(), pr).empty());

    auto pe = break_triangles(petersen());
    CHECK(pe.pair.a.empty());
    CHECK(pe.pair.b.empty());
    CHECK(pe.trace.empty());

    auto ik4 = inflate(complete_k4());
    auto r = break_triangles(ik4);
    CHECK(r.pair.gamma == 0);
    CHECK(invariants::check_lemma_trace(ik4, r) == "");

    CHECK_THROWS_AS(break_triangles(cycle_graph(5)), NotCubic);
}

TEST_CASE("lemma invariants hold on cubic graphs with and without claws") {
    std::vector<Graph> graphs{petersen(), k33(), complete_k4(), prism(), disjoint_union(complete_k4(), prism()),
                              disjoint_union(complete_k4(), complete_k4()), mobius_ladder(4), circular_ladder(5)};
    for (std::uint64_t seed = 0; seed < 80; ++seed) graphs.push_back(random_cubic(4 + 2 * static_cast<int>(seed % 9), seed));
    for (const auto& e : claw_free_corpus(5, 40)) graphs.push_back(e.graph);
    for (const auto& e : problem1_corpus(18)) graphs.push_back(e.graph);
    for (const auto& g : graphs) {
        INFO(write_graph6(g));
        auto r = break_triangles(g);
        CHECK(invariants::check_lemma_trace(g, r) == "");
    }
}

TEST_CASE("other weight choices keep the invariants") {
    const Weights w{5.0, 3.0};
    for (const auto& e : claw_free_corpus(8, 10)) {
        auto r = break_triangles(e.graph, w);
        CHECK(invariants::check_lemma_trace(e.graph, r, w) == "");
    }
}

TEST_CASE("stuck pairs only occur with a K4 component (exhaustive, n <= 10)") {
    // Distinct labelled cubic graphs on 4..10 vertices plus some disjoint unions.
    std::set<std::string> seen;
    std::vector<Graph> graphs;
    auto add = [&](const Graph& g) {
        if (seen.insert(write_graph6(g)).second && !list_triangles(g).empty()) graphs.push_back(g);
    };
    for (int n = 4; n <= 10; n += 2)
        for (std::uint64_t seed = 0; seed < 25; ++seed) add(random_cubic(n, seed * 31 + static_cast<std::uint64_t>(n)));
    add(prism());
    add(diamond_necklace(2));
    add(disjoint_union(complete_k4(), prism()));
    add(disjoint_union(complete_k4(), complete_k4()));
    REQUIRE(graphs.size() >= 20);

    const Weights w;
    std::size_t pairs = 0;
    std::size_t stuck = 0;
    for (const auto& g : graphs) {
        const bool has_k4 = !k4_components(g).empty();
        for_each_packing_pair(g, [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
            auto pair = make_packing_pair(g, w, a, b);
            ++pairs;
            if (pair.gamma == 0) return;
            bool any = false;
            for (const auto& t : surviving_triangles(g, pair))
                if (!enumerate_improving_moves(g, w, pair, t).empty()) {
                    any = true;
                    break;
                }
            if (!any) {
                ++stuck;
                INFO(write_graph6(g), " A=", invariants::join(a), " B=", invariants::join(b));
                CHECK(has_k4);
            }
        });
    }
    MESSAGE("packing pairs enumerated: ", pairs, ", without an improving move: ", stuck);
    CHECK(pairs > 1000);
}

}  // TEST_SUITE
