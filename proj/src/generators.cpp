#include "packfour/generators.hpp"

#include <algorithm>
#include <bit>

namespace packfour {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Position of u in v's sorted neighbor list.
Vertex port_of(const Graph& g, Vertex v, Vertex u) {
    auto nb = g.neighbors(v);
    return static_cast<Vertex>(std::lower_bound(nb.begin(), nb.end(), u) - nb.begin());
}

void require_cubic_input(const Graph& g, const char* what) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3)
            throw BadParameter(std::string(what) + ": vertex " + std::to_string(v) + " has degree " +
                               std::to_string(g.degree(v)));
}

}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

Graph inflate(const Graph& g) {
    require_cubic_input(g, "inflate");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v) {
        edges.emplace_back(3 * v, 3 * v + 1);
        edges.emplace_back(3 * v, 3 * v + 2);
        edges.emplace_back(3 * v + 1, 3 * v + 2);
    }
    for (auto [u, v] : g.edges()) edges.emplace_back(3 * u + port_of(g, u, v), 3 * v + port_of(g, v, u));
    return Graph::from_edges(3 * g.order(), edges);
}

Graph complete_k4() {
    const Edge edges[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return Graph::from_edges(4, edges);
}

Graph prism() {
    const Edge edges[] = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
    return Graph::from_edges(6, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

Graph k33() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 3; ++i)
        for (Vertex j = 3; j < 6; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(6, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw BadParameter("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph diamond_necklace(int k) {
    if (k < 2) throw BadParameter("diamond necklace needs at least 2 diamonds");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i) {
        Vertex b = 4 * i;
        edges.emplace_back(b, b + 1);
        edges.emplace_back(b, b + 2);
        edges.emplace_back(b + 1, b + 2);
        edges.emplace_back(b + 1, b + 3);
        edges.emplace_back(b + 2, b + 3);
        edges.emplace_back(b + 3, 4 * ((i + 1) % k));
    }
    return Graph::from_edges(4 * k, edges);
}

Graph circular_ladder(int k) {
    if (k < 3) throw BadParameter("circular ladder needs k >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        edges.emplace_back(k + i, k + (i + 1) % k);
        edges.emplace_back(i, k + i);
    }
    return Graph::from_edges(2 * k, edges);
}

Graph mobius_ladder(int k) {
    if (k < 2) throw BadParameter("Möbius ladder needs k >= 2");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 2 * k; ++i) edges.emplace_back(i, (i + 1) % (2 * k));
    for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, i + k);
    return Graph::from_edges(2 * k, edges);
}

Graph named_graph(std::string_view name, int param) {
    if (name == "k4") return complete_k4();
    if (name == "prism") return prism();
    if (name == "petersen") return petersen();
    if (name == "k33") return k33();
    if (name == "cycle") return cycle_graph(param);
    if (name == "necklace") return diamond_necklace(param);
    if (name == "ladder") return circular_ladder(param);
    if (name == "mobius") return mobius_ladder(param);
    throw UnknownName("unknown graph name '" + std::string(name) + "'");
}

Graph random_cubic(int n, std::uint64_t seed, RandomCubicOptions options) {
    if (n < 4 || n % 2 != 0) throw BadParameter("random cubic graph needs an even order >= 4, got " + std::to_string(n));
    Rng rng(seed);
    std::vector<Vertex> stubs(static_cast<std::size_t>(3 * n));
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<Vertex>(i / 3);

    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        for (std::size_t i = stubs.size() - 1; i > 0; --i) std::swap(stubs[i], stubs[uniform_below(rng, i + 1)]);
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
            auto u = std::min(stubs[i], stubs[i + 1]);
            auto v = std::max(stubs[i], stubs[i + 1]);
            simple = u != v && std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end();
            edges.emplace_back(u, v);
        }
        if (!simple) continue;
        auto g = Graph::from_edges(n, edges);
        if (options.connected && connected_components(g).size() != 1) continue;
        return g;
    }
    throw RetryLimit("no simple cubic pairing on " + std::to_string(n) + " vertices after " +
                     std::to_string(options.max_attempts) + " attempts");
}

Graph substitute_gadgets(const Graph& base, const std::vector<bool>& use_k33) {
    require_cubic_input(base, "gadget substitution");
    if (use_k33.size() != idx(base.order())) throw BadParameter("one gadget choice per base vertex required");
    std::vector<Vertex> offset(idx(base.order()) + 1, 0);
    for (Vertex v = 0; v < base.order(); ++v) offset[idx(v) + 1] = offset[idx(v)] + (use_k33[idx(v)] ? 5 : 3);

    std::vector<Edge> edges;
    for (Vertex v = 0; v < base.order(); ++v) {
        Vertex o = offset[idx(v)];
        if (use_k33[idx(v)]) {
            for (Vertex l = 0; l < 3; ++l)
                for (Vertex r = 3; r < 5; ++r) edges.emplace_back(o + l, o + r);
        } else {
            edges.emplace_back(o, o + 1);
            edges.emplace_back(o, o + 2);
            edges.emplace_back(o + 1, o + 2);
        }
    }
    for (auto [u, v] : base.edges())
        edges.emplace_back(offset[idx(u)] + port_of(base, u, v), offset[idx(v)] + port_of(base, v, u));
    return Graph::from_edges(offset.back(), edges);
}

Graph problem1_family(int base_n, std::uint64_t seed) {
    auto base = random_cubic(base_n, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<bool> use_k33(idx(base.order()));
    for (std::size_t i = 0; i < use_k33.size(); ++i) use_k33[i] = uniform_below(rng, 2) == 1;
    if (std::find(use_k33.begin(), use_k33.end(), true) == use_k33.end()) use_k33[0] = true;
    return substitute_gadgets(base, use_k33);
}

bool every_vertex_on_short_cycle(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        bool found = false;
        for (std::size_t i = 0; i < nb.size() && !found; ++i)
            for (std::size_t j = i + 1; j < nb.size() && !found; ++j) {
                if (g.adjacent(nb[i], nb[j])) found = true;
                for (Vertex w : g.neighbors(nb[i]))
                    if (w != v && g.adjacent(w, nb[j])) found = true;
            }
        if (!found) return false;
    }
    return true;
}

std::vector<CorpusEntry> claw_free_corpus(std::uint64_t seed, int random_count) {
    std::vector<CorpusEntry> out;
    out.push_back({"k4", complete_k4()});
    out.push_back({"prism", prism()});
    for (int k = 2; k <= 8; ++k) out.push_back({"necklace-" + std::to_string(k), diamond_necklace(k)});
    out.push_back({"infl-k4", inflate(complete_k4())});
    out.push_back({"infl-k33", inflate(k33())});
    out.push_back({"infl-prism", inflate(prism())});
    out.push_back({"infl-petersen", inflate(petersen())});
    Rng rng(seed);
    for (int i = 0; i < random_count; ++i) {
        int base_n = 4 + 2 * static_cast<int>(uniform_below(rng, 9));
        std::uint64_t base_seed = rng();
        out.push_back({"infl-random-" + std::to_string(i) + "-n" + std::to_string(base_n),
                       inflate(random_cubic(base_n, base_seed))});
    }
    return out;
}

std::vector<CorpusEntry> problem1_corpus(int max_n) {
    std::vector<CorpusEntry> out;
    const auto k4 = complete_k4();
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (12 + 2 * std::popcount(mask) > max_n) continue;
        std::vector<bool> flags(4);
        for (unsigned i = 0; i < 4; ++i) flags[i] = (mask >> i) & 1u;
        out.push_back({"gadget-k4-" + std::to_string(mask), substitute_gadgets(k4, flags)});
    }
    for (int k = 3; 2 * k <= max_n; ++k) out.push_back({"ladder-" + std::to_string(k), circular_ladder(k)});
    for (int k = 3; 2 * k <= max_n; ++k) out.push_back({"mobius-" + std::to_string(k), mobius_ladder(k)});
    return out;
}

}  // namespace packfour
