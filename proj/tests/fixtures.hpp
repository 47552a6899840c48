#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share nothing with the library beyond the Graph container.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <iterator>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "packfour/graph.hpp"
#include "packfour/packing.hpp"

namespace fixtures {

using packfour::Edge;
using packfour::Graph;
using packfour::Vertex;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline Graph make(int n, std::initializer_list<Edge> edges) {
    std::vector<Edge> list(edges);
    return Graph::from_edges(n, list);
}

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline std::vector<std::array<Vertex, 3>> brute_triangles(const Graph& g) {
    std::vector<std::array<Vertex, 3>> out;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) out.push_back({a, b, c});
    return out;
}

inline bool brute_claw_free(const Graph& g) {
    for (int c = 0; c < g.order(); ++c) {
        auto nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[j]) && !g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return false;
    }
    return true;
}

// Length of the shortest odd simple cycle by enumerating every simple cycle
// through its smallest vertex. Exponential; keep n small.
inline std::optional<std::size_t> brute_shortest_odd_cycle(const Graph& g) {
    std::optional<std::size_t> best;
    const int n = g.order();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::function<void(Vertex, Vertex, std::size_t)> dfs = [&](Vertex start, Vertex v, std::size_t len) {
        for (Vertex w : g.neighbors(v)) {
            if (w == start && len >= 3 && len % 2 == 1) {
                if (!best || len < *best) best = len;
            }
            if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            dfs(start, w, len + 1);
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(s, s, 1);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return best;
}

inline bool brute_is_k_packing(const Graph& g, const std::vector<Vertex>& s, int k) {
    auto d = floyd_warshall(g);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (d[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])] <= k) return false;
    return true;
}

// Tries all r^n colorings. Only for tiny graphs.
inline bool brute_spacking_exists(const Graph& g, const packfour::SSpec& s) {
    auto d = floyd_warshall(g);
    const int n = g.order();
    const int r = static_cast<int>(s.size());
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> go = [&](int v) {
        if (v == n) return true;
        for (int k = 0; k < r; ++k) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (c[static_cast<std::size_t>(u)] == k && d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <= s.bound(k + 1))
                    ok = false;
            if (!ok) continue;
            c[static_cast<std::size_t>(v)] = k;
            if (go(v + 1)) return true;
        }
        return false;
    };
    return go(0);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline bool disjoint(std::vector<Vertex> a, std::vector<Vertex> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Vertex> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.empty();
}

}  // namespace fixtures
