#include "packfour/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace packfour {

SelfLoop::SelfLoop(Vertex v) : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}

DuplicateEdge::DuplicateEdge(Vertex a, Vertex b)
    : Error("duplicate edge " + std::to_string(a) + "-" + std::to_string(b)), u(a), v(b) {}

VertexOutOfRange::VertexOutOfRange(Vertex v, int order)
    : Error("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(order)), vertex(v), n(order) {}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw VertexOutOfRange(n, n);
    Graph g;
    g.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n) throw VertexOutOfRange(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRange(v, n);
        if (u == v) throw SelfLoop(u);
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < g.adj_.size(); ++v) {
        auto& list = g.adj_[v];
        std::sort(list.begin(), list.end());
        auto dup = std::adjacent_find(list.begin(), list.end());
        if (dup != list.end()) {
            auto a = static_cast<Vertex>(v);
            throw DuplicateEdge(std::min(a, *dup), std::max(a, *dup));
        }
    }
    g.m_ = edges.size();
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// BFS levels from several sources, optionally stopping after `radius`.
std::vector<Distance> bfs_levels(const Graph& g, std::span<const Vertex> sources, Distance radius) {
    std::vector<Distance> dist(idx(g.order()), kUnreachable);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (dist[idx(s)] != 0) {
            dist[idx(s)] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (dist[idx(u)] >= radius) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[idx(w)] == kUnreachable) {
                dist[idx(w)] = dist[idx(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

// Walks tree parents from v up to (and including) the root.
std::vector<Vertex> path_to_root(const std::vector<Vertex>& parent, Vertex v) {
    std::vector<Vertex> path{v};
    while (parent[idx(v)] != v) {
        v = parent[idx(v)];
        path.push_back(v);
    }
    return path;
}

// Rotate to the smallest vertex and orient toward its smaller cycle neighbor.
OddCycle canonical_cycle(std::vector<Vertex> cycle) {
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
    return OddCycle{std::move(cycle)};
}

}  // namespace

std::vector<Distance> bfs_distances(const Graph& g, Vertex src) {
    const Vertex sources[] = {src};
    return bfs_levels(g, sources, kUnreachable);
}

std::vector<Vertex> vertices_within(const Graph& g, std::span<const Vertex> sources, Distance radius) {
    auto dist = bfs_levels(g, sources, radius);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (dist[idx(v)] != kUnreachable && dist[idx(v)] <= radius) out.push_back(v);
    return out;
}

bool set_distance_at_least(const Graph& g, Vertex v, std::span<const Vertex> s, Distance k) {
    if (s.empty() || k <= 0) return true;
    const Vertex sources[] = {v};
    auto dist = bfs_levels(g, sources, k - 1);
    return std::none_of(s.begin(), s.end(), [&](Vertex u) { return dist[idx(u)] < k; });
}

std::vector<Triangle> list_triangles(const Graph& g) {
    std::vector<Triangle> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto nu = g.neighbors(u);
        for (std::size_t i = 0; i < nu.size(); ++i) {
            if (nu[i] < u) continue;
            for (std::size_t j = i + 1; j < nu.size(); ++j)
                if (g.adjacent(nu[i], nu[j])) out.push_back(Triangle{{u, nu[i], nu[j]}});
        }
    }
    return out;
}

std::vector<int> triangle_membership_counts(const Graph& g) {
    std::vector<int> counts(idx(g.order()), 0);
    for (const auto& t : list_triangles(g))
        for (Vertex v : t.vertices) ++counts[idx(v)];
    return counts;
}

bool is_cubic(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

std::optional<Claw> find_claw(const Graph& g) {
    for (Vertex c = 0; c < g.order(); ++c) {
        auto nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return Claw{c, {nb[i], nb[j], nb[k]}};
            }
    }
    return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    std::vector<Vertex> to_new(idx(g.order()), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] < 0 || kept[i] >= g.order()) throw VertexOutOfRange(kept[i], g.order());
        to_new[idx(kept[i])] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (to_new[idx(u)] >= 0 && to_new[idx(v)] >= 0) edges.emplace_back(to_new[idx(u)], to_new[idx(v)]);
    return {Graph::from_edges(static_cast<int>(kept.size()), edges), std::move(kept)};
}

std::variant<Bipartition, OddCycle> bipartition_or_odd_cycle(const Graph& g) {
    const auto n = idx(g.order());
    std::vector<int> side(n, -1);
    std::vector<Vertex> parent(n, -1);
    Bipartition parts;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (side[idx(root)] >= 0) continue;
        side[idx(root)] = 0;
        parent[idx(root)] = root;
        std::vector<Vertex> component{root};
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (side[idx(w)] >= 0) continue;
                side[idx(w)] = 1 - side[idx(u)];
                parent[idx(w)] = u;
                component.push_back(w);
                queue.push_back(w);
            }
        }
        std::sort(component.begin(), component.end());
        for (Vertex u : component) {
            for (Vertex w : g.neighbors(u)) {
                if (w < u || side[idx(u)] != side[idx(w)]) continue;
                // Same color means same BFS level; the tree paths meet at an
                // ancestor and close an odd cycle through edge u-w.
                auto pu = path_to_root(parent, u);
                auto pw = path_to_root(parent, w);
                while (pu.size() > 1 && pw.size() > 1 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
                    pu.pop_back();
                    pw.pop_back();
                }
                std::vector<Vertex> cycle(pu.begin(), pu.end());
                cycle.insert(cycle.end(), pw.rbegin() + 1, pw.rend());
                return canonical_cycle(std::move(cycle));
            }
            (side[idx(u)] == 0 ? parts.first : parts.second).push_back(u);
        }
    }
    std::sort(parts.first.begin(), parts.first.end());
    std::sort(parts.second.begin(), parts.second.end());
    return parts;
}

std::optional<OddCycle> shortest_odd_cycle(const Graph& g) {
    const auto n = idx(g.order());
    std::optional<OddCycle> best;
    for (Vertex root = 0; root < g.order(); ++root) {
        auto dist = bfs_distances(g, root);
        std::vector<Vertex> parent(n, -1);
        parent[idx(root)] = root;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (v == root || dist[idx(v)] == kUnreachable) continue;
            for (Vertex w : g.neighbors(v))
                if (dist[idx(w)] == dist[idx(v)] - 1) {
                    parent[idx(v)] = w;
                    break;
                }
        }
        Distance best_level = best ? static_cast<Distance>(best->length() / 2) : kUnreachable;
        std::optional<OddCycle> found;
        Distance found_level = kUnreachable;
        for (Vertex u = 0; u < g.order(); ++u) {
            Distance level = dist[idx(u)];
            if (level == kUnreachable || level >= best_level || level >= found_level) continue;
            for (Vertex w : g.neighbors(u)) {
                if (w < u || dist[idx(w)] != level) continue;
                auto pu = path_to_root(parent, u);
                auto pw = path_to_root(parent, w);
                // Only walks whose two tree paths meet at the root are simple.
                std::vector<Vertex> seen(pu.begin(), pu.end() - 1);
                std::sort(seen.begin(), seen.end());
                bool simple = std::none_of(pw.begin(), pw.end() - 1, [&](Vertex x) {
                    return std::binary_search(seen.begin(), seen.end(), x);
                });
                if (!simple) continue;
                std::vector<Vertex> cycle(pu.rbegin(), pu.rend());
                cycle.insert(cycle.end(), pw.begin(), pw.end() - 1);
                found = canonical_cycle(std::move(cycle));
                found_level = level;
                break;
            }
        }
        if (found) best = std::move(found);
        if (best && best->length() == 3) break;
    }
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(idx(g.order()), 0);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[idx(root)]) continue;
        const Vertex sources[] = {root};
        auto comp = vertices_within(g, sources, kUnreachable);
        for (Vertex v : comp) seen[idx(v)] = 1;
        out.push_back(std::move(comp));
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edges(a.order() + b.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[idx(u)], perm[idx(v)]);
    return Graph::from_edges(g.order(), edges);
}

}  // namespace packfour
