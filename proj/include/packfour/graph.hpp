#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "packfour/error.hpp"

namespace packfour {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Distance = int;

/// Distance between vertices in different components.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

class SelfLoop : public Error {
public:
    explicit SelfLoop(Vertex v);
    Vertex vertex;
};

class DuplicateEdge : public Error {
public:
    DuplicateEdge(Vertex u, Vertex v);
    Vertex u;
    Vertex v;
};

class VertexOutOfRange : public Error {
public:
    VertexOutOfRange(Vertex v, int n);
    Vertex vertex;
    int n;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are strictly increasing, so neighbor iteration order is
/// lexicographic everywhere downstream.
class Graph {
public:
    Graph() = default;

    /// Validating constructor. Rejects loops, repeated edges (in either
    /// orientation) and endpoints outside 0..n-1.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

/// Vertices u < v < w, pairwise adjacent.
struct Triangle {
    std::array<Vertex, 3> vertices;

    bool contains(Vertex v) const { return vertices[0] == v || vertices[1] == v || vertices[2] == v; }
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Simple cycle x_1 .. x_{2k+1}; consecutive entries and the last/first pair
/// are adjacent.
struct OddCycle {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    friend bool operator==(const OddCycle&, const OddCycle&) = default;
};

struct Claw {
    Vertex center;
    std::array<Vertex, 3> leaves;
    friend bool operator==(const Claw&, const Claw&) = default;
};

struct Bipartition {
    std::vector<Vertex> first;   // holds each component's smallest vertex
    std::vector<Vertex> second;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;  // strictly increasing
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex src);

/// Multi-source bounded BFS: every vertex at distance <= radius from some
/// source, sorted by id.
std::vector<Vertex> vertices_within(const Graph& g, std::span<const Vertex> sources, Distance radius);

/// min over u in s of dist(v, u) >= k; vacuously true for empty s.
bool set_distance_at_least(const Graph& g, Vertex v, std::span<const Vertex> s, Distance k);

std::vector<Triangle> list_triangles(const Graph& g);
std::vector<int> triangle_membership_counts(const Graph& g);

bool is_cubic(const Graph& g);

/// Smallest center, then lexicographically smallest leaf triple.
std::optional<Claw> find_claw(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Per-component BFS 2-coloring, or an odd cycle when one exists.
std::variant<Bipartition, OddCycle> bipartition_or_odd_cycle(const Graph& g);

/// A minimum-length odd cycle (hence chordless), rotated to start at its
/// smallest vertex and oriented toward the smaller of that vertex's two cycle
/// neighbors. Returns nullopt iff g is bipartite. O(n·m).
std::optional<OddCycle> shortest_odd_cycle(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Vertex-disjoint union, relabeling the second graph after the first.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace packfour
