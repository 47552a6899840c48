#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "packfour/graph.hpp"

namespace packfour {

/// Vertex weights for the packing-pair potential: k1 for a vertex lying in at
/// least two triangles, k2 for exactly one, 0 for none. Requires k1 > k2 > 0.
struct Weights {
    double k1 = 2.0;
    double k2 = 1.0;

    void validate() const;
};

/// Two disjoint vertex sets together with the cached potential w(A,B) and the
/// number of triangles avoiding A ∪ B (gamma). Both sets are kept sorted.
struct PackingPair {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    double weight = 0.0;
    std::size_t gamma = 0;

    friend bool operator==(const PackingPair&, const PackingPair&) = default;
};

/// Bounded exchange on a packing pair: drop at most one vertex from each side,
/// then add at most two vertices in total. A vertex dropped from one side may
/// be added to the other in the same move.
struct Move {
    std::optional<Vertex> remove_a;
    std::optional<Vertex> remove_b;
    std::vector<Vertex> add_a;
    std::vector<Vertex> add_b;
    // Direct placement inside a K4 component; not an exchange.
    bool k4_component = false;

    double w_before = 0.0;
    double w_after = 0.0;
    std::size_t gamma_after = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

std::string describe(const Move& m);

class NotCubic : public Error {
public:
    NotCubic(Vertex v, int degree);
    Vertex vertex;
    int degree;
};

/// No improving move exists while a triangle survives. Unreachable on cubic
/// inputs outside K4 components; any occurrence is a bug.
class Stuck : public Error {
public:
    Stuck(PackingPair pair, Triangle triangle);
    PackingPair pair;
    Triangle triangle;
};

/// Throws NotCubic naming the first vertex whose degree differs from 3.
void require_cubic(const Graph& g);

double vertex_weight(const Weights& weights, std::span<const int> counts, Vertex v);

/// Builds a pair with weight and gamma computed from scratch.
PackingPair make_packing_pair(const Graph& g, const Weights& weights, std::vector<Vertex> a, std::vector<Vertex> b);

struct PairViolation {
    /// 1: disjoint 2-packings, 2: every member in a triangle,
    /// 3: at most one member per triangle.
    int condition;
    std::vector<Vertex> witnesses;

    std::string describe() const;
    friend bool operator==(const PairViolation&, const PairViolation&) = default;
};

enum class PairScope {
    Whole,
    /// Conditions (2) and (3) are not checked inside K4 components.
    SkipK4Components,
};

/// Empty result means (a, b) is a packing pair.
std::vector<PairViolation> check_packing_pair(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                              PairScope scope = PairScope::Whole);

std::vector<Triangle> surviving_triangles(const Graph& g, const PackingPair& pair);

/// Vertex sets of the K4 components of g.
std::vector<std::vector<Vertex>> k4_components(const Graph& g);

/// Improving moves around the surviving triangle t, in search order: every
/// move that raises w comes first, followed by moves that keep w and lower
/// gamma. Within each group moves are ordered by removals (none, A only,
/// B only, both; ascending ids), then additions (singles before pairs, A
/// before B, ascending ids).
std::vector<Move> enumerate_improving_moves(const Graph& g, const Weights& weights, const PackingPair& pair,
                                            const Triangle& t);

struct TriangleBreakResult {
    PackingPair pair;
    std::vector<Move> trace;
};

/// Starting from (∅, ∅), K4 components receive one vertex in A and one in B;
/// elsewhere the first surviving triangle is repeatedly attacked with the first
/// improving move until no triangle survives. If the moves near the triangle
/// are exhausted, an in-shape search over the whole graph runs before Stuck
/// is thrown.
TriangleBreakResult break_triangles(const Graph& g, const Weights& weights = {});

}  // namespace packfour
