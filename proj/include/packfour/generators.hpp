#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "packfour/graph.hpp"

namespace packfour {

class BadParameter : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class RetryLimit : public Error {
public:
    using Error::Error;
};

/// Fixed-width engine so seeded outputs agree across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Triangle replacement: vertex v becomes triangle {3v, 3v+1, 3v+2} and its
/// incident edges, sorted by neighbor id, leave from ports 0, 1, 2.
Graph inflate(const Graph& g);

Graph complete_k4();
/// Triangles 012 and 345 with rungs 0-3, 1-4, 2-5.
Graph prism();
/// Outer cycle 0..4, spokes i-(i+5), inner pentagram (5+i)-(5+(i+2)%5).
Graph petersen();
/// Sides {0,1,2} and {3,4,5}.
Graph k33();
Graph cycle_graph(int n);
/// k >= 2 diamonds; diamond i is 4i..4i+3 with 4i and 4i+3 of degree two
/// inside it, and 4i+3 is joined to 4(i+1 mod k).
Graph diamond_necklace(int k);
/// C_k x K2: outer cycle 0..k-1, inner cycle k..2k-1, rungs i-(k+i).
Graph circular_ladder(int k);
/// Cycle 0..2k-1 with chords i-(i+k).
Graph mobius_ladder(int k);

/// "k4", "prism", "petersen", "k33", "cycle", "necklace", "ladder",
/// "mobius"; the last four take `param`.
Graph named_graph(std::string_view name, int param = 0);

struct RandomCubicOptions {
    bool connected = false;
    int max_attempts = 100000;
};

/// Configuration model: 3n stubs paired uniformly, rejecting loops and
/// multi-edges (and disconnected samples if requested).
Graph random_cubic(int n, std::uint64_t seed, RandomCubicOptions options = {});

/// Replaces every vertex of the cubic base by a gadget: a triangle, or
/// K_{3,3} minus a vertex whose three degree-2 vertices become ports (each of
/// its vertices lies on a 4-cycle and each degree-3 vertex centers a claw).
/// Ports take the incident edges in sorted neighbor order.
Graph substitute_gadgets(const Graph& base, const std::vector<bool>& use_k33);

/// Cubic graph whose every vertex lies on a 3- or 4-cycle: random cubic base
/// of order base_n with a seeded gadget choice per vertex (at least one
/// K_{3,3}-minus-vertex gadget).
Graph problem1_family(int base_n, std::uint64_t seed);

/// Every vertex lies on a cycle of length 3 or 4.
bool every_vertex_on_short_cycle(const Graph& g);

struct CorpusEntry {
    std::string name;
    Graph graph;
};

inline constexpr int kDefaultRandomInflations = 140;

/// K4, prism, necklaces 2..8, inflations of K4/K33/prism/Petersen, and
/// inflations of `random_count` seeded random cubic bases of order 4..20.
std::vector<CorpusEntry> claw_free_corpus(std::uint64_t seed, int random_count = kDefaultRandomInflations);

/// Cubic graphs with every vertex on a 3- or 4-cycle, up to max_n vertices:
/// gadget substitutions of K4, circular ladders and Möbius ladders.
std::vector<CorpusEntry> problem1_corpus(int max_n);

}  // namespace packfour
