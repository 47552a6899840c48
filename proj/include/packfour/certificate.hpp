#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "packfour/graph.hpp"
#include "packfour/odd_cycle_reducer.hpp"
#include "packfour/packing.hpp"
#include "packfour/triangle_breaker.hpp"

namespace packfour {

/// Class names of a (1,1,2,2)-coloring, in class-index order 1..4.
inline const std::vector<std::string> kClassNames = {"1a", "1b", "2a", "2b"};

class RefusesUnverified : public Error {
public:
    explicit RefusesUnverified(Violation v);
    Violation violation;
};

/// Canonical JSON certificate (sorted keys, sorted arrays, no whitespace):
///
///   {"classes":{"1a":[..],"1b":[..],"2a":[..],"2b":[..]},
///    "edges":[[u,v],..], "lemma_trace":[..], "n":N,
///    "reducer_trace":[..], "s_spec":[1,1,2,2], "verified":true}
///
/// The coloring is re-verified against (1,1,2,2) first; RefusesUnverified is
/// thrown instead of writing a certificate for an invalid coloring.
std::string write_certificate(const Graph& g, const Coloring& coloring, std::span<const Move> lemma_trace,
                              std::span<const Absorption> reducer_trace);

struct Certificate {
    int n = 0;
    std::vector<Edge> edges;
    SSpec spec = spec_1122();
    Coloring coloring;
};

/// Reads the graph and classes back from a certificate. Throws Error on a
/// malformed document or a vertex listed in zero or several classes.
Certificate parse_certificate(std::string_view json);

/// The certificate lists exactly g's vertex count and edge set.
bool describes_graph(const Certificate& cert, const Graph& g);

}  // namespace packfour
