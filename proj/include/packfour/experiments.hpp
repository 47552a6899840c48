#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "packfour/oracle.hpp"
#include "packfour/packing.hpp"

namespace packfour {

struct ExperimentRow {
    std::string name;
    int n = 0;
    std::string method;   // pipeline | oracle
    std::string verdict;  // yes | no | unknown
    std::string detail;
    std::string graph6;
    bool candidate = false;
};

struct ExperimentReport {
    std::string problem;
    SSpec spec;
    std::vector<ExperimentRow> rows;

    std::size_t count(const std::string& verdict) const;
    std::vector<ExperimentRow> candidates() const;
    /// Summary header, one TSV row per graph, then one line per candidate.
    std::string text() const;
};

/// Cubic graphs with every vertex on a 3- or 4-cycle (up to max_n vertices)
/// against (1,1,2,2): forced pipeline first, exact oracle when it gets stuck.
ExperimentReport run_problem1(int max_n, int vertex_cap = kDefaultVertexCap, int jobs = 1);

/// Claw-free cubic corpus graphs with at most max_n vertices against
/// (1,1,2,3) by exact search. Graphs with identical graph6 are decided once.
ExperimentReport run_problem2(std::uint64_t seed, int max_n, int vertex_cap = kDefaultVertexCap, int jobs = 1);

}  // namespace packfour
