#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "packfour/graph.hpp"
#include "packfour/packing.hpp"

namespace packfour {

using DistanceMatrix = std::vector<std::vector<Distance>>;

DistanceMatrix all_pairs_distances(const Graph& g);

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

/// Largest order the oracle searches by default.
inline constexpr int kDefaultVertexCap = 20;

struct OracleResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Coloring> coloring;  // set iff verdict is Yes
};

/// Exhaustive backtracking decision of "g has an S-packing coloring".
///
/// Vertices are assigned in order of descending degree, then id; classes are
/// tried in index order. Among classes sharing the same bound, class i may be
/// opened only after class i-1 is in use. Forward checking removes a class
/// from an unassigned vertex as soon as an assigned same-class vertex lies
/// within the class bound. Unknown is returned only when g.order() exceeds
/// vertex_cap; a Yes coloring has been re-verified.
OracleResult exists_spacking(const Graph& g, const SSpec& s, int vertex_cap = kDefaultVertexCap);

struct BatchVerdict {
    std::size_t index = 0;
    int n = -1;           // -1 when the record failed to parse
    std::string verdict;  // yes | no | unknown | error
    std::string detail;   // coloring, reason, or parse error
    bool candidate = false;
    std::string graph6;
};

struct BatchReport {
    SSpec spec;
    std::vector<BatchVerdict> verdicts;

    /// "index\tn\tverdict\twitness-or-reason" per record.
    std::string tsv() const;
    /// Counts per verdict plus the flagged candidate counterexamples.
    std::string summary_json() const;
};

/// True for the specs whose failure on a claw-free cubic graph would answer
/// an open question: (1,1,2,2) and (1,1,2,3).
bool is_conjecture_spec(const SSpec& s);

/// Decides every graph6 record. Parse failures are recorded per line; "no" on
/// a claw-free cubic graph under a conjecture spec is flagged as a candidate
/// counterexample. Output order follows input order for any jobs count.
BatchReport batch_decide(std::span<const std::string> records, const SSpec& s, int vertex_cap = kDefaultVertexCap,
                         int jobs = 1);

}  // namespace packfour
