#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "packfour/graph.hpp"

namespace packfour {

class SSpecError : public Error {
public:
    enum class Kind { Empty, NotPositive, NotNonDecreasing, Malformed };
    SSpecError(Kind kind, const std::string& what);
    Kind kind;
};

/// Non-decreasing sequence (a_1, ..., a_r) of positive integers. Class i of
/// an S-packing coloring must have pairwise distances strictly above a_i.
class SSpec {
public:
    explicit SSpec(std::vector<int> bounds);

    static SSpec parse(std::string_view text);

    std::size_t size() const { return bounds_.size(); }
    /// Bound for a 1-based class index.
    int bound(int cls) const { return bounds_[static_cast<std::size_t>(cls - 1)]; }
    std::span<const int> bounds() const { return bounds_; }
    std::string to_string() const;

    friend bool operator==(const SSpec&, const SSpec&) = default;

private:
    std::vector<int> bounds_;
};

inline SSpec parse_sspec(std::string_view text) { return SSpec::parse(text); }

/// The headline spec (1,1,2,2): two independent sets and two 2-packings.
SSpec spec_1122();

/// Total map vertex -> 1-based class index.
struct Coloring {
    std::vector<int> color;

    /// Members of each class, indexed 0..r-1 for classes 1..r.
    std::vector<std::vector<Vertex>> classes(std::size_t r) const;
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

class ClassOutOfRange : public Error {
public:
    ClassOutOfRange(Vertex v, int cls, std::size_t r);
    Vertex vertex;
    int cls;
};

struct Violation {
    Vertex u;
    Vertex v;
    int cls;
    Distance distance;

    std::string describe() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Members of s pairwise at distance > k.
bool is_k_packing(const Graph& g, std::span<const Vertex> s, int k);

/// nullopt when c is an S-packing coloring of g, otherwise the violating pair
/// (u < v) that is smallest in lexicographic order. Throws ClassOutOfRange for
/// indices outside 1..r and Error when c is not total on V(g).
std::optional<Violation> verify_spacking(const Graph& g, const SSpec& s, const Coloring& c);

}  // namespace packfour
