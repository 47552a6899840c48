#include "packfour/packing.hpp"

#include <algorithm>
#include <charconv>

namespace packfour {

SSpecError::SSpecError(Kind k, const std::string& what) : Error(what), kind(k) {}

SSpec::SSpec(std::vector<int> bounds) : bounds_(std::move(bounds)) {
    if (bounds_.empty()) throw SSpecError(SSpecError::Kind::Empty, "S-spec is empty");
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (bounds_[i] < 1)
            throw SSpecError(SSpecError::Kind::NotPositive,
                             "S-spec entry " + std::to_string(i + 1) + " is not positive");
        if (i > 0 && bounds_[i] < bounds_[i - 1])
            throw SSpecError(SSpecError::Kind::NotNonDecreasing,
                             "S-spec is not non-decreasing at entry " + std::to_string(i + 1));
    }
}

SSpec SSpec::parse(std::string_view text) {
    std::vector<int> bounds;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty()) throw SSpecError(SSpecError::Kind::Empty, "S-spec is empty");
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        std::string_view digits = token;
        bool negative = !digits.empty() && digits.front() == '-';
        if (negative) digits.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
            throw SSpecError(SSpecError::Kind::Malformed, "malformed S-spec entry '" + std::string(token) + "'");
        bounds.push_back(negative ? -value : value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return SSpec(std::move(bounds));
}

std::string SSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(bounds_[i]);
    }
    return out;
}

SSpec spec_1122() { return SSpec({1, 1, 2, 2}); }

std::vector<std::vector<Vertex>> Coloring::classes(std::size_t r) const {
    std::vector<std::vector<Vertex>> out(r);
    for (std::size_t v = 0; v < color.size(); ++v) {
        auto cls = color[v];
        if (cls >= 1 && static_cast<std::size_t>(cls) <= r)
            out[static_cast<std::size_t>(cls - 1)].push_back(static_cast<Vertex>(v));
    }
    return out;
}

ClassOutOfRange::ClassOutOfRange(Vertex v, int c, std::size_t r)
    : Error("vertex " + std::to_string(v) + " has class " + std::to_string(c) + " outside 1.." + std::to_string(r)),
      vertex(v), cls(c) {}

std::string Violation::describe() const {
    return "vertices " + std::to_string(u) + " and " + std::to_string(v) + " share class " + std::to_string(cls) +
           " at distance " + std::to_string(distance);
}

bool is_k_packing(const Graph& g, std::span<const Vertex> s, int k) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto dist = bfs_distances(g, s[i]);
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || dist[static_cast<std::size_t>(s[j])] <= k) return false;
    }
    return true;
}

std::optional<Violation> verify_spacking(const Graph& g, const SSpec& s, const Coloring& c) {
    if (c.color.size() != static_cast<std::size_t>(g.order()))
        throw Error("coloring covers " + std::to_string(c.color.size()) + " vertices, graph has " +
                    std::to_string(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        int cls = c.color[static_cast<std::size_t>(v)];
        if (cls < 1 || static_cast<std::size_t>(cls) > s.size()) throw ClassOutOfRange(v, cls, s.size());
    }
    for (Vertex u = 0; u < g.order(); ++u) {
        int cls = c.color[static_cast<std::size_t>(u)];
        auto dist = bfs_distances(g, u);
        for (Vertex v = u + 1; v < g.order(); ++v) {
            auto d = dist[static_cast<std::size_t>(v)];
            if (c.color[static_cast<std::size_t>(v)] == cls && d <= s.bound(cls)) return Violation{u, v, cls, d};
        }
    }
    return std::nullopt;
}

}  // namespace packfour
