#include "packfour/certificate.hpp"

#include <algorithm>

#include "json.hpp"

namespace packfour {

using nlohmann::json;

namespace {

json optional_vertex(const std::optional<Vertex>& v) { return v ? json(*v) : json(nullptr); }

json move_json(const Move& m) {
    auto add_a = m.add_a;
    auto add_b = m.add_b;
    std::sort(add_a.begin(), add_a.end());
    std::sort(add_b.begin(), add_b.end());
    return {{"kind", m.k4_component ? "k4_component" : "exchange"},
            {"removeA", optional_vertex(m.remove_a)},
            {"removeB", optional_vertex(m.remove_b)},
            {"addA", add_a},
            {"addB", add_b},
            {"w_before", m.w_before},
            {"w_after", m.w_after},
            {"gamma_after", m.gamma_after}};
}

json absorption_json(const Absorption& a) {
    return {{"vertex", a.vertex},
            {"side", to_string(a.side)},
            {"cycle_length", a.cycle.length()},
            {"cycle", a.cycle.vertices}};
}

}  // namespace

RefusesUnverified::RefusesUnverified(Violation v)
    : Error("refusing to certify an invalid coloring: " + v.describe()), violation(v) {}

std::string write_certificate(const Graph& g, const Coloring& coloring, std::span<const Move> lemma_trace,
                              std::span<const Absorption> reducer_trace) {
    const auto spec = spec_1122();
    if (auto bad = verify_spacking(g, spec, coloring)) throw RefusesUnverified(*bad);

    json classes = json::object();
    auto members = coloring.classes(spec.size());
    for (std::size_t c = 0; c < members.size(); ++c) classes[kClassNames[c]] = members[c];

    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json lemma = json::array();
    for (const auto& m : lemma_trace) lemma.push_back(move_json(m));
    json reducer = json::array();
    for (const auto& a : reducer_trace) reducer.push_back(absorption_json(a));

    json doc = {{"n", g.order()},
                {"edges", std::move(edges)},
                {"s_spec", std::vector<int>(spec.bounds().begin(), spec.bounds().end())},
                {"classes", std::move(classes)},
                {"lemma_trace", std::move(lemma)},
                {"reducer_trace", std::move(reducer)},
                {"verified", true}};
    return doc.dump();
}

Certificate parse_certificate(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        Certificate cert;
        cert.n = doc.at("n").get<int>();
        if (cert.n < 0) throw Error("certificate has negative n");
        for (const auto& e : doc.at("edges")) cert.edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
        if (doc.contains("s_spec")) cert.spec = SSpec(doc.at("s_spec").get<std::vector<int>>());
        const auto& classes = doc.at("classes");
        cert.coloring.color.assign(static_cast<std::size_t>(cert.n), 0);
        for (std::size_t c = 0; c < cert.spec.size(); ++c) {
            const std::string name = c < kClassNames.size() && cert.spec == spec_1122() ? kClassNames[c]
                                                                                         : std::to_string(c + 1);
            if (!classes.contains(name)) continue;
            for (const auto& item : classes.at(name)) {
                auto v = item.get<Vertex>();
                if (v < 0 || v >= cert.n) throw Error("certificate lists vertex " + std::to_string(v) + " out of range");
                auto& slot = cert.coloring.color[static_cast<std::size_t>(v)];
                if (slot != 0) throw Error("certificate lists vertex " + std::to_string(v) + " in two classes");
                slot = static_cast<int>(c) + 1;
            }
        }
        for (std::size_t v = 0; v < cert.coloring.color.size(); ++v)
            if (cert.coloring.color[v] == 0) throw Error("certificate leaves vertex " + std::to_string(v) + " uncolored");
        return cert;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed certificate: ") + e.what());
    }
}

bool describes_graph(const Certificate& cert, const Graph& g) {
    if (cert.n != g.order()) return false;
    auto edges = cert.edges;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    return edges == g.edges();
}

}  // namespace packfour
