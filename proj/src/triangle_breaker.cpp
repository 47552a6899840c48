#include "packfour/triangle_breaker.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace packfour {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string join(std::span<const Vertex> vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

constexpr char kFree = 0;
constexpr char kSideA = 1;
constexpr char kSideB = 2;

struct Addition {
    Vertex vertex;
    char side;
};

// Mutable search state over one graph. Marks record which side (if any) each
// vertex is on; weight and gamma are maintained incrementally.
class PairSearch {
public:
    PairSearch(const Graph& g, const Weights& weights, const PackingPair& start)
        : g_(g), weights_(weights), triangles_(list_triangles(g)), counts_(triangle_membership_counts(g)),
          triangles_of_(idx(g.order())), mark_(idx(g.order()), kFree), in_k4_(idx(g.order()), 0) {
        for (std::size_t i = 0; i < triangles_.size(); ++i)
            for (Vertex v : triangles_[i].vertices) triangles_of_[idx(v)].push_back(i);
        for (const auto& comp : k4_components(g))
            for (Vertex v : comp) in_k4_[idx(v)] = 1;
        for (Vertex v : start.a) mark_[idx(v)] = kSideA;
        for (Vertex v : start.b) mark_[idx(v)] = kSideB;
        recompute();
    }

    double weight() const { return weight_; }
    std::size_t gamma() const { return gamma_; }
    bool in_k4(Vertex v) const { return in_k4_[idx(v)] != 0; }

    PackingPair pair() const {
        PackingPair p;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (mark_[idx(v)] == kSideA) p.a.push_back(v);
            if (mark_[idx(v)] == kSideB) p.b.push_back(v);
        }
        p.weight = weight_;
        p.gamma = gamma_;
        return p;
    }

    std::optional<Triangle> first_surviving() const {
        for (const auto& t : triangles_)
            if (surviving(t)) return t;
        return std::nullopt;
    }

    // Marks both vertices and refreshes the cached potential.
    Move place_k4(Vertex a, Vertex b) {
        Move m;
        m.k4_component = true;
        m.add_a = {a};
        m.add_b = {b};
        m.w_before = weight_;
        mark_[idx(a)] = kSideA;
        mark_[idx(b)] = kSideB;
        recompute();
        m.w_after = weight_;
        m.gamma_after = gamma_;
        return m;
    }

    // Visits valid in-shape moves around t (or across the whole graph when t
    // is null) in search order. visit(move, dw, dgamma) returns true to stop.
    template <class Visit>
    void scan(const Triangle* t, Visit&& visit) {
        std::vector<Vertex> pool;
        std::vector<Vertex> removable_a;
        std::vector<Vertex> removable_b;
        std::vector<Vertex> region;
        if (t) {
            pool = vertices_within(g_, t->vertices, 3);
            region = vertices_within(g_, t->vertices, 5);
        } else {
            region.resize(idx(g_.order()));
            for (Vertex v = 0; v < g_.order(); ++v) region[idx(v)] = v;
            pool = region;
        }
        std::erase_if(pool, [&](Vertex v) { return counts_[idx(v)] == 0 || in_k4(v); });
        for (Vertex v : region) {
            if (in_k4(v)) continue;
            if (mark_[idx(v)] == kSideA) removable_a.push_back(v);
            if (mark_[idx(v)] == kSideB) removable_b.push_back(v);
        }

        std::vector<std::optional<Vertex>> options_a{std::nullopt};
        std::vector<std::optional<Vertex>> options_b{std::nullopt};
        options_a.insert(options_a.end(), removable_a.begin(), removable_a.end());
        options_b.insert(options_b.end(), removable_b.begin(), removable_b.end());

        std::vector<std::pair<std::optional<Vertex>, std::optional<Vertex>>> removals;
        removals.emplace_back(std::nullopt, std::nullopt);
        for (std::size_t i = 1; i < options_a.size(); ++i) removals.emplace_back(options_a[i], std::nullopt);
        for (std::size_t j = 1; j < options_b.size(); ++j) removals.emplace_back(std::nullopt, options_b[j]);
        for (std::size_t i = 1; i < options_a.size(); ++i)
            for (std::size_t j = 1; j < options_b.size(); ++j) removals.emplace_back(options_a[i], options_b[j]);

        for (auto [ra, rb] : removals) {
            std::vector<Vertex> available;
            for (Vertex v : pool)
                if (mark_[idx(v)] == kFree || v == ra || v == rb) available.push_back(v);
            const bool removes = ra || rb;

            auto removals_local = [&](std::span<const Addition> adds) {
                auto near_some = [&](Vertex r) {
                    return std::any_of(adds.begin(), adds.end(), [&](const Addition& x) { return within_two(r, x.vertex); });
                };
                return (!ra || near_some(*ra)) && (!rb || near_some(*rb));
            };
            auto try_adds = [&](std::span<const Addition> adds) {
                for (const auto& x : adds) {
                    if (x.vertex == ra && x.side == kSideA) return false;
                    if (x.vertex == rb && x.side == kSideB) return false;
                }
                if (removes && !removals_local(adds)) return false;
                double dw = 0.0;
                long dgamma = 0;
                if (!evaluate(ra, rb, adds, dw, dgamma)) return false;
                Move m;
                m.remove_a = ra;
                m.remove_b = rb;
                for (const auto& x : adds) (x.side == kSideA ? m.add_a : m.add_b).push_back(x.vertex);
                m.w_before = weight_;
                m.w_after = weight_ + dw;
                m.gamma_after = static_cast<std::size_t>(static_cast<long>(gamma_) + dgamma);
                return visit(m, dw, dgamma);
            };

            for (Vertex v : available)
                for (char side : {kSideA, kSideB}) {
                    const Addition adds[] = {{v, side}};
                    if (try_adds(adds)) return;
                }
            // Without a removal, any valid pair of additions contains a valid
            // single addition that was already offered.
            if (!removes) continue;
            for (std::size_t i = 0; i < available.size(); ++i)
                for (std::size_t j = i + 1; j < available.size(); ++j)
                    for (char s1 : {kSideA, kSideB})
                        for (char s2 : {kSideA, kSideB}) {
                            const Addition adds[] = {{available[i], s1}, {available[j], s2}};
                            if (try_adds(adds)) return;
                        }
        }
    }

    void apply(const Move& m) {
        if (m.remove_a) mark_[idx(*m.remove_a)] = kFree;
        if (m.remove_b) mark_[idx(*m.remove_b)] = kFree;
        for (Vertex v : m.add_a) mark_[idx(v)] = kSideA;
        for (Vertex v : m.add_b) mark_[idx(v)] = kSideB;
        weight_ = m.w_after;
        gamma_ = m.gamma_after;
    }

    double tolerance() const { return 1e-9 * std::max(1.0, std::abs(weights_.k1)); }

private:
    bool surviving(const Triangle& t) const {
        return std::all_of(t.vertices.begin(), t.vertices.end(), [&](Vertex v) { return mark_[idx(v)] == kFree; });
    }

    void recompute() {
        weight_ = 0.0;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (mark_[idx(v)] != kFree) weight_ += vertex_weight(weights_, counts_, v);
        gamma_ = static_cast<std::size_t>(
            std::count_if(triangles_.begin(), triangles_.end(), [&](const Triangle& t) { return surviving(t); }));
    }

    bool within_two(Vertex u, Vertex v) const {
        if (u == v || g_.adjacent(u, v)) return true;
        for (Vertex w : g_.neighbors(u))
            if (g_.adjacent(w, v)) return true;
        return false;
    }

    // Tentatively applies the move to the marks, checks the three packing-pair
    // conditions around the touched vertices, and restores the marks.
    bool evaluate(std::optional<Vertex> ra, std::optional<Vertex> rb, std::span<const Addition> adds, double& dw,
                  long& dgamma) {
        std::vector<std::pair<Vertex, char>> saved;
        auto set = [&](Vertex v, char side) {
            saved.emplace_back(v, mark_[idx(v)]);
            mark_[idx(v)] = side;
        };
        auto restore = [&] {
            for (auto it = saved.rbegin(); it != saved.rend(); ++it) mark_[idx(it->first)] = it->second;
        };
        auto old_mark = [&](Vertex v) -> char {
            if (v == ra) return kSideA;
            if (v == rb) return kSideB;
            for (const auto& x : adds)
                if (x.vertex == v) return kFree;
            return mark_[idx(v)];
        };

        if (ra) set(*ra, kFree);
        if (rb) set(*rb, kFree);
        for (const auto& x : adds) {
            if (mark_[idx(x.vertex)] != kFree) {
                restore();
                return false;
            }
            set(x.vertex, x.side);
        }

        bool ok = true;
        for (const auto& x : adds) {
            for (Vertex u : g_.neighbors(x.vertex)) {
                if (mark_[idx(u)] == x.side) ok = false;
                for (Vertex w : g_.neighbors(u))
                    if (w != x.vertex && mark_[idx(w)] == x.side) ok = false;
            }
            for (std::size_t ti : triangles_of_[idx(x.vertex)]) {
                const auto& t = triangles_[ti].vertices;
                int marked = 0;
                for (Vertex v : t) marked += mark_[idx(v)] != kFree;
                if (marked > 1) ok = false;
            }
            if (!ok) break;
        }

        if (ok) {
            dw = 0.0;
            for (const auto& x : adds) dw += vertex_weight(weights_, counts_, x.vertex);
            if (ra) dw -= vertex_weight(weights_, counts_, *ra);
            if (rb) dw -= vertex_weight(weights_, counts_, *rb);

            std::vector<std::size_t> touched;
            auto touch = [&](Vertex v) {
                touched.insert(touched.end(), triangles_of_[idx(v)].begin(), triangles_of_[idx(v)].end());
            };
            if (ra) touch(*ra);
            if (rb) touch(*rb);
            for (const auto& x : adds) touch(x.vertex);
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            dgamma = 0;
            for (std::size_t ti : touched) {
                const auto& t = triangles_[ti].vertices;
                bool after = surviving(triangles_[ti]);
                bool before = std::all_of(t.begin(), t.end(), [&](Vertex v) { return old_mark(v) == kFree; });
                dgamma += static_cast<long>(after) - static_cast<long>(before);
            }
        }
        restore();
        return ok;
    }

    const Graph& g_;
    Weights weights_;
    std::vector<Triangle> triangles_;
    std::vector<int> counts_;
    std::vector<std::vector<std::size_t>> triangles_of_;
    std::vector<char> mark_;
    std::vector<char> in_k4_;
    double weight_ = 0.0;
    std::size_t gamma_ = 0;
};

// First move raising w; failing that, the first that keeps w and lowers gamma.
std::optional<Move> first_improving(PairSearch& search, const Triangle* t) {
    const double eps = search.tolerance();
    std::optional<Move> tie;
    std::optional<Move> best;
    search.scan(t, [&](const Move& m, double dw, long dgamma) {
        if (dw > eps) {
            best = m;
            return true;
        }
        if (!tie && std::abs(dw) <= eps && dgamma < 0) tie = m;
        return false;
    });
    return best ? best : tie;
}

}  // namespace

void Weights::validate() const {
    if (!(k2 > 0.0) || !(k1 > k2)) throw Error("weights must satisfy k1 > k2 > 0");
}

std::string describe(const Move& m) {
    std::string out = m.k4_component ? "k4" : "move";
    if (m.remove_a) out += " -A" + std::to_string(*m.remove_a);
    if (m.remove_b) out += " -B" + std::to_string(*m.remove_b);
    if (!m.add_a.empty()) out += " +A" + join(m.add_a);
    if (!m.add_b.empty()) out += " +B" + join(m.add_b);
    return out;
}

NotCubic::NotCubic(Vertex v, int d)
    : Error("graph is not cubic: vertex " + std::to_string(v) + " has degree " + std::to_string(d)), vertex(v),
      degree(d) {}

Stuck::Stuck(PackingPair p, Triangle t)
    : Error("no improving move for surviving triangle " + join(t.vertices) + " with A=" + join(p.a) +
            " B=" + join(p.b)),
      pair(std::move(p)), triangle(t) {}

void require_cubic(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) throw NotCubic(v, g.degree(v));
}

double vertex_weight(const Weights& weights, std::span<const int> counts, Vertex v) {
    int c = counts[idx(v)];
    if (c >= 2) return weights.k1;
    if (c == 1) return weights.k2;
    return 0.0;
}

PackingPair make_packing_pair(const Graph& g, const Weights& weights, std::vector<Vertex> a, std::vector<Vertex> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    auto counts = triangle_membership_counts(g);
    PackingPair p{std::move(a), std::move(b), 0.0, 0};
    for (Vertex v : p.a) p.weight += vertex_weight(weights, counts, v);
    for (Vertex v : p.b) p.weight += vertex_weight(weights, counts, v);
    p.gamma = surviving_triangles(g, p).size();
    return p;
}

std::string PairViolation::describe() const {
    static constexpr const char* kWhat[] = {"", "not disjoint 2-packings", "member outside every triangle",
                                            "triangle holds two members"};
    return std::string("condition (") + std::to_string(condition) + ") " + kWhat[condition] + ": " + join(witnesses);
}

std::vector<PairViolation> check_packing_pair(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                              PairScope scope) {
    std::vector<PairViolation> out;
    std::vector<char> mark(idx(g.order()), 0);
    std::vector<char> skip(idx(g.order()), 0);
    if (scope == PairScope::SkipK4Components)
        for (const auto& comp : k4_components(g))
            for (Vertex v : comp) skip[idx(v)] = 1;
    for (Vertex v : a) {
        if (v < 0 || v >= g.order()) throw VertexOutOfRange(v, g.order());
        mark[idx(v)] |= 1;
    }
    for (Vertex v : b) {
        if (v < 0 || v >= g.order()) throw VertexOutOfRange(v, g.order());
        if (mark[idx(v)] & 1) out.push_back({1, {v}});
        mark[idx(v)] |= 2;
    }
    for (auto side : {a, b}) {
        for (std::size_t i = 0; i < side.size(); ++i) {
            auto dist = bfs_distances(g, side[i]);
            for (std::size_t j = i + 1; j < side.size(); ++j)
                if (dist[idx(side[j])] < 3)
                    out.push_back({1, {std::min(side[i], side[j]), std::max(side[i], side[j])}});
        }
    }
    auto counts = triangle_membership_counts(g);
    for (Vertex v = 0; v < g.order(); ++v)
        if (mark[idx(v)] && !skip[idx(v)] && counts[idx(v)] == 0) out.push_back({2, {v}});
    for (const auto& t : list_triangles(g)) {
        if (skip[idx(t.vertices[0])]) continue;
        int members = 0;
        for (Vertex v : t.vertices) members += mark[idx(v)] != 0;
        if (members > 1) out.push_back({3, {t.vertices.begin(), t.vertices.end()}});
    }
    return out;
}

std::vector<Triangle> surviving_triangles(const Graph& g, const PackingPair& pair) {
    std::vector<char> marked(idx(g.order()), 0);
    for (Vertex v : pair.a) marked[idx(v)] = 1;
    for (Vertex v : pair.b) marked[idx(v)] = 1;
    auto all = list_triangles(g);
    std::erase_if(all, [&](const Triangle& t) {
        return marked[idx(t.vertices[0])] || marked[idx(t.vertices[1])] || marked[idx(t.vertices[2])];
    });
    return all;
}

std::vector<std::vector<Vertex>> k4_components(const Graph& g) {
    auto comps = connected_components(g);
    std::erase_if(comps, [&](const std::vector<Vertex>& c) {
        return c.size() != 4 || std::any_of(c.begin(), c.end(), [&](Vertex v) { return g.degree(v) != 3; });
    });
    return comps;
}

std::vector<Move> enumerate_improving_moves(const Graph& g, const Weights& weights, const PackingPair& pair,
                                            const Triangle& t) {
    weights.validate();
    PairSearch search(g, weights, pair);
    const double eps = search.tolerance();
    std::vector<Move> gains;
    std::vector<Move> ties;
    search.scan(&t, [&](const Move& m, double dw, long dgamma) {
        if (dw > eps)
            gains.push_back(m);
        else if (std::abs(dw) <= eps && dgamma < 0)
            ties.push_back(m);
        return false;
    });
    gains.insert(gains.end(), ties.begin(), ties.end());
    return gains;
}

TriangleBreakResult break_triangles(const Graph& g, const Weights& weights) {
    weights.validate();
    require_cubic(g);
    PairSearch search(g, weights, PackingPair{});
    TriangleBreakResult result;
    for (const auto& comp : k4_components(g)) result.trace.push_back(search.place_k4(comp[0], comp[1]));

    while (auto t = search.first_surviving()) {
        auto move = first_improving(search, &*t);
        if (!move) move = first_improving(search, nullptr);
        if (!move) throw Stuck(search.pair(), *t);
        search.apply(*move);
        result.trace.push_back(std::move(*move));
    }
    result.pair = search.pair();
    return result;
}

}  // namespace packfour
