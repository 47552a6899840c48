#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "packfour/certificate.hpp"
#include "packfour/experiments.hpp"
#include "packfour/generators.hpp"
#include "packfour/graph_io.hpp"
#include "packfour/oracle.hpp"
#include "packfour/pipeline.hpp"

namespace py = pybind11;
using namespace packfour;

namespace {

SSpec to_spec(const py::object& s) {
    if (py::isinstance<py::str>(s)) return parse_sspec(s.cast<std::string>());
    return SSpec(s.cast<std::vector<int>>());
}

py::dict move_dict(const Move& m) {
    py::dict d;
    d["kind"] = m.k4_component ? "k4_component" : "exchange";
    d["remove_a"] = m.remove_a ? py::cast(*m.remove_a) : py::none();
    d["remove_b"] = m.remove_b ? py::cast(*m.remove_b) : py::none();
    d["add_a"] = m.add_a;
    d["add_b"] = m.add_b;
    d["w_before"] = m.w_before;
    d["w_after"] = m.w_after;
    d["gamma_after"] = m.gamma_after;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Certified (1,1,2,2)-packing colorings of claw-free cubic graphs";

    auto& base = py::register_exception<Error>(m, "PackfourError", PyExc_RuntimeError);
    py::register_exception<NotCubic>(m, "NotCubicError", base.ptr());
    py::register_exception<NotClawFree>(m, "NotClawFreeError", base.ptr());
    py::register_exception<StuckOddCycle>(m, "StuckError", base.ptr());
    py::register_exception<SSpecError>(m, "SSpecError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 if (v < 0 || v >= g.order()) throw py::index_error("vertex out of range");
                 auto nb = g.neighbors(v);
                 return std::vector<Vertex>(nb.begin(), nb.end());
             })
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__len__", &Graph::order)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("write_graph6", &write_graph6);
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
    m.def("write_edge_list", &write_edge_list);

    m.def("is_cubic", &is_cubic);
    m.def("find_claw", [](const Graph& g) -> py::object {
        auto c = find_claw(g);
        if (!c) return py::none();
        return py::make_tuple(c->center, std::vector<Vertex>(c->leaves.begin(), c->leaves.end()));
    });
    m.def("list_triangles", [](const Graph& g) {
        std::vector<std::array<Vertex, 3>> out;
        for (const auto& t : list_triangles(g)) out.push_back(t.vertices);
        return out;
    });
    m.def("bfs_distances", [](const Graph& g, Vertex src) {
        std::vector<py::object> out;
        for (Distance d : bfs_distances(g, src)) out.push_back(d == kUnreachable ? py::none() : py::cast(d));
        return out;
    });
    m.def("shortest_odd_cycle", [](const Graph& g) -> py::object {
        auto c = shortest_odd_cycle(g);
        return c ? py::cast(c->vertices) : py::none();
    });

    m.def("complete_k4", &complete_k4);
    m.def("prism", &prism);
    m.def("petersen", &petersen);
    m.def("k33", &k33);
    m.def("cycle_graph", &cycle_graph);
    m.def("diamond_necklace", &diamond_necklace);
    m.def("inflate", &inflate);
    m.def("named_graph", [](const std::string& name, int param) { return named_graph(name, param); },
          py::arg("name"), py::arg("param") = 0);
    m.def("random_cubic",
          [](int n, std::uint64_t seed, bool connected) { return random_cubic(n, seed, {.connected = connected}); },
          py::arg("n"), py::arg("seed"), py::arg("connected") = false);
    m.def("claw_free_corpus",
          [](std::uint64_t seed, int random_count) {
              std::vector<std::pair<std::string, Graph>> out;
              for (auto& e : claw_free_corpus(seed, random_count)) out.emplace_back(e.name, std::move(e.graph));
              return out;
          },
          py::arg("seed") = 1, py::arg("random_count") = kDefaultRandomInflations);

    m.def("verify_spacking",
          [](const Graph& g, const py::object& s, const std::vector<int>& colors) -> py::object {
              auto bad = verify_spacking(g, to_spec(s), Coloring{colors});
              if (!bad) return py::none();
              py::dict d;
              d["u"] = bad->u;
              d["v"] = bad->v;
              d["cls"] = bad->cls;
              d["distance"] = bad->distance;
              d["message"] = bad->describe();
              return d;
          },
          py::arg("graph"), py::arg("s"), py::arg("colors"),
          "None when the coloring (one 1-based class per vertex) is valid, else the smallest violation.");

    m.def("break_triangles", [](const Graph& g) {
        auto r = break_triangles(g);
        py::list trace;
        for (const auto& mv : r.trace) trace.append(move_dict(mv));
        py::dict d;
        d["a"] = r.pair.a;
        d["b"] = r.pair.b;
        d["weight"] = r.pair.weight;
        d["trace"] = trace;
        return d;
    });

    m.def("color",
          [](const Graph& g, bool force) {
              auto r = color_claw_free_cubic(g, {.weights = {}, .force = force});
              py::dict d;
              d["colors"] = r.coloring.color;
              d["certificate"] = r.certificate(g);
              return d;
          },
          py::arg("graph"), py::arg("force") = false,
          "Colors a claw-free cubic graph; colors are 1=1a, 2=1b, 3=2a, 4=2b.");

    m.def("verify_certificate", [](const Graph& g, const std::string& text) {
        auto cert = parse_certificate(text);
        return describes_graph(cert, g) && !verify_spacking(g, cert.spec, cert.coloring).has_value();
    });

    m.def("exists_spacking",
          [](const Graph& g, const py::object& s, int cap) {
              auto r = exists_spacking(g, to_spec(s), cap);
              py::object colors = r.coloring ? py::cast(r.coloring->color) : py::none();
              return py::make_tuple(to_string(r.verdict), colors);
          },
          py::arg("graph"), py::arg("s"), py::arg("cap") = kDefaultVertexCap);

    m.def("experiment_problem2",
          [](std::uint64_t seed, int max_n, int cap, int jobs) { return run_problem2(seed, max_n, cap, jobs).text(); },
          py::arg("seed") = 1, py::arg("max_n") = 14, py::arg("cap") = kDefaultVertexCap, py::arg("jobs") = 1);
}
