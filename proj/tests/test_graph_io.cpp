#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "packfour/certificate.hpp"
#include "packfour/generators.hpp"
#include "packfour/graph_io.hpp"
#include "packfour/pipeline.hpp"

using namespace packfour;

namespace {

// Straight transcription of the graph6 definition: N(n) then R(x) where x
// lists the upper triangle column by column, padded to a multiple of 6.
std::string reference_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (std::size_t b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
        out += static_cast<char>(63 + value);
    }
    return out;
}

}  // namespace

TEST_SUITE("graph_io") {

TEST_CASE("graph6 fixed encodings") {
    CHECK(parse_graph6("C~") == complete_k4());
    CHECK(write_graph6(complete_k4()) == "C~");
    CHECK(reference_graph6(complete_k4()) == "C~");
    CHECK(write_graph6(Graph{}) == "?");
    CHECK(parse_graph6("?").order() == 0);

    auto empty5 = parse_graph6("D??");
    CHECK(empty5.order() == 5);
    CHECK(empty5.size() == 0);

    CHECK(parse_graph6(">>graph6<<C~") == complete_k4());
    // Same labeling as networkx.petersen_graph(); string from networkx.to_graph6_bytes.
    CHECK(write_graph6(petersen()) == "IheA@GUAo");
    CHECK(write_graph6(petersen()) == reference_graph6(petersen()));
}

TEST_CASE("graph6 errors") {
    try {
        parse_graph6("C~x");
        FAIL("accepted long body");
    } catch (const Graph6Error& e) {
        CHECK(e.kind == Graph6Error::Kind::LengthMismatch);
        CHECK(e.expected == 1);
        CHECK(e.got == 2);
    }
    try {
        parse_graph6("C\x01");
        FAIL("accepted control byte");
    } catch (const Graph6Error& e) {
        CHECK(e.kind == Graph6Error::Kind::BadChar);
        CHECK(e.position == 1);
    }
    try {
        parse_graph6("~~??????");
        FAIL("accepted 8-byte header");
    } catch (const Graph6Error& e) {
        CHECK(e.kind == Graph6Error::Kind::UnsupportedHeader);
    }
    CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
}

TEST_CASE("graph6 round trip on 500 random graphs with n <= 40") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = trial % 41;
        auto g = fixtures::random_graph(n, 0.1 + 0.8 * (trial % 7) / 7.0, rng);
        auto text = write_graph6(g);
        CHECK(text == reference_graph6(g));
        CHECK(parse_graph6(text) == g);
        if (n <= 62) CHECK(text.size() == 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    }
}

TEST_CASE("graph6 extended header for n >= 63") {
    std::mt19937_64 rng(9);
    for (int n : {63, 64, 100, 300}) {
        auto g = fixtures::random_graph(n, 0.05, rng);
        auto text = write_graph6(g);
        CHECK(text.front() == '~');
        CHECK(text == reference_graph6(g));
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("graph6 round trip on the corpus") {
    for (const auto& e : claw_free_corpus(1)) CHECK(parse_graph6(write_graph6(e.graph)) == e.graph);
}

TEST_CASE("edge lists") {
    auto k4 = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(k4 == complete_k4());
    CHECK(parse_edge_list("# comment\n 4 6 \n0 1 # trailing\n0 2\n0 3\n\n1 2\n1 3\n2 3") == complete_k4());
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), SelfLoop);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), VertexOutOfRange);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK(parse_edge_list(write_edge_list(petersen())) == petersen());
}

TEST_CASE("format sniffing and record reading") {
    CHECK(sniff_format("C~\nC~\n") == InputFormat::Graph6);
    CHECK(sniff_format("# hi\n4 6\n0 1\n") == InputFormat::EdgeList);
    auto records = read_graphs("C~\n\n# skip\nbad line\nEhEG\n");
    REQUIRE(records.size() == 3);
    CHECK(records[0].graph.has_value());
    CHECK(records[1].line == 4);
    CHECK_FALSE(records[1].graph.has_value());
    CHECK_FALSE(records[1].error.empty());
    CHECK(records[2].line == 5);
}

TEST_CASE("dot output mentions every edge") {
    auto res = color_claw_free_cubic(prism());
    auto dot = write_dot(prism(), &res.coloring, &kClassNames);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("4 -- 5") != std::string::npos);
}

TEST_CASE("certificates") {
    auto k4 = complete_k4();
    auto res = color_claw_free_cubic(k4);
    auto text = res.certificate(k4);
    auto cert = parse_certificate(text);
    CHECK(cert.n == 4);
    CHECK(cert.spec == spec_1122());
    CHECK(describes_graph(cert, k4));
    CHECK_FALSE(describes_graph(cert, prism()));
    CHECK_FALSE(describes_graph(cert, inflate(k4)));
    CHECK_FALSE(verify_spacking(k4, cert.spec, cert.coloring).has_value());
    for (const auto& members : cert.coloring.classes(4)) CHECK(members.size() == 1);
    // Keys are sorted and output is compact, so identical runs give identical bytes.
    CHECK(text.rfind("{\"classes\":", 0) == 0);
    CHECK(text == color_claw_free_cubic(k4).certificate(k4));

    auto p = prism();
    auto pc = parse_certificate(color_claw_free_cubic(p).certificate(p));
    auto sizes = pc.coloring.classes(4);
    CHECK(sizes[0].size() == 2);
    CHECK(sizes[1].size() == 2);
    CHECK(sizes[2].size() == 1);
    CHECK(sizes[3].size() == 1);

    Coloring bad{{1, 1, 3, 4}};
    try {
        write_certificate(k4, bad, {}, {});
        FAIL("certified an invalid coloring");
    } catch (const RefusesUnverified& e) {
        CHECK(e.violation.u == 0);
        CHECK(e.violation.v == 1);
        CHECK(e.violation.cls == 1);
    }

    CHECK_THROWS_AS(parse_certificate("{"), Error);
    CHECK_THROWS_AS(parse_certificate(R"({"n":2,"edges":[],"classes":{"1a":[0]}})"), Error);
    CHECK_THROWS_AS(parse_certificate(R"({"n":2,"edges":[],"classes":{"1a":[0,1],"1b":[1]}})"), Error);
    CHECK_THROWS_AS(parse_certificate(R"({"n":2,"edges":[],"classes":{"1a":[0,7]}})"), Error);
}

}  // TEST_SUITE
