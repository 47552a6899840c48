#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "packfour/graph.hpp"
#include "packfour/packing.hpp"

namespace packfour {

class Graph6Error : public Error {
public:
    enum class Kind { BadChar, LengthMismatch, UnsupportedHeader, TooLarge };
    Graph6Error(Kind kind, const std::string& what, std::size_t position = 0, std::size_t expected = 0,
                std::size_t got = 0);
    Kind kind;
    std::size_t position;
    std::size_t expected;
    std::size_t got;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line;  // 1-based
};

inline constexpr int kGraph6MaxOrder = 258047;

/// Decodes one graph6 record. Accepts an optional ">>graph6<<" prefix and
/// both the one-byte (n <= 62) and four-byte (n <= 258047) size headers.
/// Padding bits in the last byte are ignored.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding with zero padding bits.
std::string write_graph6(const Graph& g);

/// "n m" on the first line, then m lines "u v". Text after '#' is ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Graphviz rendering; with a coloring, each vertex is labeled by its class.
std::string write_dot(const Graph& g, const Coloring* coloring = nullptr,
                      const std::vector<std::string>* class_names = nullptr);

enum class InputFormat { Auto, Graph6, EdgeList };

/// graph6 lines start with a byte >= 63 and contain no whitespace; anything
/// else is treated as an edge list.
InputFormat sniff_format(std::string_view text);

/// One record of a batch input: the graph, or the error it raised.
struct GraphRecord {
    std::size_t line = 0;  // 1-based line of the record start
    std::string source;    // graph6 text, or the edge list
    std::optional<Graph> graph;
    std::string error;
};

/// graph6 input yields one record per non-empty line; an edge list is a
/// single record.
std::vector<GraphRecord> read_graphs(std::string_view text, InputFormat format = InputFormat::Auto);

}  // namespace packfour
