#include "packfour/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace packfour {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::size_t body_length(std::size_t n) { return (n * (n - 1) / 2 + 5) / 6; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

// Whitespace-separated integers of one line; nullopt on any other token.
std::optional<std::vector<long long>> integers(std::string_view line) {
    std::vector<long long> out;
    line = trim(line);
    while (!line.empty()) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc{}) return std::nullopt;
        auto used = static_cast<std::size_t>(ptr - line.data());
        if (used < line.size() && !std::isspace(static_cast<unsigned char>(line[used]))) return std::nullopt;
        out.push_back(value);
        line = trim(line.substr(used));
    }
    return out;
}

std::string_view strip_comment(std::string_view line) { return line.substr(0, line.find('#')); }

}  // namespace

Graph6Error::Graph6Error(Kind k, const std::string& what, std::size_t pos, std::size_t exp, std::size_t g)
    : Error(what), kind(k), position(pos), expected(exp), got(g) {}

ParseError::ParseError(std::size_t l, const std::string& what)
    : Error("line " + std::to_string(l) + ": " + what), line(l) {}

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(kGraph6Prefix)) line.remove_prefix(kGraph6Prefix.size());
    for (std::size_t i = 0; i < line.size(); ++i) {
        auto c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw Graph6Error(Graph6Error::Kind::BadChar, "graph6: invalid byte at position " + std::to_string(i), i);
    }
    auto value = [&](std::size_t i) { return static_cast<std::size_t>(static_cast<unsigned char>(line[i]) - 63); };
    if (line.empty()) throw Graph6Error(Graph6Error::Kind::LengthMismatch, "graph6: empty record", 0, 1, 0);

    std::size_t n = 0;
    std::size_t pos = 0;
    if (value(0) < 63) {
        n = value(0);
        pos = 1;
    } else {
        if (line.size() > 1 && value(1) == 63)
            throw Graph6Error(Graph6Error::Kind::UnsupportedHeader, "graph6: 8-byte size header not supported", 1);
        if (line.size() < 4)
            throw Graph6Error(Graph6Error::Kind::LengthMismatch, "graph6: truncated size header", 0, 4, line.size());
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        pos = 4;
    }
    const std::size_t expected = body_length(n);
    const std::size_t got = line.size() - pos;
    if (got != expected)
        throw Graph6Error(Graph6Error::Kind::LengthMismatch,
                          "graph6: expected " + std::to_string(expected) + " body bytes, got " + std::to_string(got),
                          pos, expected, got);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if ((value(pos + k / 6) >> (5 - k % 6)) & 1u)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    if (n > static_cast<std::size_t>(kGraph6MaxOrder))
        throw Graph6Error(Graph6Error::Kind::TooLarge, "graph6: order " + std::to_string(n) + " exceeds 258047");
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else {
        out += '~';
        out += static_cast<char>(63 + ((n >> 12) & 63));
        out += static_cast<char>(63 + ((n >> 6) & 63));
        out += static_cast<char>(63 + (n & 63));
    }
    std::vector<unsigned> body(body_length(n), 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) body[k / 6] |= 1u << (5 - k % 6);
    for (unsigned b : body) out += static_cast<char>(63 + b);
    return out;
}

Graph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    std::optional<std::pair<long long, long long>> header;
    std::vector<Edge> edges;
    std::size_t last = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto line = trim(strip_comment(lines[i]));
        if (line.empty()) continue;
        const std::size_t number = i + 1;
        last = number;
        auto values = integers(line);
        if (!values || values->size() != 2) throw ParseError(number, "expected two integers");
        if (!header) {
            if ((*values)[0] < 0 || (*values)[1] < 0) throw ParseError(number, "negative header value");
            header.emplace((*values)[0], (*values)[1]);
            continue;
        }
        if (static_cast<long long>(edges.size()) == header->second)
            throw ParseError(number, "more than " + std::to_string(header->second) + " edges");
        auto fits = [](long long v) { return v >= -(1LL << 30) && v <= (1LL << 30); };
        if (!fits((*values)[0]) || !fits((*values)[1])) throw ParseError(number, "vertex id out of range");
        edges.emplace_back(static_cast<Vertex>((*values)[0]), static_cast<Vertex>((*values)[1]));
    }
    if (!header) throw ParseError(1, "missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != header->second)
        throw ParseError(last + 1, "expected " + std::to_string(header->second) + " edges, found " +
                                       std::to_string(edges.size()));
    if (header->first > (1LL << 30)) throw ParseError(1, "vertex count too large");
    return Graph::from_edges(static_cast<int>(header->first), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string write_dot(const Graph& g, const Coloring* coloring, const std::vector<std::string>* class_names) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (coloring) {
            int cls = coloring->color[static_cast<std::size_t>(v)];
            std::string label = class_names && cls >= 1 && static_cast<std::size_t>(cls) <= class_names->size()
                                    ? (*class_names)[static_cast<std::size_t>(cls - 1)]
                                    : std::to_string(cls);
            out << " [label=\"" << v << ":" << label << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

InputFormat sniff_format(std::string_view text) {
    for (auto line : split_lines(text)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (t.starts_with(kGraph6Prefix)) return InputFormat::Graph6;
        bool printable = std::all_of(t.begin(), t.end(), [](char c) {
            auto u = static_cast<unsigned char>(c);
            return u >= 63 && u <= 126;
        });
        return printable ? InputFormat::Graph6 : InputFormat::EdgeList;
    }
    return InputFormat::Graph6;
}

std::vector<GraphRecord> read_graphs(std::string_view text, InputFormat format) {
    if (format == InputFormat::Auto) format = sniff_format(text);
    std::vector<GraphRecord> records;
    if (format == InputFormat::EdgeList) {
        GraphRecord r{1, std::string(text), std::nullopt, {}};
        try {
            r.graph = parse_edge_list(text);
        } catch (const Error& e) {
            r.error = e.what();
        }
        records.push_back(std::move(r));
        return records;
    }
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto t = trim(lines[i]);
        if (t.empty() || t.front() == '#') continue;
        GraphRecord r{i + 1, std::string(t), std::nullopt, {}};
        try {
            r.graph = parse_graph6(t);
        } catch (const Error& e) {
            r.error = e.what();
        }
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace packfour
