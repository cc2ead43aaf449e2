#include "glpdom/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace glpdom {

GraphFormat parse_format(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edgelist") return GraphFormat::edgelist;
    throw InvalidParameter("unknown graph format: " + std::string(name));
}

Graph parse_graph6(std::string_view text) {
    // Strip an optional trailing newline and the optional ">>graph6<<" header.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw ParseError("empty graph6 string", 0);

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw ParseError("truncated graph6 string", pos);
        unsigned char c = text[pos++];
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", pos - 1);
        return c - 63;
    };

    long n;
    if ((unsigned char)text[0] == 126) {
        ++pos;
        if (pos < text.size() && (unsigned char)text[pos] == 126)
            throw ParseError("graph6 order beyond supported range", pos);
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    } else {
        n = next();
    }
    if (n > kMaxVertices)
        throw ParseError("graph6 order exceeds " + std::to_string(kMaxVertices) + " vertices", 0);

    std::vector<std::pair<int, int>> edges;
    int bits = 0, value = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (bits == 0) {
                value = next();
                bits = 6;
            }
            --bits;
            if ((value >> bits) & 1) edges.emplace_back(row, col);
        }
    if (pos != text.size()) throw ParseError("trailing bytes after graph6 data", pos);
    return Graph::from_edges((int)n, edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n < 63) {
        out.push_back((char)(n + 63));
    } else {
        out.push_back(126);
        out.push_back((char)(((n >> 12) & 63) + 63));
        out.push_back((char)(((n >> 6) & 63) + 63));
        out.push_back((char)((n & 63) + 63));
    }
    int bits = 0, value = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            value = (value << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back((char)(value + 63));
                bits = 0;
                value = 0;
            }
        }
    if (bits > 0) out.push_back((char)((value << (6 - bits)) + 63));
    return out;
}

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t offset = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("edgelist header must be \"n m\"", line_start);
            if (n > kMaxVertices)
                throw ParseError("edgelist order exceeds " + std::to_string(kMaxVertices),
                                 line_start);
        } else {
            long u, v;
            if (!(ls >> u >> v)) throw ParseError("edgelist line must be \"u v\"", line_start);
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError("edgelist endpoint out of range", line_start);
            if (u == v) throw ParseError("edgelist self-loop", line_start);
            edges.emplace_back((int)u, (int)v);
        }
    }
    if (n < 0) throw ParseError("edgelist missing header line", 0);
    if ((long)edges.size() != m) throw ParseError("edgelist edge count mismatch", 0);
    return Graph::from_edges((int)n, edges);
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat fmt) {
    return fmt == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string emit_graph(const Graph& g, GraphFormat fmt) {
    return fmt == GraphFormat::graph6 ? emit_graph6(g) : emit_edgelist(g);
}

}  // namespace glpdom
