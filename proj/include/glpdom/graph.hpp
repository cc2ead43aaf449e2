#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glpdom {

// A vertex subset of a host graph, one bit per vertex (vertex i = bit i).
// The host is implicit; all graphs are capped at 64 vertices.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoFeasibleSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

inline constexpr VertexSet vs_bit(int v) { return VertexSet{1} << v; }
inline constexpr bool vs_contains(VertexSet s, int v) { return (s >> v) & 1; }
inline constexpr int vs_size(VertexSet s) { return std::popcount(s); }
inline constexpr VertexSet vs_full(int n) {
    return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::vector<int> vs_vertices(VertexSet s);

// Order by cardinality, then by the sorted vertex sequence ({0,3} < {1,2}).
bool vs_lex_less(VertexSet a, VertexSet b);

std::string vs_to_string(VertexSet s);

// Immutable simple undirected graph with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(check_order(n)), adj_(n, 0) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    VertexSet vertices() const { return vs_full(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighbors(int v) const { return adj_[v] | vs_bit(v); }
    bool has_edge(int u, int v) const { return vs_contains(adj_[u], v); }
    int degree(int v) const { return vs_size(adj_[v]); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    static int check_order(int n);
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Standard constructors.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);   // requires n >= 3
Graph empty_graph(int n);
// Jumps must be in 1..n-1 and closed under negation mod n.
Graph circulant_graph(int n, const std::vector<int>& jumps);
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);
// Connectivity of the subgraph induced by s, without relabeling.
bool is_connected_subset(const Graph& g, VertexSet s);
bool is_complete(const Graph& g);

std::optional<int> distance(const Graph& g, int u, int v);

// (min degree, max degree); throws on the order-0 graph.
std::pair<int, int> degree_stats(const Graph& g);

// Backtracking search with degree-sequence pruning; guarded by order.
bool are_isomorphic(const Graph& a, const Graph& b, int guard = 12);

}  // namespace glpdom
