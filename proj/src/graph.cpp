#include "glpdom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace glpdom {

std::vector<int> vs_vertices(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

bool vs_lex_less(VertexSet a, VertexSet b) {
    int ca = vs_size(a), cb = vs_size(b);
    if (ca != cb) return ca < cb;
    while (a && b) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

std::string vs_to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : vs_vertices(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

int Graph::check_order(int n) {
    if (n < 0 || n > kMaxVertices)
        throw InvalidParameter("graph order must be in 0.." + std::to_string(kMaxVertices));
    return n;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidParameter("edge endpoint out of range");
        if (u == v) throw InvalidParameter("self-loop not allowed");
        g.adj_[u] |= vs_bit(v);
        g.adj_[v] |= vs_bit(u);
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += vs_size(adj_[v]);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : vs_vertices(adj_[u] & ~vs_full(u + 1)))
            out.emplace_back(u, v);
    return out;
}

Graph complete_graph(int n) {
    if (n < 1) throw InvalidParameter("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
    if (n < 1) throw InvalidParameter("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidParameter("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, e);
}

Graph empty_graph(int n) {
    if (n < 0) throw InvalidParameter("order must be nonnegative");
    return Graph(n);
}

Graph circulant_graph(int n, const std::vector<int>& jumps) {
    if (n < 1) throw InvalidParameter("circulant needs n >= 1");
    if (jumps.empty()) throw InvalidParameter("circulant needs a nonempty jump set");
    std::vector<bool> present(n, false);
    for (int j : jumps) {
        if (j < 1 || j > n - 1) throw InvalidParameter("circulant jump out of 1..n-1");
        present[j] = true;
    }
    for (int j = 1; j < n; ++j)
        if (present[j] != present[n - j])
            throw InvalidParameter("circulant jump set not closed under negation mod n");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int j : jumps) {
            int w = (v + j) % n;
            if (v < w) e.emplace_back(v, w);
        }
    return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edges(a.order() + b.order(), e);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) e.emplace_back(u, v);
    return Graph::from_edges(g.order(), e);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s & ~g.vertices()) throw InvalidParameter("vertex set exceeds host graph");
    std::vector<int> label = vs_vertices(s);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < (int)label.size(); ++i)
        for (int j = i + 1; j < (int)label.size(); ++j)
            if (g.has_edge(label[i], label[j])) e.emplace_back(i, j);
    return Graph::from_edges((int)label.size(), e);
}

bool is_connected_subset(const Graph& g, VertexSet s) {
    if (vs_size(s) <= 1) return true;
    VertexSet seen = vs_bit(std::countr_zero(s));
    for (;;) {
        VertexSet frontier = 0;
        for (int v : vs_vertices(seen)) frontier |= g.neighbors(v);
        frontier = (frontier & s) | seen;
        if (frontier == seen) break;
        seen = frontier;
    }
    return seen == s;
}

bool is_connected(const Graph& g) { return is_connected_subset(g, g.vertices()); }

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.closed_neighbors(v) != g.vertices()) return false;
    return true;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw InvalidParameter("distance: vertex out of range");
    if (u == v) return 0;
    VertexSet seen = vs_bit(u);
    VertexSet frontier = seen;
    int d = 0;
    while (frontier) {
        ++d;
        VertexSet next = 0;
        for (int x : vs_vertices(frontier)) next |= g.neighbors(x);
        next &= ~seen;
        if (vs_contains(next, v)) return d;
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

std::pair<int, int> degree_stats(const Graph& g) {
    if (g.order() == 0) throw InvalidParameter("degree_stats on the order-0 graph");
    int mn = kMaxVertices, mx = 0;
    for (int v = 0; v < g.order(); ++v) {
        mn = std::min(mn, g.degree(v));
        mx = std::max(mx, g.degree(v));
    }
    return {mn, mx};
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map, int u,
                        VertexSet used) {
    if (u == a.order()) return true;
    for (int w = 0; w < b.order(); ++w) {
        if (vs_contains(used, w)) continue;
        if (a.degree(u) != b.degree(w)) continue;
        bool ok = true;
        for (int p = 0; p < u && ok; ++p)
            if (a.has_edge(p, u) != b.has_edge(map[p], w)) ok = false;
        if (!ok) continue;
        map[u] = w;
        if (extend_isomorphism(a, b, map, u + 1, used | vs_bit(w))) return true;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b, int guard) {
    if (a.order() > guard || b.order() > guard)
        throw SizeLimitExceeded("isomorphism guard exceeded (order > " + std::to_string(guard) +
                                ")");
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.order(), -1);
    return extend_isomorphism(a, b, map, 0, 0);
}

}  // namespace glpdom
