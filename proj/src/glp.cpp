#include "glpdom/glp.hpp"

#include <algorithm>

namespace glpdom {

int ProductGraph::block_of(int v) const {
    auto it = std::upper_bound(offsets.begin(), offsets.end(), v);
    return (int)(it - offsets.begin()) - 1;
}

std::pair<int, int> ProductGraph::locate(int v) const {
    if (v < 0 || v >= graph.order()) throw InvalidParameter("locate: vertex out of range");
    int i = block_of(v);
    return {i, v - offsets[i]};
}

VertexSet ProductGraph::block_mask(int i) const {
    int lo = offsets[i];
    int hi = lo + factors[i].order();
    return vs_full(hi) & ~vs_full(lo);
}

ProductGraph build_product(const Graph& base, const Factors& factors) {
    if ((int)factors.size() != base.order())
        throw InvalidParameter("factor count must equal base order");
    std::vector<int> offsets;
    int total = 0;
    for (const Graph& f : factors) {
        if (f.order() < 1) throw InvalidParameter("every factor must have order >= 1");
        offsets.push_back(total);
        total += f.order();
    }
    if (total > kMaxVertices) throw SizeLimitExceeded("product order exceeds 64 vertices");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < base.order(); ++i)
        for (auto [u, v] : factors[i].edges()) edges.emplace_back(offsets[i] + u, offsets[i] + v);
    for (auto [i, j] : base.edges())
        for (int u = 0; u < factors[i].order(); ++u)
            for (int v = 0; v < factors[j].order(); ++v)
                edges.emplace_back(offsets[i] + u, offsets[j] + v);

    return ProductGraph{Graph::from_edges(total, edges), base, factors, std::move(offsets)};
}

VertexSet g_layer(const ProductGraph& p, const std::vector<int>& choice) {
    if ((int)choice.size() != p.base.order())
        throw InvalidParameter("g_layer: one choice per factor required");
    VertexSet s = 0;
    for (int i = 0; i < p.base.order(); ++i) {
        if (choice[i] < 0 || choice[i] >= p.factors[i].order())
            throw InvalidParameter("g_layer: choice out of range in block " + std::to_string(i));
        s |= vs_bit(p.offsets[i] + choice[i]);
    }
    return s;
}

}  // namespace glpdom
