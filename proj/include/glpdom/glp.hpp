#pragma once

#include <utility>
#include <vector>

#include "glpdom/graph.hpp"

namespace glpdom {

// Ordered tuple of factor graphs, aligned with the base graph's vertices.
using Factors = std::vector<Graph>;

// The generalized lexicographic product base[factors]: vertex i of the base
// is replaced by factors[i], with complete joins across base edges. Product
// vertices are laid out block by block in base order.
struct ProductGraph {
    Graph graph;
    Graph base;
    Factors factors;
    std::vector<int> offsets;  // offsets[i] = first product vertex of block i

    int block_of(int v) const;
    // product vertex -> (base index, factor-local vertex)
    std::pair<int, int> locate(int v) const;
    VertexSet block_mask(int i) const;
};

ProductGraph build_product(const Graph& base, const Factors& factors);

// One factor-local choice per block; the returned set induces a base copy.
VertexSet g_layer(const ProductGraph& p, const std::vector<int>& choice);

}  // namespace glpdom
