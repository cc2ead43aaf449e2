#include "doctest.h"
#include "glpdom/glp.hpp"

using namespace glpdom;

TEST_CASE("product construction") {
    // base K_2 with two edgeless pairs gives C_4
    ProductGraph p = build_product(complete_graph(2), {empty_graph(2), empty_graph(2)});
    CHECK(are_isomorphic(p.graph, cycle_graph(4)));

    // trivial factors reproduce the base
    ProductGraph q = build_product(path_graph(3), {complete_graph(1), complete_graph(1), complete_graph(1)});
    CHECK(q.graph == path_graph(3));

    // join of K_1 and K_2
    ProductGraph r = build_product(complete_graph(2), {complete_graph(1), complete_graph(2)});
    CHECK(r.graph == complete_graph(3));

    CHECK_THROWS_AS(build_product(complete_graph(2), {complete_graph(1)}), InvalidParameter);
}

TEST_CASE("layers induce the base") {
    ProductGraph p = build_product(path_graph(3), {complete_graph(2), complete_graph(2), complete_graph(2)});
    VertexSet u = g_layer(p, {0, 0, 0});
    CHECK(vs_size(u) == 3);
    CHECK(are_isomorphic(induced_subgraph(p.graph, u), path_graph(3)));

    ProductGraph q = build_product(complete_graph(2), {complete_graph(1), complete_graph(1)});
    CHECK(g_layer(q, {0, 0}) == q.graph.vertices());

    ProductGraph r = build_product(cycle_graph(4),
                                   {complete_graph(2), complete_graph(1), complete_graph(2), complete_graph(1)});
    VertexSet layer = g_layer(r, {1, 0, 1, 0});
    CHECK(are_isomorphic(induced_subgraph(r.graph, layer), cycle_graph(4)));

    CHECK_THROWS_AS(g_layer(p, {0, 0, 2}), InvalidParameter);
    CHECK_THROWS_AS(g_layer(p, {0, 0}), InvalidParameter);
}

TEST_CASE("locate inverts the block layout") {
    ProductGraph p = build_product(complete_graph(2), {complete_graph(2), complete_graph(2)});
    CHECK(p.locate(0) == std::pair{0, 0});
    CHECK(p.locate(3) == std::pair{1, 1});

    ProductGraph q = build_product(complete_graph(2), {complete_graph(3), complete_graph(2)});
    CHECK(q.locate(4) == std::pair{1, 1});
    CHECK_THROWS_AS(q.locate(5), InvalidParameter);

    for (int v = 0; v < q.graph.order(); ++v) {
        auto [i, u] = q.locate(v);
        CHECK(q.offsets[i] + u == v);
    }
}

TEST_CASE("distance and connectivity lift from the base") {
    Factors fs = {path_graph(2), empty_graph(2), complete_graph(3), path_graph(2)};
    ProductGraph p = build_product(cycle_graph(4), fs);
    for (int x = 0; x < p.graph.order(); ++x)
        for (int y = 0; y < p.graph.order(); ++y) {
            auto [i, u] = p.locate(x);
            auto [j, v] = p.locate(y);
            if (i == j) continue;
            CHECK(distance(p.graph, x, y) == distance(p.base, i, j));
        }
    CHECK(is_connected(p.graph));

    ProductGraph d = build_product(empty_graph(2), {path_graph(2), path_graph(3)});
    CHECK_FALSE(is_connected(d.graph));
    CHECK(d.graph.edge_count() == path_graph(2).edge_count() + path_graph(3).edge_count());
}

TEST_CASE("uniform factors match the standard lexicographic product") {
    Graph f = path_graph(2);
    ProductGraph p = build_product(cycle_graph(3), {f, f, f});
    // C_3[K_2] is K_6
    CHECK(p.graph == complete_graph(6));
}
