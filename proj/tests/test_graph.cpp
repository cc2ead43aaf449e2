#include "doctest.h"
#include "glpdom/graph.hpp"
#include "glpdom/graph_io.hpp"

#include <random>

using namespace glpdom;

namespace {

Graph star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph::from_edges(n, e);
}

std::vector<Graph> small_corpus() {
    std::vector<Graph> out = {complete_graph(1), complete_graph(2), complete_graph(4),
                              path_graph(1),     path_graph(4),     path_graph(5),
                              cycle_graph(3),    cycle_graph(5),    cycle_graph(6),
                              empty_graph(2),    star(5)};
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + (int)(rng() % 7);
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) e.emplace_back(u, v);
        out.push_back(Graph::from_edges(n, e));
    }
    return out;
}

}  // namespace

TEST_CASE("standard constructors") {
    CHECK(complete_graph(3).edge_count() == 3);
    CHECK(path_graph(1).order() == 1);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(are_isomorphic(circulant_graph(6, {1, 5}), cycle_graph(6)));
    CHECK_THROWS_AS(cycle_graph(2), InvalidParameter);
    CHECK_THROWS_AS(circulant_graph(6, {}), InvalidParameter);
    CHECK_THROWS_AS(circulant_graph(6, {1}), InvalidParameter);  // not closed under negation
    CHECK_THROWS_AS(circulant_graph(6, {0, 6}), InvalidParameter);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(3)) == empty_graph(3));
    CHECK(complement(empty_graph(2)) == complete_graph(2));
    CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    for (const Graph& g : small_corpus()) CHECK(complement(complement(g)) == g);
}

TEST_CASE("induced subgraphs") {
    CHECK(induced_subgraph(path_graph(4), vs_bit(1) | vs_bit(2)) == complete_graph(2));
    CHECK(induced_subgraph(cycle_graph(4), vs_bit(0) | vs_bit(2)) == empty_graph(2));
    CHECK(induced_subgraph(cycle_graph(6), vs_full(4)) == path_graph(4));
    CHECK(induced_subgraph(cycle_graph(4), 0).order() == 0);
}

TEST_CASE("connectivity conventions") {
    CHECK(is_connected(path_graph(5)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    CHECK(is_connected(complete_graph(1)));
    CHECK(is_connected(Graph()));  // order-0 by convention
}

TEST_CASE("distance") {
    CHECK(distance(path_graph(4), 0, 3) == 3);
    CHECK(distance(cycle_graph(6), 2, 2) == 0);
    CHECK_FALSE(distance(empty_graph(2), 0, 1).has_value());

    // triangle inequality on connected graphs
    for (const Graph& g : small_corpus()) {
        if (g.order() > 8 || !is_connected(g)) continue;
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                for (int c = 0; c < g.order(); ++c)
                    CHECK(*distance(g, a, c) <= *distance(g, a, b) + *distance(g, b, c));
    }
}

TEST_CASE("degree stats") {
    CHECK(degree_stats(complete_graph(4)) == std::pair{3, 3});
    CHECK(degree_stats(path_graph(3)) == std::pair{1, 2});
    CHECK(degree_stats(star(5)) == std::pair{1, 4});
    CHECK_THROWS_AS(degree_stats(Graph()), InvalidParameter);
}

TEST_CASE("isomorphism") {
    CHECK(are_isomorphic(cycle_graph(4), circulant_graph(4, {1, 3})));
    CHECK_FALSE(are_isomorphic(path_graph(4), star(4)));
    CHECK_THROWS_AS(are_isomorphic(complete_graph(13), complete_graph(13)), SizeLimitExceeded);

    // reflexive and symmetric on the corpus
    auto corpus = small_corpus();
    for (const Graph& g : corpus) CHECK(are_isomorphic(g, g));
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j)
            CHECK(are_isomorphic(corpus[i], corpus[j]) == are_isomorphic(corpus[j], corpus[i]));
}

TEST_CASE("graph6 round trip against published encodings") {
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(parse_graph6("DQc") == Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
    CHECK(emit_graph6(complete_graph(2)) == "A_");
    CHECK(emit_graph6(complete_graph(4)) == "C~");
    for (const Graph& g : small_corpus()) CHECK(parse_graph6(emit_graph6(g)) == g);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);
}

TEST_CASE("edgelist format") {
    Graph p3 = parse_edgelist("3 2\n0 1\n1 2\n");
    CHECK(p3 == path_graph(3));
    CHECK(parse_edgelist("# comment\n2 0\n") == empty_graph(2));
    CHECK(parse_edgelist(emit_edgelist(cycle_graph(5))) == cycle_graph(5));
    CHECK_THROWS_AS(parse_edgelist("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("hello"), ParseError);
}

TEST_CASE("adjacency is symmetric and irreflexive on the corpus") {
    for (const Graph& g : small_corpus())
        for (int u = 0; u < g.order(); ++u) {
            CHECK_FALSE(g.has_edge(u, u));
            for (int v = 0; v < g.order(); ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
}
