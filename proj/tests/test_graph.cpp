#include <catch2/catch_amalgamated.hpp>

#include <indpoly/graph.hpp>

#include <random>

#include "test_support.hpp"

using namespace indpoly;

namespace {

bool is_cycle(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

TEST_CASE("make_graph builds simple graphs and rejects bad input") {
    Graph c4 = Graph::make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.order() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4 == cycle_graph(4));

    Graph k1 = Graph::make(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph claw = Graph::make(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(claw == complete_bipartite(1, 3));
    CHECK(claw.degree(0) == 3);

    // duplicate pairs collapse
    CHECK(Graph::make(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);

    CHECK_THROWS_AS(Graph::make(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::make(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::make(-1, {}), std::invalid_argument);
}

TEST_CASE("induced subgraphs relabel densely in order") {
    Graph claw = complete_bipartite(1, 3);
    Graph leaves = induced_subgraph(claw, {1, 2, 3});
    CHECK(leaves == edgeless_graph(3));

    Graph c4 = cycle_graph(4);
    CHECK(induced_subgraph(c4, {0, 1, 2, 3}) == c4);

    Graph c7 = cycle_graph(7);
    CHECK(induced_subgraph(c7, {2, 3, 4, 5}) == path_graph(4));

    CHECK_THROWS_AS(induced_subgraph(c4, {0, 9}), std::invalid_argument);
}

TEST_CASE("deleting a closed neighborhood") {
    Graph claw = complete_bipartite(1, 3);
    CHECK(delete_closed_neighborhood(claw, {0}).order() == 0);

    Graph c7 = cycle_graph(7);
    CHECK(delete_closed_neighborhood(c7, {0}) == path_graph(4));

    CHECK(delete_closed_neighborhood(c7, {}) == c7);
}

TEST_CASE("edge and vertex edits") {
    Graph k4 = complete_graph(4);
    Graph k4e = delete_edge(k4, 0, 1);
    CHECK(k4e.edge_count() == 5);
    CHECK_FALSE(k4e.has_edge(0, 1));

    CHECK(delete_edge(add_edge(path_graph(4), 0, 3), 0, 3) == path_graph(4));
    CHECK(add_edge(k4, 0, 1) == k4);  // already present

    CHECK(delete_vertex(cycle_graph(4), 3) == path_graph(3));

    CHECK_THROWS_AS(delete_edge(path_graph(3), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(path_graph(3), 1, 1), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(5)) == edgeless_graph(5));
    CHECK(is_cycle(complement(cycle_graph(5))));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testsupport::random_graph(rng, 1 + trial % 9, 0.4);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("disjoint union and Zykov sum") {
    Graph e6 = edgeless_graph(1);
    for (int i = 1; i < 6; ++i) e6 = disjoint_union(e6, edgeless_graph(1));
    CHECK(e6 == edgeless_graph(6));

    Graph four_c5 = cycle_graph(5);
    for (int i = 1; i < 4; ++i) four_c5 = disjoint_union(four_c5, cycle_graph(5));
    CHECK(four_c5.order() == 20);
    CHECK(four_c5.edge_count() == 20);
    CHECK(connected_components(four_c5).size() == 4);

    CHECK(disjoint_union(four_c5, Graph{}) == four_c5);

    CHECK(zykov_sum(complete_graph(1), complete_graph(1)) == complete_graph(2));
    Graph joined = zykov_sum(complete_graph(10), edgeless_graph(6));
    CHECK(joined.order() == 16);
    CHECK(joined.edge_count() == 105);
    CHECK(zykov_sum(cycle_graph(5), Graph{}) == cycle_graph(5));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph a = testsupport::random_graph(rng, 1 + trial % 7, 0.5);
        Graph b = testsupport::random_graph(rng, 1 + (trial * 3) % 7, 0.5);
        CHECK(zykov_sum(a, b).edge_count() ==
              a.edge_count() + b.edge_count() + a.order() * b.order());
    }
}

TEST_CASE("pendant construction") {
    Graph k3s = star_graph(complete_graph(3));
    CHECK(k3s.order() == 6);
    CHECK(k3s.edge_count() == 6);

    CHECK(star_graph(complete_graph(1)) == complete_graph(2));

    Graph c5s = star_graph(cycle_graph(5));
    CHECK(c5s.order() == 10);
    CHECK(c5s.edge_count() == 10);
    for (Vertex v = 0; v < 5; ++v) CHECK(c5s.degree(v) == 3);

    CHECK_THROWS_AS(star_graph(Graph{}), std::invalid_argument);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testsupport::random_graph(rng, 1 + trial % 8, 0.4);
        Graph gs = star_graph(g);
        CHECK(static_cast<int>(pendant_edges(gs).size()) == g.order());
        CHECK(pendant_edges_form_perfect_matching(gs));
    }
}

TEST_CASE("girth, bipartiteness, trees and pendant edges") {
    CHECK(girth(cycle_graph(7)) == 7);
    CHECK_FALSE(is_bipartite(cycle_graph(7)));
    CHECK(is_bipartite(cycle_graph(8)));

    CHECK(is_tree(path_graph(5)));
    CHECK_FALSE(girth(path_graph(5)).has_value());
    CHECK_FALSE(is_tree(disjoint_union(path_graph(2), path_graph(2))));

    CHECK(pendant_edges_form_perfect_matching(star_graph(complete_graph(3))));
    CHECK_FALSE(pendant_edges_form_perfect_matching(cycle_graph(8)));
    CHECK_FALSE(pendant_edges_form_perfect_matching(path_graph(3)));
    CHECK(pendant_edges_form_perfect_matching(path_graph(2)));

    CHECK(girth(complete_graph(1)) == std::nullopt);
    CHECK_THROWS_AS(girth(Graph{}), std::invalid_argument);
}

TEST_CASE("BFS girth agrees with explicit cycle enumeration") {
    for (int n = 1; n <= 5; ++n)
        testsupport::for_each_graph(n, [&](const Graph& g, std::uint64_t) {
            CHECK(girth(g) == testsupport::girth_by_cycle_enumeration(g));
        });
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = testsupport::random_graph(rng, 6 + trial % 3, 0.1 + 0.1 * (trial % 8));
        auto expected = testsupport::girth_by_cycle_enumeration(g);
        CHECK(girth(g) == expected);
    }
}

TEST_CASE("connected components are sorted and ordered by least vertex") {
    Graph g = Graph::make(6, {{4, 5}, {0, 2}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == VertexSet{0, 2});
    CHECK(comps[1] == VertexSet{1});
    CHECK(comps[2] == VertexSet{3});
    CHECK(comps[3] == VertexSet{4, 5});
}
