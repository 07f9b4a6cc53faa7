#include <doctest.h>

#include "domkernel/error.hpp"
#include "domkernel/graph.hpp"
#include "domkernel/io.hpp"
#include "support.hpp"

using namespace domkernel;
using namespace testing_support;

TEST_CASE("closed neighborhoods") {
    const Graph star = make(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(closed_neighborhood(star, 0) == VertexSet{0, 1, 2, 3});
    CHECK(closed_neighborhood(star, 2) == VertexSet{0, 2});
    CHECK_THROWS_AS(closed_neighborhood(star, 7), Error);

    const Graph c4 = make(4, cycle_edges(4));
    CHECK(common_neighbors(c4, 0, 2) == VertexSet{1, 3});
    CHECK(common_neighbors(c4, 0, 1).empty());
}

TEST_CASE("minimum degree") {
    CHECK(minimum_degree(make(4, complete_edges(4))) == 3);
    CHECK(minimum_degree(make(4, {{0, 1}, {0, 2}, {0, 3}})) == 1);
    CHECK(minimum_degree(make(5, cycle_edges(5))) == 2);
    try {
        minimum_degree(Graph{});
        FAIL("expected empty-graph");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_graph);
    }
}

TEST_CASE("from_edges rejects malformed input") {
    CHECK_THROWS_AS(make(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(make(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(make(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(make(3, {{-1, 2}}), Error);
}

TEST_CASE("delete_vertices keeps ids and counts edges") {
    const Graph k4 = make(4, complete_edges(4));
    const VertexSet doomed{1, 3};
    const Graph g = delete_vertices(k4, doomed);
    CHECK(g.id_bound() == 4);
    CHECK(g.num_live() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(g.deleted_vertices() == VertexSet{1, 3});
    CHECK(g.neighbors(0) == VertexSet{2});
    try {
        g.neighbors(1);
        FAIL("deleted id answered");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_vertex);
    }
    // The input is untouched.
    CHECK(k4.num_live() == 4);
    CHECK(k4.num_edges() == 6);
}

TEST_CASE("property: neighborhood symmetry and deletion edge accounting") {
    oracle::Xorshift rng(11);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + rng.below(12);
        const Graph g = make(n, oracle::random_edges(rng, n, 40));
        for (Vertex v : g.live_vertices()) {
            const VertexSet cn = closed_neighborhood(g, v);
            CHECK(std::binary_search(cn.begin(), cn.end(), v));
            for (Vertex u : g.neighbors(v))
                CHECK(g.has_edge(u, v));
        }
        std::vector<Vertex> doomed;
        for (Vertex v = 0; v < n; ++v)
            if (rng.below(3) == 0)
                doomed.push_back(v);
        std::size_t incident = 0;
        for (const auto& [a, b] : g.edges())
            incident += std::count(doomed.begin(), doomed.end(), a) || std::count(doomed.begin(), doomed.end(), b);
        const Graph h = delete_vertices(g, doomed);
        CHECK(h.num_edges() == g.num_edges() - incident);
        for (Vertex d : doomed)
            CHECK_FALSE(h.is_live(d));
    }
}

TEST_CASE("components and disjoint union") {
    const Graph a = make(3, {{0, 1}});
    const Graph b = make(2, {{0, 1}});
    const Graph u = disjoint_union(a, b);
    CHECK(u.num_live() == 5);
    CHECK(u.has_edge(3, 4));
    CHECK(connected_components(u) == std::vector<VertexSet>{{0, 1}, {2}, {3, 4}});
}

TEST_CASE("edge-list text round trip") {
    const std::string text = "c a comment\np 5 4\ne 0 1\ne 0 4\ne 1 2\ne 2 3\n";
    const GraphFile f = parse_graph_text(text);
    CHECK(f.graph.num_live() == 5);
    CHECK(f.graph.num_edges() == 4);
    CHECK_FALSE(f.rotation.has_value());
    // Canonical output drops comments; a second trip is the identity.
    const std::string canon = to_edge_list(f.graph);
    CHECK(canon == "p 5 4\ne 0 1\ne 0 4\ne 1 2\ne 2 3\n");
    CHECK(to_edge_list(parse_graph_text(canon).graph) == canon);
    CHECK(parse_graph_text(canon).graph == f.graph);
}

TEST_CASE("edge-list tombstones survive a round trip") {
    const Graph g = delete_vertices(make(4, cycle_edges(4)), std::vector<Vertex>{2});
    const std::string text = to_edge_list(g);
    CHECK(text == "p 4 2\ne 0 1\ne 0 3\nd 2\n");
    CHECK(parse_graph_text(text).graph == g);
}

TEST_CASE("edge-list parse errors carry the line") {
    for (const char* bad : {"e 0 1\n", "p 3 2\ne 0 1\n", "p 3 1\ne 0 5\n", "p 3 1\nx 0 1\n", "p 3 1\ne 0\n",
                            "p 2 1\ne 0 1\ne 0 1\n"}) {
        CAPTURE(bad);
        try {
            parse_graph_text(bad);
            FAIL("accepted malformed text");
        } catch (const Error& e) {
            CHECK((e.kind() == ErrorKind::parse || e.kind() == ErrorKind::invalid_input));
        }
    }
}
