#include <doctest.h>

#include "domkernel/error.hpp"
#include "domkernel/generators.hpp"
#include "domkernel/io.hpp"
#include "domkernel/kernelize.hpp"
#include "domkernel/random.hpp"

using namespace domkernel;

TEST_CASE("SplitMix64 reference stream") {
    // Published first outputs for seed 0 and seed 1234567.
    SplitMix64 zero(0);
    CHECK(zero.next() == 0xE220A8397B1DCDAFULL);
    CHECK(zero.next() == 0x6E789E6AA1B965F4ULL);
    SplitMix64 other(1234567);
    CHECK(other.next() == 6457827717110365317ULL);
    CHECK(other.next() == 3203168211198807973ULL);
    SplitMix64 r(9);
    for (int i = 0; i < 1000; ++i)
        CHECK(r.below(7) < 7);
}

TEST_CASE("small families") {
    const Instance c4 = generate({Family::cycle, {4}, 0});
    REQUIRE(c4.embedding);
    CHECK(c4.embedding->num_faces() == 2);

    const Instance grid = generate({Family::grid, {3, 3}, 0});
    CHECK(grid.graph.num_live() == 9);
    CHECK(grid.graph.num_edges() == 12);
    CHECK(9 - 12 + grid.embedding->num_faces() == 2);

    const Instance trig = generate({Family::trigger, {5}, 0});
    const NeighborhoodPartition p = partition_common_neighborhood(trig.graph, 0, 1);
    CHECK(p.n3.size() == 5);
    CHECK(kernelize_double_domination(trig.graph).first.num_live() == 3);

    CHECK(generate({Family::star, {3}, 0}).graph.degree(0) == 3);
    CHECK(generate({Family::wheel, {5}, 0}).graph.degree(5) == 5);
    CHECK_FALSE(generate({Family::complete, {6}, 0}).embedding.has_value());
    CHECK_FALSE(generate({Family::gnp, {8, 50}, 3}).embedding.has_value());
}

TEST_CASE("stacked planar graphs") {
    const PlaneGraph tri = generate_stacked_planar(3, 1);
    CHECK(tri.graph().num_edges() == 3);
    const PlaneGraph k4 = generate_stacked_planar(4, 1);
    CHECK(k4.graph().num_edges() == 6);
    CHECK(k4.num_faces() == 4);
    const PlaneGraph ten = generate_stacked_planar(10, 1);
    CHECK(ten.graph().num_edges() == 24);
    CHECK(10 - 24 + ten.num_faces() == 2);
    CHECK_THROWS_AS(generate_stacked_planar(2, 1), Error);
}

TEST_CASE("stacked graph with seed 3 is frozen") {
    // Guards the face-splitting order against accidental change.
    const PlaneGraph pg = generate_stacked_planar(10, 3);
    CHECK(to_edge_list(pg.graph()) ==
          "p 10 24\ne 0 1\ne 0 2\ne 0 3\ne 0 4\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 1 7\ne 2 3\ne 2 5\ne 2 6\ne 2 8\n"
          "e 2 9\ne 3 4\ne 3 5\ne 3 6\ne 3 7\ne 3 8\ne 5 6\ne 5 7\ne 5 9\ne 6 8\ne 6 9\n");
}

TEST_CASE("seed determinism and stacked triggers") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const GeneratorSpec spec{Family::stacked_trigger, {6, 2, 3}, seed};
        const Instance a = generate(spec);
        const Instance b = generate(spec);
        CHECK(to_embedding_text(*a.embedding) == to_embedding_text(*b.embedding));
        CHECK(a.graph.num_live() == 12);
        CHECK(a.graph.num_edges() == 3 * 6 - 6 + 2 * 2 * 3);
        CHECK(kernelize_double_domination(a.graph).first.num_live() < 12);
    }
}

TEST_CASE("invalid specs") {
    for (const GeneratorSpec& bad :
         {GeneratorSpec{Family::cycle, {2}, 0}, GeneratorSpec{Family::grid, {3}, 0},
          GeneratorSpec{Family::gnp, {5, 101}, 0}, GeneratorSpec{Family::stacked_trigger, {3, 0, 1}, 0},
          GeneratorSpec{Family::stacked, {1}, 0}}) {
        CAPTURE(bad.id());
        try {
            generate(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::invalid_argument);
        }
    }
    CHECK_THROWS_AS(parse_family("torus"), Error);
    CHECK(parse_family("stacked_trigger") == Family::stacked_trigger);
    CHECK(GeneratorSpec{Family::grid, {2, 3}, 7}.id() == "grid(2,3)#7");
}
