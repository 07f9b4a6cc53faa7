#include <doctest.h>

#include <numeric>

#include "domkernel/error.hpp"
#include "domkernel/generators.hpp"
#include "domkernel/io.hpp"
#include "domkernel/plane.hpp"
#include "domkernel/random.hpp"
#include "support.hpp"

using namespace domkernel;
using namespace testing_support;

namespace {

PlaneGraph family(Family f, std::vector<int> size, std::uint64_t seed = 0) {
    return *generate({f, std::move(size), seed}).embedding;
}

std::vector<std::vector<int>> as_lists(const RotationSystem& r) {
    return {r.begin(), r.end()};
}

}  // namespace

TEST_CASE("face counts of small embeddings") {
    const PlaneGraph c4 = family(Family::cycle, {4});
    CHECK(c4.num_faces() == 2);
    const PlaneGraph k4 = family(Family::complete, {4});
    CHECK(k4.num_faces() == 4);
    CHECK(oracle::count_faces(as_lists(k4.rotation())) == 4);
    const PlaneGraph grid = family(Family::grid, {3, 3});
    CHECK(grid.graph().num_edges() == 12);
    CHECK(grid.num_faces() == 5);
}

TEST_CASE("K5 admits no planar rotation") {
    const Graph k5 = make(5, complete_edges(5));
    SplitMix64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        RotationSystem rot(5);
        for (Vertex v = 0; v < 5; ++v) {
            rot[v] = k5.neighbors(v);
            for (std::size_t i = rot[v].size(); i > 1; --i)
                std::swap(rot[v][i - 1], rot[v][rng.below(i)]);
        }
        try {
            PlaneGraph::build(k5, rot);
            FAIL("K5 accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::not_planar);
        }
    }
}

TEST_CASE("malformed rotations") {
    const Graph c4 = make(4, cycle_edges(4));
    const RotationSystem missing = {{1}, {0, 2}, {1, 3}, {2, 0}};
    const RotationSystem foreign = {{1, 2}, {0, 2}, {1, 3}, {2, 0}};
    const RotationSystem repeated = {{1, 1}, {0, 2}, {1, 3}, {2, 0}};
    for (const auto& rot : {missing, foreign, repeated}) {
        try {
            PlaneGraph::build(c4, rot);
            FAIL("malformed rotation accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::invalid_embedding);
        }
    }
}

TEST_CASE("property: faces partition the darts and satisfy Euler") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
        for (int n : {4, 7, 12, 20}) {
            const PlaneGraph pg = generate_stacked_planar(n, seed);
            const int m = static_cast<int>(pg.graph().num_edges());
            CHECK(m == 3 * n - 6);
            CHECK(n - m + pg.num_faces() == 2);
            CHECK(oracle::count_faces(as_lists(pg.rotation())) == pg.num_faces());
            int total = 0;
            for (int f = 0; f < pg.num_faces(); ++f)
                total += static_cast<int>(pg.face(f).size());
            CHECK(total == 2 * m);
            for (const auto& [u, v] : pg.graph().edges()) {
                const int f = pg.face_of_dart(u, v);
                const auto& walk = pg.face(f);
                CHECK(std::find(walk.begin(), walk.end(), u) != walk.end());
            }
        }
}

TEST_CASE("components each get their own outer face") {
    const GraphFile f = parse_graph_text("p 5 3\ne 0 1\ne 1 2\ne 0 2\nr 0 1 2\nr 1 2 0\nr 2 0 1\nr 3\nr 4\n");
    const PlaneGraph pg = to_plane_graph(f);
    CHECK(pg.num_components() == 3);
    // Only the triangle has facial walks; isolated vertices pass Euler with f = 1.
    CHECK(pg.num_faces() == 2);
    CHECK(pg.outer_face() >= 0);
}

TEST_CASE("embedding text round trip") {
    const PlaneGraph pg = family(Family::wheel, {5});
    const std::string text = to_embedding_text(pg);
    const PlaneGraph again = to_plane_graph(parse_graph_text(text));
    CHECK(to_embedding_text(again) == text);
    CHECK(again.rotation() == pg.rotation());
    CHECK(text.substr(0, 6) == "p 6 10");
}

TEST_CASE("degenerate and C4 disks") {
    const PlaneGraph c4 = family(Family::cycle, {4});
    const std::vector<Vertex> p{0, 1, 2}, q{0, 3, 2};
    const Disk bare = disk_between(c4, p, p);
    CHECK(bare.degenerate);
    CHECK(bare.interior_vertices.empty());
    CHECK(bare.interior_faces.empty());

    const auto sides = disk_sides(c4, p, q);
    CHECK(sides[0].interior_vertices.empty());
    CHECK(sides[1].interior_vertices.empty());
    CHECK(sides[0].interior_faces.size() == 1);
    CHECK(sides[1].interior_faces.size() == 1);
    const Disk inner = disk_between(c4, p, q);
    CHECK(inner.interior_faces.size() == 1);
    CHECK(inner.interior_faces[0] != c4.outer_face());
}

TEST_CASE("wheel disks") {
    // Rim 0..3, hub 4.
    const PlaneGraph w4 = family(Family::wheel, {4});
    const std::vector<Vertex> spoke{0, 4, 2}, near{0, 1, 2}, far{0, 3, 2};
    const Disk a = disk_between(w4, spoke, near);
    CHECK(a.interior_vertices.empty());
    CHECK(a.interior_faces.size() == 2);

    const auto sides = disk_sides(w4, near, far);
    const Disk& hub_side = std::find(sides[0].interior_vertices.begin(), sides[0].interior_vertices.end(), 4) !=
                                   sides[0].interior_vertices.end()
                               ? sides[0]
                               : sides[1];
    CHECK(hub_side.interior_vertices == VertexSet{4});
    CHECK(hub_side.interior_faces.size() == 4);

    // Hub path against the far rim path: the side holding rim vertex 1 has
    // only 1 inside, the hub being on the boundary.
    const auto s2 = disk_sides(w4, spoke, far);
    const bool first = s2[0].interior_vertices == VertexSet{1};
    CHECK((first || s2[1].interior_vertices == VertexSet{1}));
    CHECK((first ? s2[1] : s2[0]).interior_vertices.empty());
    const auto s3 = disk_sides(w4, spoke, near);
    CHECK((s3[0].interior_vertices == VertexSet{} || s3[1].interior_vertices == VertexSet{}));
    const bool holds_three = s3[0].interior_vertices == VertexSet{3} || s3[1].interior_vertices == VertexSet{3};
    CHECK(holds_three);
    // Same call twice, same answer.
    CHECK(disk_between(w4, spoke, near) == disk_between(w4, spoke, near));
}

TEST_CASE("disk errors") {
    const PlaneGraph w4 = family(Family::wheel, {4});
    const std::vector<Vertex> p{0, 4, 2}, q{1, 4, 3};
    try {
        disk_between(w4, p, q);
        FAIL("mismatched endpoints accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_region);
    }
    const std::vector<Vertex> not_a_path{0, 2};
    CHECK_THROWS_AS(disk_between(w4, p, not_a_path), Error);
}

TEST_CASE("restrict_embedding") {
    const PlaneGraph k4 = family(Family::complete, {4});
    CHECK(restrict_embedding(k4, {}).rotation() == k4.rotation());
    const PlaneGraph tri = restrict_embedding(k4, std::vector<Vertex>{3});
    CHECK(tri.num_faces() == 2);
    CHECK(tri.graph().num_live() == 3);

    const PlaneGraph grid = family(Family::grid, {3, 3});
    const PlaneGraph ring = restrict_embedding(grid, std::vector<Vertex>{4});
    CHECK(ring.graph().num_edges() == 8);
    CHECK(ring.num_faces() == 2);
    CHECK(8 - 8 + ring.num_faces() == 2);
}
