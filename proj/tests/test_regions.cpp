#include <doctest.h>

#include "domkernel/domination.hpp"
#include "domkernel/error.hpp"
#include "domkernel/generators.hpp"
#include "domkernel/kernelize.hpp"
#include "domkernel/regions.hpp"
#include "support.hpp"

using namespace domkernel;
using namespace testing_support;

namespace {

PlaneGraph family(Family f, std::vector<int> size, std::uint64_t seed = 0) {
    return *generate({f, std::move(size), seed}).embedding;
}

bool has(const VertexSet& s, Vertex x) {
    return std::binary_search(s.begin(), s.end(), x);
}

// Region shape and pairwise compatibility, written out from the definitions.
void check_by_hand(const PlaneGraph& pg, const RegionDecomposition& rd) {
    const Graph& g = pg.graph();
    for (const Region& r : rd.regions) {
        CHECK(has(rd.dset, r.u));
        CHECK(has(rd.dset, r.v));
        CHECK(r.p.size() <= 3);
        CHECK(r.q.size() <= 3);
        for (Vertex x : r.interior_vertices()) {
            CHECK(g.has_edge(x, r.u));
            CHECK(g.has_edge(x, r.v));
        }
        for (Vertex x : r.vertices)
            CHECK((x == r.u || x == r.v || !has(rd.dset, x)));
    }
    for (std::size_t i = 0; i < rd.regions.size(); ++i)
        for (std::size_t j = i + 1; j < rd.regions.size(); ++j) {
            const Region& a = rd.regions[i];
            const Region& b = rd.regions[j];
            for (Vertex x : a.vertices)
                if (has(b.vertices, x)) {
                    CHECK(has(a.boundary_vertices, x));
                    CHECK(has(b.boundary_vertices, x));
                }
            for (int f : a.disk.interior_faces)
                CHECK(std::find(b.disk.interior_faces.begin(), b.disk.interior_faces.end(), f) ==
                      b.disk.interior_faces.end());
        }
    VertexSet covered;
    for (const Region& r : rd.regions)
        covered.insert(covered.end(), r.vertices.begin(), r.vertices.end());
    CHECK(make_vertex_set(covered) == g.live_vertices());
    CHECK(rd.regions.size() <= 3 * rd.dset.size());
}

}  // namespace

TEST_CASE("decomposition of C4 with three D-vertices") {
    const PlaneGraph c4 = family(Family::cycle, {4});
    const RegionDecomposition rd = region_decomposition(c4, {0, 1, 2});
    CHECK(rd.covered == VertexSet{0, 1, 2, 3});
    CHECK(rd.regions.size() <= 9);
    CHECK(validate_decomposition(c4, rd).empty());
    check_by_hand(c4, rd);
}

TEST_CASE("decomposition of K4 with two adjacent D-vertices") {
    const PlaneGraph k4 = family(Family::complete, {4});
    REQUIRE(is_k_tuple_dominating(k4.graph(), {0, 1}, 2));
    const RegionDecomposition rd = region_decomposition(k4, {0, 1});
    CHECK(rd.covered == VertexSet{0, 1, 2, 3});
    CHECK(rd.regions.size() <= 6);
    CHECK(thin_planar_check(rd));
    check_by_hand(k4, rd);
}

TEST_CASE("single edge gives one degenerate region") {
    const PlaneGraph edge = family(Family::path, {2});
    const RegionDecomposition rd = region_decomposition(edge, {0, 1});
    REQUIRE(rd.regions.size() == 1);
    CHECK(rd.regions[0].disk.degenerate);
    CHECK(rd.regions[0].vertices == VertexSet{0, 1});
    CHECK(rd.induced_multigraph == std::vector<Edge>{{0, 1}});
}

TEST_CASE("candidate regions") {
    // Path 0 - 1 - 2 with D = {0, 2}: the bare path through 1 is a region.
    const PlaneGraph p3 = family(Family::path, {3});
    const auto around_1 = enumerate_candidate_regions(p3, {0, 2}, 1, {});
    REQUIRE_FALSE(around_1.empty());
    CHECK(around_1.front().vertices == VertexSet{0, 1, 2});
    CHECK(around_1.front().disk.degenerate);

    // A D-vertex with a D-neighbor: the edge itself is a candidate.
    const auto edge = enumerate_candidate_regions(p3, {0, 1}, 0, {});
    const bool found = std::any_of(edge.begin(), edge.end(), [](const Region& r) {
        return r.u == 0 && r.v == 1 && r.vertices == VertexSet{0, 1};
    });
    CHECK(found);

    // Far from every D-pair: nothing.
    const PlaneGraph p5 = family(Family::path, {5});
    CHECK(enumerate_candidate_regions(p5, {0, 1}, 4, {}).empty());
}

TEST_CASE("decomposition rejects sets that are not double dominating") {
    try {
        region_decomposition(family(Family::cycle, {5}), {0, 2});
        FAIL("accepted a plain dominating set");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_input);
    }
}

TEST_CASE("bound arithmetic") {
    CHECK(genus_bound(3, 0, BoundRegime::double_domination) == 54);
    CHECK(genus_bound(3, 1, BoundRegime::double_domination) == 342);
    CHECK(genus_bound(5, 0, BoundRegime::ktuple3) == 60);
    CHECK(genus_bound(4, 0, BoundRegime::liars) == 60);
    CHECK(genus_bound(2, 1, BoundRegime::liars) == 15 * 34);
    CHECK(genus_bound(2, 2, BoundRegime::ktuple3) == 15 * 66);
    CHECK_THROWS_AS(genus_bound(-1, 0, BoundRegime::liars), Error);
    CHECK_THROWS_AS(genus_bound(1, -1, BoundRegime::liars), Error);

    CHECK(region_size_cap(RegionRegime::reduced_double) == 6);
    CHECK(region_size_cap(RegionRegime::liars) == 5);
    CHECK(region_size_cap(RegionRegime::ktuple3) == 4);
    CHECK(global_bound_factor(RegionRegime::reduced_double) == 18);
    CHECK(global_bound_factor(RegionRegime::liars) == 15);
    CHECK(global_bound_factor(RegionRegime::ktuple3) == 12);
    for (auto r : {RegionRegime::reduced_double, RegionRegime::liars, RegionRegime::ktuple3})
        CHECK(parse_region_regime(to_string(r)) == r);
}

TEST_CASE("thin planar count") {
    RegionDecomposition rd;
    rd.dset = {0, 1};
    rd.induced_multigraph.assign(6, Edge{0, 1});
    CHECK(thin_planar_check(rd));
    rd.induced_multigraph.emplace_back(0, 1);
    CHECK_FALSE(thin_planar_check(rd));
    rd.dset = {0, 1, 2};
    rd.induced_multigraph = {{0, 1}, {1, 2}, {0, 2}};
    CHECK(thin_planar_check(rd));
    rd.induced_multigraph.emplace_back(0, 2);
    CHECK_FALSE(thin_planar_check(rd));
    CHECK(thin_planar_check(RegionDecomposition{}));
}

TEST_CASE("bounds report flags oversized regions") {
    const PlaneGraph w6 = family(Family::wheel, {6});
    const RegionDecomposition rd = region_decomposition(w6, {0, 3, 6});
    const RegionBoundsReport loose = check_region_bounds(rd, RegionRegime::reduced_double);
    CHECK(loose.cover_ok);
    CHECK(loose.count_ok);
    CHECK(loose.region_count_cap == 9);
    CHECK(loose.global_cap == 54);
    const RegionBoundsReport tight = check_region_bounds(rd, RegionRegime::ktuple3);
    CHECK(tight.max_region_size == loose.max_region_size);
    CHECK(tight.sizes_ok == (tight.max_region_size <= 4));
    CHECK(tight.violations.empty() == tight.passed());
}

TEST_CASE("property: decompositions on stacked planar graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed)
        for (int n : {5, 8, 11, 14}) {
            const PlaneGraph pg = generate_stacked_planar(n, seed);
            const Graph& g = pg.graph();
            CAPTURE(seed);
            CAPTURE(n);
            const auto two = solve_minimum(g, DominationVariant::double_domination(), SolveMode::branch_and_bound);
            const auto lr = solve_minimum(g, DominationVariant::liars(), SolveMode::branch_and_bound);
            const auto three = solve_minimum(g, DominationVariant::k_tuple(3), SolveMode::branch_and_bound);
            REQUIRE(three.feasible());

            const RegionDecomposition rd_lr = region_decomposition(pg, lr.certificate->set);
            check_by_hand(pg, rd_lr);
            CHECK(check_region_bounds(rd_lr, RegionRegime::liars).passed());
            const RegionDecomposition rd_3 = region_decomposition(pg, three.certificate->set);
            check_by_hand(pg, rd_3);
            CHECK(check_region_bounds(rd_3, RegionRegime::ktuple3).passed());

            const auto [k, trace] = kernelize_double_domination(g);
            const PlaneGraph kpg = restrict_embedding_to(pg, k);
            const auto kd = solve_minimum(k, DominationVariant::double_domination(), SolveMode::branch_and_bound);
            const RegionDecomposition rd_k = region_decomposition(kpg, kd.certificate->set);
            check_by_hand(kpg, rd_k);
            CHECK(check_region_bounds(rd_k, RegionRegime::reduced_double).passed());
            CHECK(validate_decomposition(kpg, rd_k).empty());

            // Deterministic, and a plain double dominating set decomposes too.
            const RegionDecomposition again = region_decomposition(pg, lr.certificate->set);
            CHECK(again.induced_multigraph == rd_lr.induced_multigraph);
            CHECK(region_decomposition(pg, two.certificate->set).covered == g.live_vertices());
        }
}

TEST_CASE("DOT export lists D and one edge per region") {
    const PlaneGraph c4 = family(Family::cycle, {4});
    const RegionDecomposition rd = region_decomposition(c4, {0, 1, 2});
    const std::string dot = induced_multigraph_dot(rd);
    CHECK(dot.rfind("graph induced {", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '-')) == 2 * rd.regions.size());
}
