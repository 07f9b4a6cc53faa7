#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domkernel/graph.hpp"
#include "domkernel/plane.hpp"

namespace domkernel {

/// Closed region between two D-vertices u < v: bounded by the u-v paths `p`
/// and `q` (one or two edges each, p == q for a bare path), with every
/// strictly interior vertex a common neighbor of u and v.
struct Region {
    Vertex u = -1;
    Vertex v = -1;
    std::vector<Vertex> p;
    std::vector<Vertex> q;
    Disk disk;

    VertexSet boundary_vertices;
    VertexSet vertices;  // V(R): boundary and interior
    std::vector<Edge> boundary_edges;
    std::vector<Edge> interior_edges;

    int size() const noexcept { return static_cast<int>(vertices.size()); }
    const VertexSet& interior_vertices() const noexcept { return disk.interior_vertices; }
};

/// True when the two closed regions meet only in points on both boundaries.
bool regions_compatible(const Region& a, const Region& b);

struct RegionDecomposition {
    VertexSet dset;
    std::vector<Region> regions;
    /// One (u, v) edge per region: the induced multigraph on D.
    std::vector<Edge> induced_multigraph;
    int num_vertices = 0;  // live vertices of the decomposed graph
    VertexSet covered;     // V(R) over all regions
};

/// Every region between D-pairs that holds no D-vertex besides its endpoints,
/// ordered by preference: more vertices first, then smaller sorted boundary,
/// smaller sorted interior, smaller face list.
std::vector<Region> all_candidate_regions(const PlaneGraph& pg, const VertexSet& dset);

/// Candidates containing `x` that meet existing regions only on boundaries,
/// best first. `x` must not be covered yet.
std::vector<Region> enumerate_candidate_regions(const PlaneGraph& pg, const VertexSet& dset, Vertex x,
                                                const RegionDecomposition& existing);

/// Greedy maximal D-region decomposition: repeatedly take the lowest uncovered
/// vertex and add the largest compatible region containing it. D must be a
/// double dominating set.
RegionDecomposition region_decomposition(const PlaneGraph& pg, const VertexSet& dset);

/// Structural invariants of a decomposition (region shape, D-freeness,
/// pairwise compatibility, cover). Empty when all hold.
std::vector<std::string> validate_decomposition(const PlaneGraph& pg, const RegionDecomposition& rd);

enum class RegionRegime { reduced_double, liars, ktuple3 };

std::string to_string(RegionRegime regime);
RegionRegime parse_region_regime(const std::string& text);

/// Per-region vertex cap: 6, 5, 4.
int region_size_cap(RegionRegime regime);
/// Global constant c in |V| <= c·|D|: 18, 15, 12.
int global_bound_factor(RegionRegime regime);

struct RegionBoundsReport {
    RegionRegime regime = RegionRegime::reduced_double;
    int num_vertices = 0;
    int dset_size = 0;
    int region_count = 0;
    int region_count_cap = 0;  // 3|D|
    int max_region_size = 0;
    int region_size_cap = 0;
    std::int64_t global_cap = 0;  // c·|D|
    bool cover_ok = false;
    bool count_ok = false;
    bool sizes_ok = false;
    bool global_ok = false;
    std::vector<std::string> violations;

    bool passed() const noexcept { return cover_ok && count_ok && sizes_ok && global_ok; }
};

/// The caller is responsible for the regime's hypothesis (reduced graph, liar's
/// set, k-tuple set with k >= 3); this only checks the conclusions.
RegionBoundsReport check_region_bounds(const RegionDecomposition& rd, RegionRegime regime);

/// |E(G_R)| <= 3|D| - 6 for |D| >= 3, and <= 3|D| otherwise.
bool thin_planar_check(const RegionDecomposition& rd);

enum class BoundRegime { double_domination, liars, ktuple3 };

/// Kernel-size bound as arithmetic. Planar (eg = 0): 18γ, 15γ, 12γ. For eg >= 1:
/// 18(γ + 32·eg − 16), 15(γ + 32·eg), and 15(γ + 32·eg) for k-tuple.
std::int64_t genus_bound(std::int64_t gamma, std::int64_t euler_genus, BoundRegime regime);

/// The induced multigraph in DOT, one edge per region labelled with its index.
std::string induced_multigraph_dot(const RegionDecomposition& rd);

}  // namespace domkernel
