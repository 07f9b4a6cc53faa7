#include "domkernel/regions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "domkernel/domination.hpp"
#include "domkernel/error.hpp"

namespace domkernel {

namespace {

Edge normalized(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

bool contains(const VertexSet& s, Vertex x) { return std::binary_search(s.begin(), s.end(), x); }

template <typename T>
bool intersects(const std::vector<T>& a, const std::vector<T>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

std::string describe(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

Region make_region(const PlaneGraph& pg, Vertex u, Vertex v, std::vector<Vertex> p, std::vector<Vertex> q,
                   Disk disk) {
    Region r;
    r.u = u;
    r.v = v;
    std::set<Edge> boundary_edges;
    std::set<Vertex> boundary(p.begin(), p.end());
    boundary.insert(q.begin(), q.end());
    for (const auto* path : {&p, &q})
        for (std::size_t i = 0; i + 1 < path->size(); ++i)
            boundary_edges.insert(normalized((*path)[i], (*path)[i + 1]));
    std::set<Edge> interior_edges;
    for (int f : disk.interior_faces) {
        const auto& walk = pg.face(f);
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const Edge e = normalized(walk[i], walk[(i + 1) % walk.size()]);
            if (!boundary_edges.contains(e))
                interior_edges.insert(e);
        }
    }
    r.boundary_vertices.assign(boundary.begin(), boundary.end());
    r.vertices = r.boundary_vertices;
    r.vertices.insert(r.vertices.end(), disk.interior_vertices.begin(), disk.interior_vertices.end());
    r.vertices = make_vertex_set(std::move(r.vertices));
    r.boundary_edges.assign(boundary_edges.begin(), boundary_edges.end());
    r.interior_edges.assign(interior_edges.begin(), interior_edges.end());
    r.p = std::move(p);
    r.q = std::move(q);
    r.disk = std::move(disk);
    return r;
}

bool prefer(const Region& a, const Region& b) {
    if (a.size() != b.size())
        return a.size() > b.size();
    return std::tie(a.boundary_vertices, a.disk.interior_vertices, a.disk.interior_faces) <
           std::tie(b.boundary_vertices, b.disk.interior_vertices, b.disk.interior_faces);
}

bool holds_foreign_d_vertex(const Region& r, const VertexSet& dset) {
    for (Vertex x : r.vertices)
        if (x != r.u && x != r.v && contains(dset, x))
            return true;
    return false;
}

}  // namespace

bool regions_compatible(const Region& a, const Region& b) {
    if (intersects(a.disk.interior_faces, b.disk.interior_faces))
        return false;
    if (intersects(a.disk.interior_vertices, b.vertices) || intersects(b.disk.interior_vertices, a.vertices))
        return false;
    if (intersects(a.interior_edges, b.interior_edges) || intersects(a.interior_edges, b.boundary_edges) ||
        intersects(b.interior_edges, a.boundary_edges))
        return false;
    return true;
}

std::vector<Region> all_candidate_regions(const PlaneGraph& pg, const VertexSet& dset_in) {
    const Graph& g = pg.graph();
    const VertexSet dset = make_vertex_set(dset_in);
    for (Vertex x : dset)
        g.require_live(x);

    std::vector<Region> out;
    for (Vertex u : dset) {
        VertexSet partners;
        for (Vertex x : g.neighbors(u)) {
            if (x > u && contains(dset, x))
                partners.push_back(x);
            for (Vertex y : g.neighbors(x))
                if (y > u && contains(dset, y))
                    partners.push_back(y);
        }
        for (Vertex v : make_vertex_set(std::move(partners))) {
            const VertexSet common = common_neighbors(g, u, v);
            std::vector<std::vector<Vertex>> paths;
            if (g.has_edge(u, v))
                paths.push_back({u, v});
            for (Vertex c : common)
                if (!contains(dset, c))
                    paths.push_back({u, c, v});

            for (std::size_t i = 0; i < paths.size(); ++i) {
                for (std::size_t j = i; j < paths.size(); ++j) {
                    auto sides = disk_sides(pg, paths[i], paths[j]);
                    const int count = i == j ? 1 : 2;
                    for (int s = 0; s < count; ++s) {
                        const Disk& disk = sides[static_cast<std::size_t>(s)];
                        const bool interior_ok =
                            std::all_of(disk.interior_vertices.begin(), disk.interior_vertices.end(),
                                        [&](Vertex x) { return contains(common, x); });
                        if (!interior_ok)
                            continue;
                        Region r = make_region(pg, u, v, paths[i], paths[j], disk);
                        if (!holds_foreign_d_vertex(r, dset))
                            out.push_back(std::move(r));
                    }
                }
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), prefer);
    return out;
}

namespace {

std::vector<Region> admissible(const std::vector<Region>& candidates, Vertex x, const RegionDecomposition& existing) {
    std::vector<Region> out;
    for (const Region& s : candidates) {
        if (!contains(s.vertices, x))
            continue;
        const bool fits = std::all_of(existing.regions.begin(), existing.regions.end(),
                                      [&](const Region& r) { return regions_compatible(s, r); });
        if (fits)
            out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<Region> enumerate_candidate_regions(const PlaneGraph& pg, const VertexSet& dset, Vertex x,
                                                const RegionDecomposition& existing) {
    pg.graph().require_live(x);
    if (contains(existing.covered, x))
        throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(x) + " is already covered");
    return admissible(all_candidate_regions(pg, dset), x, existing);
}

RegionDecomposition region_decomposition(const PlaneGraph& pg, const VertexSet& dset_in) {
    const Graph& g = pg.graph();
    const VertexSet dset = make_vertex_set(dset_in);
    for (Vertex x : dset)
        if (!g.is_live(x))
            throw Error(ErrorKind::invalid_input, "D names non-live vertex " + std::to_string(x));
    if (!is_k_tuple_dominating(g, dset, 2))
        throw Error(ErrorKind::invalid_input, "D is not a double dominating set");

    RegionDecomposition rd;
    rd.dset = dset;
    rd.num_vertices = g.num_live();
    const std::vector<Region> candidates = all_candidate_regions(pg, dset);
    std::vector<char> used(static_cast<std::size_t>(g.id_bound()), 0);
    for (Vertex x : g.live_vertices()) {
        if (used[x])
            continue;
        std::vector<Region> options = admissible(candidates, x, rd);
        if (options.empty())
            throw Error(ErrorKind::internal,
                        "no admissible region covers vertex " + std::to_string(x) +
                            " although D is double dominating; the cover guarantee fails");
        Region chosen = std::move(options.front());
        for (Vertex y : chosen.vertices)
            used[y] = 1;
        rd.induced_multigraph.emplace_back(chosen.u, chosen.v);
        rd.regions.push_back(std::move(chosen));
    }
    for (Vertex y = 0; y < g.id_bound(); ++y)
        if (used[y])
            rd.covered.push_back(y);
    return rd;
}

std::vector<std::string> validate_decomposition(const PlaneGraph& pg, const RegionDecomposition& rd) {
    const Graph& g = pg.graph();
    std::vector<std::string> problems;
    std::set<Vertex> covered;
    for (std::size_t i = 0; i < rd.regions.size(); ++i) {
        const Region& r = rd.regions[i];
        const std::string tag = "region " + std::to_string(i) + " (" + std::to_string(r.u) + "," +
                                std::to_string(r.v) + ")";
        if (!contains(rd.dset, r.u) || !contains(rd.dset, r.v) || r.u >= r.v)
            problems.push_back(tag + ": endpoints are not an ordered D-pair");
        for (const auto* path : {&r.p, &r.q}) {
            if (path->size() < 2 || path->size() > 3 || path->front() != r.u || path->back() != r.v)
                problems.push_back(tag + ": boundary path is not a u-v path of length <= 2");
        }
        try {
            const auto sides = disk_sides(pg, r.p, r.q);
            if (!(sides[0] == r.disk) && !(sides[1] == r.disk))
                problems.push_back(tag + ": disk is not a side of its boundary");
        } catch (const Error& e) {
            problems.push_back(tag + ": " + e.what());
        }
        const VertexSet common = common_neighbors(g, r.u, r.v);
        for (Vertex x : r.disk.interior_vertices)
            if (!contains(common, x))
                problems.push_back(tag + ": interior vertex " + std::to_string(x) + " is not a common neighbor");
        if (holds_foreign_d_vertex(r, rd.dset))
            problems.push_back(tag + ": contains a D-vertex other than its endpoints");
        if (i >= rd.induced_multigraph.size() || rd.induced_multigraph[i] != Edge{r.u, r.v})
            problems.push_back(tag + ": missing from the induced multigraph");
        for (std::size_t j = 0; j < i; ++j)
            if (!regions_compatible(r, rd.regions[j]))
                problems.push_back(tag + ": overlaps region " + std::to_string(j) + " off the boundaries");
        covered.insert(r.vertices.begin(), r.vertices.end());
    }
    if (rd.induced_multigraph.size() != rd.regions.size())
        problems.push_back("induced multigraph edge count differs from region count");
    for (Vertex x : g.live_vertices())
        if (!covered.contains(x)) {
            problems.push_back("vertex " + std::to_string(x) + " is not covered");
            break;
        }
    return problems;
}

std::string to_string(RegionRegime regime) {
    switch (regime) {
    case RegionRegime::reduced_double: return "reduced-double";
    case RegionRegime::liars: return "liars";
    case RegionRegime::ktuple3: return "ktuple3";
    }
    return "?";
}

RegionRegime parse_region_regime(const std::string& text) {
    if (text == "reduced-double")
        return RegionRegime::reduced_double;
    if (text == "liars")
        return RegionRegime::liars;
    if (text == "ktuple3")
        return RegionRegime::ktuple3;
    throw Error(ErrorKind::invalid_argument, "unknown regime '" + text + "'");
}

int region_size_cap(RegionRegime regime) {
    switch (regime) {
    case RegionRegime::reduced_double: return 6;
    case RegionRegime::liars: return 5;
    case RegionRegime::ktuple3: return 4;
    }
    return 0;
}

int global_bound_factor(RegionRegime regime) { return 3 * region_size_cap(regime); }

RegionBoundsReport check_region_bounds(const RegionDecomposition& rd, RegionRegime regime) {
    RegionBoundsReport report;
    report.regime = regime;
    report.num_vertices = rd.num_vertices;
    report.dset_size = static_cast<int>(rd.dset.size());
    report.region_count = static_cast<int>(rd.regions.size());
    report.region_count_cap = 3 * report.dset_size;
    report.region_size_cap = region_size_cap(regime);
    report.global_cap = static_cast<std::int64_t>(global_bound_factor(regime)) * report.dset_size;

    report.cover_ok = static_cast<int>(rd.covered.size()) == rd.num_vertices;
    if (!report.cover_ok)
        report.violations.push_back("cover: " + std::to_string(rd.covered.size()) + " of " +
                                    std::to_string(rd.num_vertices) + " vertices covered");
    report.count_ok = report.region_count <= report.region_count_cap;
    if (!report.count_ok)
        report.violations.push_back("count: " + std::to_string(report.region_count) + " regions > 3|D| = " +
                                    std::to_string(report.region_count_cap));
    report.sizes_ok = true;
    for (std::size_t i = 0; i < rd.regions.size(); ++i) {
        const Region& r = rd.regions[i];
        report.max_region_size = std::max(report.max_region_size, r.size());
        if (r.size() > report.region_size_cap) {
            report.sizes_ok = false;
            report.violations.push_back("size: region " + std::to_string(i) + " (" + std::to_string(r.u) + "," +
                                        std::to_string(r.v) + ") has vertices " + describe(r.vertices) +
                                        " exceeding cap " + std::to_string(report.region_size_cap));
        }
    }
    report.global_ok = report.num_vertices <= report.global_cap;
    if (!report.global_ok)
        report.violations.push_back("global: |V| = " + std::to_string(report.num_vertices) + " > " +
                                    std::to_string(global_bound_factor(regime)) + "|D| = " +
                                    std::to_string(report.global_cap));
    return report;
}

bool thin_planar_check(const RegionDecomposition& rd) {
    const auto d = static_cast<std::int64_t>(rd.dset.size());
    const auto edges = static_cast<std::int64_t>(rd.induced_multigraph.size());
    return d >= 3 ? edges <= 3 * d - 6 : edges <= 3 * d;
}

std::int64_t genus_bound(std::int64_t gamma, std::int64_t euler_genus, BoundRegime regime) {
    if (gamma < 0 || euler_genus < 0)
        throw Error(ErrorKind::invalid_argument, "genus_bound needs gamma >= 0 and eg >= 0");
    if (euler_genus == 0) {
        switch (regime) {
        case BoundRegime::double_domination: return 18 * gamma;
        case BoundRegime::liars: return 15 * gamma;
        case BoundRegime::ktuple3: return 12 * gamma;
        }
    }
    switch (regime) {
    case BoundRegime::double_domination: return 18 * (gamma + 32 * euler_genus - 16);
    case BoundRegime::liars:
    case BoundRegime::ktuple3: return 15 * (gamma + 32 * euler_genus);
    }
    return 0;
}

std::string induced_multigraph_dot(const RegionDecomposition& rd) {
    std::ostringstream out;
    out << "graph induced {\n";
    for (Vertex d : rd.dset)
        out << "  " << d << ";\n";
    for (std::size_t i = 0; i < rd.induced_multigraph.size(); ++i) {
        const auto [u, v] = rd.induced_multigraph[i];
        out << "  " << u << " -- " << v << " [label=\"R" << i << " |V|=" << rd.regions[i].size() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace domkernel
