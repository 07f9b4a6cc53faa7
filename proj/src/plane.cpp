#include "domkernel/plane.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "domkernel/error.hpp"

namespace domkernel {

PlaneGraph PlaneGraph::build(Graph g, RotationSystem rotation) {
    if (static_cast<int>(rotation.size()) != g.id_bound())
        throw Error(ErrorKind::invalid_embedding, "rotation system size does not match the id range");
    for (Vertex v = 0; v < g.id_bound(); ++v) {
        if (!g.is_live(v)) {
            if (!rotation[v].empty())
                throw Error(ErrorKind::invalid_embedding, "rotation given for deleted vertex " + std::to_string(v));
            continue;
        }
        VertexSet sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v))
            throw Error(ErrorKind::invalid_embedding,
                        "rotation at " + std::to_string(v) + " does not list exactly its incident edges");
    }

    PlaneGraph pg;
    pg.graph_ = std::move(g);
    pg.rotation_ = std::move(rotation);
    const Graph& graph = pg.graph_;
    const int bound = graph.id_bound();

    pg.dart_offset_.assign(static_cast<std::size_t>(bound) + 1, 0);
    for (Vertex v = 0; v < bound; ++v)
        pg.dart_offset_[v + 1] = pg.dart_offset_[v] + static_cast<int>(pg.rotation_[v].size());
    const int num_darts = pg.dart_offset_[bound];
    pg.face_of_dart_.assign(static_cast<std::size_t>(num_darts), -1);

    for (Vertex u = 0; u < bound; ++u) {
        for (Vertex first : pg.rotation_[u]) {
            if (pg.face_of_dart_[pg.dart_index(u, first)] >= 0)
                continue;
            const int face_id = static_cast<int>(pg.faces_.size());
            std::vector<Vertex> walk;
            Vertex from = u;
            Vertex to = first;
            while (pg.face_of_dart_[pg.dart_index(from, to)] < 0) {
                pg.face_of_dart_[pg.dart_index(from, to)] = face_id;
                walk.push_back(from);
                const Vertex next = pg.successor(to, from);
                from = to;
                to = next;
            }
            if (from != u || to != first)
                throw Error(ErrorKind::internal, "face walk did not close");
            pg.faces_.push_back(std::move(walk));
        }
    }

    // Euler check per component.
    pg.component_.assign(static_cast<std::size_t>(bound), -1);
    const auto components = connected_components(graph);
    for (std::size_t c = 0; c < components.size(); ++c)
        for (Vertex v : components[c])
            pg.component_[v] = static_cast<int>(c);
    std::vector<long> edges(components.size(), 0), faces(components.size(), 0);
    pg.component_outer_face_.assign(components.size(), -1);
    for (auto [u, v] : graph.edges())
        ++edges[pg.component_[u]];
    for (int f = 0; f < pg.num_faces(); ++f) {
        const int c = pg.component_[pg.faces_[f].front()];
        ++faces[c];
        int& outer = pg.component_outer_face_[c];
        if (outer < 0 || pg.faces_[f].size() > pg.faces_[outer].size())
            outer = f;
    }
    for (std::size_t c = 0; c < components.size(); ++c) {
        const long n = static_cast<long>(components[c].size());
        const long f = edges[c] == 0 ? 1 : faces[c];
        if (n - edges[c] + f != 2)
            throw Error(ErrorKind::not_planar,
                        "component containing vertex " + std::to_string(components[c].front()) +
                            " has n - m + f = " + std::to_string(n - edges[c] + f));
    }
    return pg;
}

const std::vector<Vertex>& PlaneGraph::rotation(Vertex v) const {
    graph_.require_live(v);
    return rotation_[v];
}

int PlaneGraph::dart_index(Vertex from, Vertex to) const {
    const auto& rot = rotation_.at(static_cast<std::size_t>(from));
    const auto it = std::find(rot.begin(), rot.end(), to);
    if (it == rot.end())
        throw Error(ErrorKind::invalid_vertex,
                    "no edge " + std::to_string(from) + "-" + std::to_string(to));
    return dart_offset_[from] + static_cast<int>(it - rot.begin());
}

int PlaneGraph::face_of_dart(Vertex from, Vertex to) const {
    return face_of_dart_[dart_index(from, to)];
}

Vertex PlaneGraph::successor(Vertex at, Vertex from) const {
    const auto& rot = rotation_.at(static_cast<std::size_t>(at));
    const auto it = std::find(rot.begin(), rot.end(), from);
    if (it == rot.end())
        throw Error(ErrorKind::invalid_vertex,
                    "no edge " + std::to_string(at) + "-" + std::to_string(from));
    const auto next = std::next(it);
    return next == rot.end() ? rot.front() : *next;
}

int PlaneGraph::outer_face() const {
    if (graph_.empty())
        return -1;
    return component_outer_face_[component_[graph_.live_vertices().front()]];
}

namespace {

std::vector<Vertex> normalized_path(const PlaneGraph& pg, std::span<const Vertex> path) {
    std::vector<Vertex> out(path.begin(), path.end());
    if (out.size() < 2 || out.size() > 3)
        throw Error(ErrorKind::invalid_region, "boundary paths must have one or two edges");
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (!pg.graph().has_edge(out[i], out[i + 1]))
            throw Error(ErrorKind::invalid_region,
                        "boundary uses a non-edge " + std::to_string(out[i]) + "-" + std::to_string(out[i + 1]));
    if (out.front() == out.back())
        throw Error(ErrorKind::invalid_region, "boundary path is not simple");
    return out;
}

Disk side_from(const PlaneGraph& pg, const std::vector<Vertex>& cycle, const std::vector<int>& faces) {
    Disk disk;
    disk.boundary = cycle;
    disk.interior_faces = faces;
    std::set<Vertex> on_cycle(cycle.begin(), cycle.end());
    std::set<Vertex> inside;
    for (int f : faces)
        for (Vertex x : pg.face(f))
            if (!on_cycle.contains(x))
                inside.insert(x);
    disk.interior_vertices.assign(inside.begin(), inside.end());
    return disk;
}

}  // namespace

std::array<Disk, 2> disk_sides(const PlaneGraph& pg, std::span<const Vertex> p_in, std::span<const Vertex> q_in) {
    const std::vector<Vertex> p = normalized_path(pg, p_in);
    std::vector<Vertex> q = normalized_path(pg, q_in);
    if (q.front() == p.back() && q.back() == p.front())
        std::reverse(q.begin(), q.end());
    if (q.front() != p.front() || q.back() != p.back())
        throw Error(ErrorKind::invalid_region, "boundary paths do not share their endpoints");

    if (p == q) {
        Disk d;
        d.boundary = p;
        d.degenerate = true;
        return {d, d};
    }

    // Closed walk u, P..., v, reverse(Q)... (back to u).
    std::vector<Vertex> cycle = p;
    for (std::size_t i = q.size() - 2; i >= 1; --i)
        cycle.push_back(q[i]);
    if (std::set<Vertex>(cycle.begin(), cycle.end()).size() != cycle.size())
        throw Error(ErrorKind::invalid_region, "boundary paths share an internal vertex");

    const std::size_t len = cycle.size();
    std::set<Edge> cycle_edges;
    for (std::size_t i = 0; i < len; ++i) {
        const Vertex a = cycle[i], b = cycle[(i + 1) % len];
        cycle_edges.emplace(std::min(a, b), std::max(a, b));
    }

    auto flood = [&](bool forward) {
        std::vector<char> seen(static_cast<std::size_t>(pg.num_faces()), 0);
        std::vector<int> stack;
        for (std::size_t i = 0; i < len; ++i) {
            const Vertex a = cycle[i], b = cycle[(i + 1) % len];
            const int f = forward ? pg.face_of_dart(a, b) : pg.face_of_dart(b, a);
            if (!seen[f]) {
                seen[f] = 1;
                stack.push_back(f);
            }
        }
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            const auto& walk = pg.face(f);
            for (std::size_t i = 0; i < walk.size(); ++i) {
                const Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
                if (cycle_edges.contains({std::min(a, b), std::max(a, b)}))
                    continue;
                const int g = pg.face_across(a, b);
                if (!seen[g]) {
                    seen[g] = 1;
                    stack.push_back(g);
                }
            }
        }
        std::vector<int> out;
        for (int f = 0; f < pg.num_faces(); ++f)
            if (seen[f])
                out.push_back(f);
        return out;
    };

    const std::vector<int> left = flood(true);
    const std::vector<int> right = flood(false);
    std::vector<int> both;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(both));
    if (!both.empty())
        throw Error(ErrorKind::invalid_region, "boundary does not separate the embedding into two sides");

    Disk a = side_from(pg, cycle, left);
    Disk b = side_from(pg, cycle, right);
    std::vector<Vertex> overlap;
    std::set_intersection(a.interior_vertices.begin(), a.interior_vertices.end(), b.interior_vertices.begin(),
                          b.interior_vertices.end(), std::back_inserter(overlap));
    if (!overlap.empty())
        throw Error(ErrorKind::invalid_region, "vertex " + std::to_string(overlap.front()) + " lies on both sides");
    return {std::move(a), std::move(b)};
}

Disk disk_between(const PlaneGraph& pg, std::span<const Vertex> p, std::span<const Vertex> q) {
    auto sides = disk_sides(pg, p, q);
    if (sides[0].degenerate)
        return sides[0];
    const int outer = pg.outer_face_of_component(pg.component_of(sides[0].boundary.front()));
    const auto& first = sides[0].interior_faces;
    const bool first_has_outer = std::binary_search(first.begin(), first.end(), outer);
    return first_has_outer ? sides[1] : sides[0];
}

PlaneGraph restrict_embedding(const PlaneGraph& pg, std::span<const Vertex> deleted) {
    return restrict_embedding_to(pg, delete_vertices(pg.graph(), deleted));
}

PlaneGraph restrict_embedding_to(const PlaneGraph& pg, const Graph& g) {
    if (g.id_bound() != pg.graph().id_bound())
        throw Error(ErrorKind::invalid_argument, "restricted graph has a different id range");
    RotationSystem rotation(static_cast<std::size_t>(g.id_bound()));
    for (Vertex v : g.live_vertices()) {
        if (!pg.graph().is_live(v))
            throw Error(ErrorKind::invalid_argument, "restricted graph revives vertex " + std::to_string(v));
        for (Vertex w : pg.rotation(v))
            if (g.is_live(w))
                rotation[v].push_back(w);
    }
    try {
        return PlaneGraph::build(g, std::move(rotation));
    } catch (const Error& e) {
        throw Error(ErrorKind::internal, std::string("restriction broke the embedding: ") + e.what());
    }
}

}  // namespace domkernel
