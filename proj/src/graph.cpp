#include "domkernel/graph.hpp"

#include <algorithm>
#include <string>

#include "domkernel/error.hpp"

namespace domkernel {

VertexSet make_vertex_set(std::vector<Vertex> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0)
        throw Error(ErrorKind::invalid_argument, "negative vertex count");
    Graph g;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    g.live_.assign(static_cast<std::size_t>(n), 1);
    g.num_live_ = n;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::invalid_vertex,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        if (u == v)
            throw Error(ErrorKind::invalid_input, "self-loop at " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw Error(ErrorKind::invalid_input, "parallel edge at " + std::to_string(v));
        g.num_edges_ += adj.size();
    }
    g.num_edges_ /= 2;
    return g;
}

bool Graph::is_live(Vertex v) const noexcept {
    return v >= 0 && v < id_bound() && live_[v];
}

void Graph::require_live(Vertex v) const {
    if (!is_live(v))
        throw Error(ErrorKind::invalid_vertex, "vertex " + std::to_string(v) + " is not live");
}

const VertexSet& Graph::neighbors(Vertex v) const {
    require_live(v);
    return adjacency_[v];
}

int Graph::degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!is_live(u) || !is_live(v))
        return false;
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

VertexSet Graph::live_vertices() const {
    VertexSet out;
    out.reserve(static_cast<std::size_t>(num_live_));
    for (Vertex v = 0; v < id_bound(); ++v)
        if (live_[v])
            out.push_back(v);
    return out;
}

VertexSet Graph::deleted_vertices() const {
    VertexSet out;
    for (Vertex v = 0; v < id_bound(); ++v)
        if (!live_[v])
            out.push_back(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < id_bound(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> doomed(static_cast<std::size_t>(g.id_bound()), 0);
    for (Vertex v : s) {
        g.require_live(v);
        doomed[v] = 1;
    }
    Graph out = g;
    std::size_t removed = 0;
    for (Vertex u = 0; u < out.id_bound(); ++u) {
        if (!out.live_[u])
            continue;
        auto& adj = out.adjacency_[u];
        if (doomed[u]) {
            for (Vertex w : adj)
                if (!doomed[w] || u < w)
                    ++removed;
            adj.clear();
            out.live_[u] = 0;
            --out.num_live_;
        } else {
            std::erase_if(adj, [&](Vertex w) { return doomed[w] != 0; });
        }
    }
    out.num_edges_ -= removed;
    return out;
}

int minimum_degree(const Graph& g) {
    if (g.empty())
        throw Error(ErrorKind::empty_graph, "minimum degree of an empty graph");
    int best = g.num_live();
    for (Vertex v : g.live_vertices())
        best = std::min(best, g.degree(v));
    return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.id_bound()), -1);
    std::vector<VertexSet> out;
    for (Vertex s : g.live_vertices()) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int shift = a.id_bound();
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + shift, v + shift);
    Graph out = Graph::from_edges(shift + b.id_bound(), edges);
    VertexSet dead = a.deleted_vertices();
    for (Vertex v : b.deleted_vertices())
        dead.push_back(v + shift);
    return delete_vertices(out, dead);
}

}  // namespace domkernel
