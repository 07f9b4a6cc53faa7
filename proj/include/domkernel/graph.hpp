#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace domkernel {

using Vertex = int;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Sorts and deduplicates an arbitrary list of ids.
VertexSet make_vertex_set(std::vector<Vertex> ids);

/// Simple undirected graph over the dense id range [0, id_bound()).
///
/// Deleted vertices keep their id (tombstone) so that reduced graphs can be
/// traced back to the input. A Graph is a value: deletion returns a new graph.
class Graph {
public:
    Graph() = default;

    /// Builds a graph with `n` live vertices. Rejects self-loops, parallel
    /// edges and out-of-range endpoints.
    static Graph from_edges(int n, std::span<const Edge> edges);

    /// Total id range, including tombstoned ids.
    int id_bound() const noexcept { return static_cast<int>(adjacency_.size()); }
    int num_live() const noexcept { return num_live_; }
    std::size_t num_edges() const noexcept { return num_edges_; }
    bool empty() const noexcept { return num_live_ == 0; }

    bool is_live(Vertex v) const noexcept;
    /// Throws invalid-vertex unless `v` is a live id.
    void require_live(Vertex v) const;

    /// Open neighborhood, ascending.
    const VertexSet& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    VertexSet live_vertices() const;
    VertexSet deleted_vertices() const;
    /// All edges (u, v) with u < v, lexicographic.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adjacency_;
    std::vector<char> live_;
    int num_live_ = 0;
    std::size_t num_edges_ = 0;

    friend Graph delete_vertices(const Graph& g, std::span<const Vertex> s);
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// N(u) ∩ N(v).
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

Graph delete_vertices(const Graph& g, std::span<const Vertex> s);

int minimum_degree(const Graph& g);

/// Connected components of the live vertices, each ascending, ordered by
/// smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Disjoint union; ids of `b` are shifted by a.id_bound().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace domkernel
