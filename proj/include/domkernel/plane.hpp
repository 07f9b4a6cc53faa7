#pragma once

#include <array>
#include <span>
#include <vector>

#include "domkernel/graph.hpp"

namespace domkernel {

/// Per-vertex clockwise neighbor order, indexed by vertex id. Tombstoned ids
/// have an empty list.
using RotationSystem = std::vector<std::vector<Vertex>>;

/// A graph with a combinatorial plane embedding given by a rotation system.
///
/// Faces are traced with the rule "after arriving at w along u->w, leave along
/// w->x where x follows u in the rotation at w". Every directed edge (dart)
/// lies on exactly one face. Each connected component satisfies Euler's
/// formula n - m + f = 2, with an isolated vertex counting one face.
///
/// The designated outer face of a component is its longest facial walk, ties
/// broken towards the lower face id.
class PlaneGraph {
public:
    /// Throws invalid-embedding when `rotation` does not list exactly the
    /// incident edges of every live vertex, not-planar when Euler fails.
    static PlaneGraph build(Graph g, RotationSystem rotation);

    const Graph& graph() const noexcept { return graph_; }
    const RotationSystem& rotation() const noexcept { return rotation_; }
    const std::vector<Vertex>& rotation(Vertex v) const;

    int num_faces() const noexcept { return static_cast<int>(faces_.size()); }
    /// Facial walk as the sequence of dart tails.
    const std::vector<Vertex>& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }
    int face_of_dart(Vertex from, Vertex to) const;

    /// Neighbor following `from` in the clockwise order at `at`.
    Vertex successor(Vertex at, Vertex from) const;

    int num_components() const noexcept { return static_cast<int>(component_outer_face_.size()); }
    int component_of(Vertex v) const { return component_.at(static_cast<std::size_t>(v)); }
    /// -1 for a component that is a single isolated vertex.
    int outer_face_of_component(int c) const { return component_outer_face_.at(static_cast<std::size_t>(c)); }
    /// Outer face of the component holding the lowest live id.
    int outer_face() const;

    /// Face on the other side of the edge from face_of_dart(from, to).
    int face_across(Vertex from, Vertex to) const { return face_of_dart(to, from); }

private:
    int dart_index(Vertex from, Vertex to) const;

    Graph graph_;
    RotationSystem rotation_;
    std::vector<int> dart_offset_;
    std::vector<int> face_of_dart_;
    std::vector<std::vector<Vertex>> faces_;
    std::vector<int> component_;
    std::vector<int> component_outer_face_;
};

/// Closed disk bounded by a closed walk. `degenerate` disks are bare paths
/// with empty interior.
struct Disk {
    std::vector<Vertex> boundary;  // closed walk u ... v ... (back to u), or the path itself
    VertexSet interior_vertices;
    std::vector<int> interior_faces;  // ascending
    bool degenerate = false;

    friend bool operator==(const Disk&, const Disk&) = default;
};

/// Both closed sides of the cycle P · reverse(Q). For P == Q the two entries
/// are the same degenerate disk. P and Q are simple u-v paths with at most two
/// edges each.
std::array<Disk, 2> disk_sides(const PlaneGraph& pg, std::span<const Vertex> p, std::span<const Vertex> q);

/// The side of P · reverse(Q) that does not contain the component's outer face.
Disk disk_between(const PlaneGraph& pg, std::span<const Vertex> p, std::span<const Vertex> q);

/// Removes `deleted` and their edges; the restricted rotation system is
/// re-validated.
PlaneGraph restrict_embedding(const PlaneGraph& pg, std::span<const Vertex> deleted);

/// Same graph, rotation system made to follow the live/deleted state of `g`
/// (g must be `pg.graph()` minus some vertices).
PlaneGraph restrict_embedding_to(const PlaneGraph& pg, const Graph& g);

}  // namespace domkernel
