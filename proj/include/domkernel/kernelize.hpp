#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domkernel/graph.hpp"

namespace domkernel {

/// Split of the common neighborhood N(u) ∩ N(v):
///   n1: common neighbors with a neighbor outside N(u,v) ∪ {u,v}
///   n2: the rest that touch n1
///   n3: everything else (only adjacent to u, v and other n2/n3 vertices)
struct NeighborhoodPartition {
    Vertex u = -1;
    Vertex v = -1;
    VertexSet n1;
    VertexSet n2;
    VertexSet n3;
};

NeighborhoodPartition partition_common_neighborhood(const Graph& g, Vertex u, Vertex v);

struct ReductionStep {
    Vertex u = -1;
    Vertex v = -1;
    VertexSet deleted_n2;
    VertexSet deleted_n3;
    Vertex witness = -1;  // the N3 vertex that is kept
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    int original_n = 0;
    int reduced_n = 0;
    /// Full pair scans started, including the final scan that found nothing.
    int passes = 0;
};

/// Applies the double-domination rule to the pair (u, v): when N3 is nonempty,
/// delete N2 and all of N3 but its lowest id. Returns nullopt when the graph
/// would not change.
std::optional<std::pair<Graph, ReductionStep>> apply_reduction_rule(const Graph& g, Vertex u, Vertex v);

/// Exhaustive application: pairs scanned lexicographically (u < v), restarting
/// after every change, until a full scan changes nothing.
std::pair<Graph, ReductionTrace> kernelize_double_domination(const Graph& g);

/// True when the rule is a no-op on every pair.
bool is_reduced(const Graph& g);

}  // namespace domkernel
