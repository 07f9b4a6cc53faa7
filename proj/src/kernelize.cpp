#include "domkernel/kernelize.hpp"

#include <algorithm>

#include "domkernel/error.hpp"

namespace domkernel {

namespace {

bool contains(const VertexSet& s, Vertex x) {
    return std::binary_search(s.begin(), s.end(), x);
}

void require_pair(const Graph& g, Vertex u, Vertex v) {
    g.require_live(u);
    g.require_live(v);
    if (u == v)
        throw Error(ErrorKind::invalid_pair, "u and v must be distinct (got " + std::to_string(u) + ")");
}

bool rule_changes_graph(const NeighborhoodPartition& p) {
    if (p.n3.empty())
        return false;
    return !p.n2.empty() || p.n3.size() > 1;
}

// Vertices w > u sharing a neighbor with u; every other partner has an empty
// common neighborhood.
VertexSet partners(const Graph& g, Vertex u) {
    VertexSet out;
    for (Vertex x : g.neighbors(u))
        for (Vertex w : g.neighbors(x))
            if (w > u)
                out.push_back(w);
    return make_vertex_set(std::move(out));
}

}  // namespace

NeighborhoodPartition partition_common_neighborhood(const Graph& g, Vertex u, Vertex v) {
    require_pair(g, u, v);
    NeighborhoodPartition p;
    p.u = u;
    p.v = v;
    const VertexSet common = common_neighbors(g, u, v);
    for (Vertex x : common) {
        const auto& nx = g.neighbors(x);
        const bool escapes = std::any_of(nx.begin(), nx.end(), [&](Vertex y) {
            return y != u && y != v && !contains(common, y);
        });
        if (escapes)
            p.n1.push_back(x);
    }
    for (Vertex x : common) {
        if (contains(p.n1, x))
            continue;
        const auto& nx = g.neighbors(x);
        const bool touches = std::any_of(nx.begin(), nx.end(), [&](Vertex y) { return contains(p.n1, y); });
        (touches ? p.n2 : p.n3).push_back(x);
    }
    return p;
}

std::optional<std::pair<Graph, ReductionStep>> apply_reduction_rule(const Graph& g, Vertex u, Vertex v) {
    const NeighborhoodPartition p = partition_common_neighborhood(g, u, v);
    if (!rule_changes_graph(p))
        return std::nullopt;
    ReductionStep step;
    step.u = u;
    step.v = v;
    step.deleted_n2 = p.n2;
    step.witness = p.n3.front();
    step.deleted_n3.assign(p.n3.begin() + 1, p.n3.end());

    VertexSet doomed = step.deleted_n2;
    doomed.insert(doomed.end(), step.deleted_n3.begin(), step.deleted_n3.end());
    return std::pair{delete_vertices(g, make_vertex_set(std::move(doomed))), std::move(step)};
}

std::pair<Graph, ReductionTrace> kernelize_double_domination(const Graph& g) {
    if (g.empty())
        throw Error(ErrorKind::empty_graph, "kernelize needs a nonempty graph");
    ReductionTrace trace;
    trace.original_n = g.num_live();
    Graph current = g;
    bool changed = true;
    while (changed) {
        changed = false;
        ++trace.passes;
        for (Vertex u : current.live_vertices()) {
            for (Vertex v : partners(current, u)) {
                auto applied = apply_reduction_rule(current, u, v);
                if (!applied)
                    continue;
                current = std::move(applied->first);
                trace.steps.push_back(std::move(applied->second));
                changed = true;
                break;
            }
            if (changed)
                break;
        }
    }
    trace.reduced_n = current.num_live();
    return {std::move(current), std::move(trace)};
}

bool is_reduced(const Graph& g) {
    for (Vertex u : g.live_vertices())
        for (Vertex v : partners(g, u))
            if (rule_changes_graph(partition_common_neighborhood(g, u, v)))
                return false;
    return true;
}

}  // namespace domkernel
