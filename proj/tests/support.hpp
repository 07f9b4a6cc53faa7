#pragma once

#include <set>
#include <vector>

#include "domkernel/graph.hpp"
#include "oracle.hpp"

namespace testing_support {

using Edges = std::vector<domkernel::Edge>;

inline domkernel::Graph make(int n, const Edges& edges) {
    return domkernel::Graph::from_edges(n, edges);
}

inline Edges cycle_edges(int n) {
    Edges e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return e;
}

inline Edges complete_edges(int n) {
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return e;
}

// u = 0, v = 1, and `t` private common neighbors 2..t+1.
inline Edges fan_edges(int t) {
    Edges e;
    for (int c = 2; c < t + 2; ++c) {
        e.emplace_back(0, c);
        e.emplace_back(1, c);
    }
    return e;
}

/// Mirror of a library graph in the oracle's representation (tombstones dropped).
inline oracle::Graph mirror(const domkernel::Graph& g) {
    oracle::Graph o(g.id_bound(), g.edges());
    for (domkernel::Vertex v : g.deleted_vertices())
        o.live.erase(v);
    return o;
}

inline std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace testing_support
