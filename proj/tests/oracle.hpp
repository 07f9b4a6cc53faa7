#pragma once

// Naive reference implementations used only by the tests. Everything here is
// written straight from the definitions with std::set and plain loops, and
// shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Graph {
    int n = 0;
    std::vector<std::set<int>> adj;
    std::set<int> live;

    Graph(int n_, const std::vector<std::pair<int, int>>& edges) : n(n_), adj(n_) {
        for (int v = 0; v < n; ++v)
            live.insert(v);
        for (auto [u, v] : edges) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    std::set<int> closed(int v) const {
        std::set<int> out = adj[v];
        out.insert(v);
        return out;
    }

    void remove(int v) {
        for (int w : adj[v])
            adj[w].erase(v);
        adj[v].clear();
        live.erase(v);
    }
};

inline int count_in(const std::set<int>& a, const std::set<int>& d) {
    int c = 0;
    for (int x : a)
        c += d.count(x) ? 1 : 0;
    return c;
}

inline bool k_tuple(const Graph& g, const std::set<int>& d, int k) {
    for (int v : g.live)
        if (count_in(g.closed(v), d) < k)
            return false;
    return true;
}

inline bool liars(const Graph& g, const std::set<int>& d) {
    if (!k_tuple(g, d, 2))
        return false;
    for (int u : g.live)
        for (int v : g.live) {
            if (u >= v)
                continue;
            std::set<int> both = g.closed(u);
            for (int x : g.closed(v))
                both.insert(x);
            if (count_in(both, d) < 3)
                return false;
        }
    return true;
}

/// variant: 0 liar's, otherwise k-tuple with that k (1 = plain).
inline bool satisfies(const Graph& g, const std::set<int>& d, int variant) {
    return variant == 0 ? liars(g, d) : k_tuple(g, d, variant);
}

/// Minimum cardinality over every subset of the live vertices; nullopt when
/// none qualifies. Exponential, intended for n <= 16.
inline std::optional<int> minimum(const Graph& g, int variant) {
    std::vector<int> ids(g.live.begin(), g.live.end());
    const int n = static_cast<int>(ids.size());
    std::optional<int> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (best && size >= *best)
            continue;
        std::set<int> d;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1)
                d.insert(ids[i]);
        if (satisfies(g, d, variant))
            best = size;
    }
    return best;
}

/// All minimum sets, each sorted.
inline std::vector<std::vector<int>> all_minimum(const Graph& g, int variant) {
    const auto best = minimum(g, variant);
    std::vector<std::vector<int>> out;
    if (!best)
        return out;
    std::vector<int> ids(g.live.begin(), g.live.end());
    const int n = static_cast<int>(ids.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != *best)
            continue;
        std::set<int> d;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1)
                d.insert(ids[i]);
        if (satisfies(g, d, variant))
            out.emplace_back(d.begin(), d.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Partition {
    std::set<int> n1, n2, n3;
};

inline Partition partition(const Graph& g, int u, int v) {
    std::set<int> common;
    for (int x : g.adj[u])
        if (g.adj[v].count(x))
            common.insert(x);
    std::set<int> reach = common;
    reach.insert(u);
    reach.insert(v);
    Partition p;
    for (int x : common)
        for (int y : g.adj[x])
            if (!reach.count(y))
                p.n1.insert(x);
    for (int x : common) {
        if (p.n1.count(x))
            continue;
        for (int y : g.adj[x])
            if (p.n1.count(y))
                p.n2.insert(x);
    }
    for (int x : common)
        if (!p.n1.count(x) && !p.n2.count(x))
            p.n3.insert(x);
    return p;
}

inline bool rule_applies(const Graph& g, int u, int v) {
    const Partition p = partition(g, u, v);
    return !p.n3.empty() && (p.n3.size() > 1 || !p.n2.empty());
}

/// Exhaustive reduction with restart after each change, lowest N3 id kept.
inline Graph kernelize(Graph g) {
    for (bool changed = true; changed;) {
        changed = false;
        for (int u : std::vector<int>(g.live.begin(), g.live.end())) {
            for (int v : std::vector<int>(g.live.begin(), g.live.end())) {
                if (v <= u || !rule_applies(g, u, v))
                    continue;
                const Partition p = partition(g, u, v);
                for (int x : p.n2)
                    g.remove(x);
                for (int x : p.n3)
                    if (x != *p.n3.begin())
                        g.remove(x);
                changed = true;
                break;
            }
            if (changed)
                break;
        }
    }
    return g;
}

/// Facial walks of a rotation system: after dart u->w comes w->next(w, u),
/// next being the entry after u in w's cyclic list.
inline int count_faces(const std::vector<std::vector<int>>& rotation) {
    std::set<std::pair<int, int>> seen;
    int faces = 0;
    for (int u = 0; u < static_cast<int>(rotation.size()); ++u)
        for (int w : rotation[u]) {
            if (seen.count({u, w}))
                continue;
            ++faces;
            std::pair<int, int> dart{u, w};
            while (!seen.count(dart)) {
                seen.insert(dart);
                const auto& rot = rotation[dart.second];
                const auto it = std::find(rot.begin(), rot.end(), dart.first);
                const int next = std::next(it) == rot.end() ? rot.front() : *std::next(it);
                dart = {dart.second, next};
            }
        }
    return faces;
}

/// Small xorshift stream for test graph sampling, independent of the library PRNG.
struct Xorshift {
    std::uint64_t state;
    explicit Xorshift(std::uint64_t seed) : state(seed * 0x9E3779B97F4A7C15ULL + 1) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

inline std::vector<std::pair<int, int>> random_edges(Xorshift& rng, int n, int percent) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(100) < percent)
                edges.emplace_back(i, j);
    return edges;
}

}  // namespace oracle
