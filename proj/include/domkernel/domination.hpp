#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domkernel/graph.hpp"

namespace domkernel {

/// Which domination condition a vertex set must satisfy.
struct DominationVariant {
    enum class Kind { plain, k_tuple, liars };

    Kind kind = Kind::plain;
    int k = 1;  // meaningful for k_tuple only

    static DominationVariant plain() { return {Kind::plain, 1}; }
    static DominationVariant k_tuple(int k);
    static DominationVariant liars() { return {Kind::liars, 2}; }
    static DominationVariant double_domination() { return k_tuple(2); }

    /// Per-vertex demand |N[v] ∩ D| >= demand().
    int demand() const noexcept { return kind == Kind::plain ? 1 : k; }

    /// "dom", "ktuple:K" or "liars".
    std::string name() const;
    static DominationVariant parse(const std::string& text);

    friend bool operator==(const DominationVariant&, const DominationVariant&) = default;
};

struct DominatingCertificate {
    DominationVariant variant;
    VertexSet set;
    bool verified = false;
};

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_k_tuple_dominating(const Graph& g, const VertexSet& d, int k);
/// Conditions (i) |N[v]∩D| >= 2 for all v and (ii) |(N[u]∪N[v])∩D| >= 3 for
/// all pairs u != v, the latter checked over every pair.
bool is_liars_dominating(const Graph& g, const VertexSet& d);
bool satisfies(const Graph& g, const VertexSet& d, const DominationVariant& variant);

/// Checks `set` against `g` and returns a certificate with `verified` filled.
DominatingCertificate certify(const Graph& g, VertexSet set, const DominationVariant& variant);

enum class SolveMode { brute, branch_and_bound };

struct SolveOptions {
    /// Brute force refuses graphs with more live vertices than this.
    int brute_cap = 24;
    /// Branch-and-bound gives up after this many search nodes; 0 = no limit.
    std::uint64_t node_limit = 0;
};

struct SolveResult {
    enum class Status { optimal, infeasible, node_limit };

    Status status = Status::infeasible;
    std::optional<DominatingCertificate> certificate;  // set when optimal
    std::uint64_t nodes_explored = 0;
    double wall_time_ms = 0.0;

    bool feasible() const noexcept { return status == Status::optimal; }
    int cardinality() const { return static_cast<int>(certificate->set.size()); }
};

/// Largest number of live vertices the exact solvers accept.
inline constexpr int max_solver_vertices = 64;

/// Minimum-cardinality set for `variant`, or infeasible. Deterministic: the
/// same graph always yields the same set.
SolveResult solve_minimum(const Graph& g, const DominationVariant& variant, SolveMode mode,
                          const SolveOptions& options = {});

/// Every minimum set, by brute force (ascending lexicographic order). Empty
/// when the variant is infeasible on `g`.
std::vector<VertexSet> enumerate_minimum(const Graph& g, const DominationVariant& variant,
                                         int brute_cap = 24);

/// Greedy k-tuple dominating set for graphs beyond solver reach; nullopt when
/// the minimum degree makes it impossible.
std::optional<VertexSet> greedy_k_tuple_dominating_set(const Graph& g, int k);

}  // namespace domkernel
