#include "domkernel/domination.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>

#include "domkernel/error.hpp"

namespace domkernel {

DominationVariant DominationVariant::k_tuple(int k) {
    if (k < 1)
        throw Error(ErrorKind::invalid_argument, "k-tuple domination needs k >= 1");
    return {Kind::k_tuple, k};
}

std::string DominationVariant::name() const {
    switch (kind) {
    case Kind::plain: return "dom";
    case Kind::k_tuple: return "ktuple:" + std::to_string(k);
    case Kind::liars: return "liars";
    }
    return "?";
}

DominationVariant DominationVariant::parse(const std::string& text) {
    if (text == "dom")
        return plain();
    if (text == "liars")
        return liars();
    if (text.rfind("ktuple:", 0) == 0) {
        try {
            std::size_t used = 0;
            const int k = std::stoi(text.substr(7), &used);
            if (used == text.size() - 7)
                return k_tuple(k);
        } catch (const std::logic_error&) {
        }
    }
    throw Error(ErrorKind::invalid_argument, "unknown variant '" + text + "'");
}

namespace {

// Per-vertex |N[v] ∩ D|, validating that D only names live vertices.
std::vector<int> coverage(const Graph& g, const VertexSet& d) {
    std::vector<char> in_d(static_cast<std::size_t>(g.id_bound()), 0);
    for (Vertex x : d) {
        g.require_live(x);
        in_d[x] = 1;
    }
    std::vector<int> count(static_cast<std::size_t>(g.id_bound()), 0);
    for (Vertex v : g.live_vertices()) {
        int c = in_d[v];
        for (Vertex w : g.neighbors(v))
            c += in_d[w];
        count[v] = c;
    }
    return count;
}

}  // namespace

bool is_k_tuple_dominating(const Graph& g, const VertexSet& d, int k) {
    if (k < 1)
        throw Error(ErrorKind::invalid_argument, "k must be >= 1");
    const auto count = coverage(g, d);
    for (Vertex v : g.live_vertices())
        if (count[v] < k)
            return false;
    return true;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    return is_k_tuple_dominating(g, d, 1);
}

bool is_liars_dominating(const Graph& g, const VertexSet& d) {
    const auto count = coverage(g, d);
    const VertexSet live = g.live_vertices();
    for (Vertex v : live)
        if (count[v] < 2)
            return false;

    std::vector<char> in_d(static_cast<std::size_t>(g.id_bound()), 0);
    for (Vertex x : d)
        in_d[x] = 1;
    std::vector<VertexSet> closed(static_cast<std::size_t>(g.id_bound()));
    for (Vertex v : live)
        closed[v] = closed_neighborhood(g, v);

    for (std::size_t i = 0; i < live.size(); ++i) {
        const Vertex u = live[i];
        for (std::size_t j = i + 1; j < live.size(); ++j) {
            const Vertex v = live[j];
            // |A ∪ B| >= max(|A|, |B|), so a side with 3 already settles the pair.
            if (count[u] >= 3 || count[v] >= 3)
                continue;
            int shared = 0;
            auto a = closed[u].begin();
            auto b = closed[v].begin();
            while (a != closed[u].end() && b != closed[v].end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    shared += in_d[*a];
                    ++a;
                    ++b;
                }
            }
            if (count[u] + count[v] - shared < 3)
                return false;
        }
    }
    return true;
}

bool satisfies(const Graph& g, const VertexSet& d, const DominationVariant& variant) {
    switch (variant.kind) {
    case DominationVariant::Kind::plain: return is_dominating(g, d);
    case DominationVariant::Kind::k_tuple: return is_k_tuple_dominating(g, d, variant.k);
    case DominationVariant::Kind::liars: return is_liars_dominating(g, d);
    }
    return false;
}

DominatingCertificate certify(const Graph& g, VertexSet set, const DominationVariant& variant) {
    set = make_vertex_set(std::move(set));
    const bool ok = satisfies(g, set, variant);
    return {variant, std::move(set), ok};
}

namespace {

using Mask = std::uint64_t;

// Live vertices compacted to bit positions 0..size-1, ascending by id.
struct CompactGraph {
    VertexSet ids;
    std::vector<Mask> closed;

    int size() const { return static_cast<int>(ids.size()); }
    Mask all() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }

    VertexSet to_set(Mask m) const {
        VertexSet out;
        for (int i = 0; i < size(); ++i)
            if (m >> i & 1)
                out.push_back(ids[i]);
        return out;
    }
};

CompactGraph compact(const Graph& g) {
    if (g.empty())
        throw Error(ErrorKind::empty_graph, "cannot solve on an empty graph");
    if (g.num_live() > max_solver_vertices)
        throw Error(ErrorKind::instance_too_large,
                    std::to_string(g.num_live()) + " live vertices exceed the solver limit of " +
                        std::to_string(max_solver_vertices));
    CompactGraph cg;
    cg.ids = g.live_vertices();
    std::vector<int> index(static_cast<std::size_t>(g.id_bound()), -1);
    for (int i = 0; i < cg.size(); ++i)
        index[cg.ids[i]] = i;
    cg.closed.resize(cg.ids.size());
    for (int i = 0; i < cg.size(); ++i) {
        Mask m = Mask{1} << i;
        for (Vertex w : g.neighbors(cg.ids[i]))
            m |= Mask{1} << index[w];
        cg.closed[i] = m;
    }
    return cg;
}

int popcount(Mask m) { return std::popcount(m); }

bool demand_met(const CompactGraph& cg, Mask d, int demand) {
    for (Mask m : cg.closed)
        if (popcount(m & d) < demand)
            return false;
    return true;
}

bool all_pairs_met(const CompactGraph& cg, Mask d) {
    for (int i = 0; i < cg.size(); ++i)
        for (int j = i + 1; j < cg.size(); ++j)
            if (popcount((cg.closed[i] | cg.closed[j]) & d) < 3)
                return false;
    return true;
}

bool satisfies_mask(const CompactGraph& cg, Mask d, const DominationVariant& variant) {
    if (!demand_met(cg, d, variant.demand()))
        return false;
    return variant.kind != DominationVariant::Kind::liars || all_pairs_met(cg, d);
}

// Next integer with the same popcount (Gosper's hack); 0 when exhausted.
Mask next_combination(Mask x, int bits) {
    const Mask c = x & (~x + 1);
    const Mask r = x + c;
    if (r == 0)
        return 0;
    const Mask next = (((r ^ x) >> 2) / c) | r;
    if (bits < 64 && next >> bits)
        return 0;
    return next;
}

template <typename Visit>
void for_each_subset_of_size(int bits, int size, Visit&& visit) {
    if (size == 0) {
        visit(Mask{0});
        return;
    }
    Mask x = size == 64 ? ~Mask{0} : (Mask{1} << size) - 1;
    while (x != 0) {
        if (!visit(x))
            return;
        x = next_combination(x, bits);
    }
}

struct BruteOutcome {
    int size = -1;
    std::vector<Mask> witnesses;
    std::uint64_t visited = 0;
};

BruteOutcome brute_force(const CompactGraph& cg, const DominationVariant& variant, bool collect_all) {
    BruteOutcome out;
    if (!satisfies_mask(cg, cg.all(), variant))
        return out;
    for (int r = 0; r <= cg.size(); ++r) {
        for_each_subset_of_size(cg.size(), r, [&](Mask m) {
            ++out.visited;
            if (satisfies_mask(cg, m, variant)) {
                out.witnesses.push_back(m);
                return collect_all;
            }
            return true;
        });
        if (!out.witnesses.empty()) {
            out.size = r;
            return out;
        }
    }
    return out;
}

class BranchAndBound {
public:
    BranchAndBound(const CompactGraph& cg, const DominationVariant& variant, std::uint64_t node_limit)
        : cg_(cg), demand_(variant.demand()), liars_(variant.kind == DominationVariant::Kind::liars),
          node_limit_(node_limit) {}

    // Requires the full vertex set to be feasible.
    void run() {
        best_ = cg_.all();
        best_size_ = cg_.size();
        search(0, 0, 0);
    }

    Mask best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

private:
    void search(Mask chosen, Mask excluded, int size) {
        if (aborted_)
            return;
        ++nodes_;
        if (node_limit_ != 0 && nodes_ > node_limit_) {
            aborted_ = true;
            return;
        }
        if (size >= best_size_)
            return;

        const Mask open = cg_.all() & ~chosen & ~excluded;
        Mask deficient = 0;
        int residual = 0;
        int first = -1;
        for (int i = 0; i < cg_.size(); ++i) {
            const int have = popcount(cg_.closed[i] & chosen);
            if (have >= demand_)
                continue;
            const int need = demand_ - have;
            if (popcount(cg_.closed[i] & open) < need)
                return;
            deficient |= Mask{1} << i;
            residual += need;
            if (first < 0)
                first = i;
        }

        Mask branch_on = 0;
        if (first >= 0) {
            int best_gain = 0;
            for (Mask m = open; m; m &= m - 1)
                best_gain = std::max(best_gain, popcount(cg_.closed[std::countr_zero(m)] & deficient));
            const int bound = (residual + best_gain - 1) / best_gain;
            if (size + bound >= best_size_)
                return;
            branch_on = cg_.closed[first] & open;
        } else if (liars_) {
            const auto pair = violated_pair(chosen);
            if (pair) {
                if (size + 1 >= best_size_)
                    return;
                branch_on = (cg_.closed[pair->first] | cg_.closed[pair->second]) & open;
                if (branch_on == 0)
                    return;
            }
        }

        if (branch_on == 0) {
            best_ = chosen;
            best_size_ = size;
            return;
        }

        // Higher gain first, ties by vertex id.
        std::vector<int> order;
        for (Mask m = branch_on; m; m &= m - 1)
            order.push_back(std::countr_zero(m));
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return popcount(cg_.closed[a] & deficient) > popcount(cg_.closed[b] & deficient);
        });
        Mask skipped = 0;
        for (int c : order) {
            search(chosen | Mask{1} << c, excluded | skipped, size + 1);
            skipped |= Mask{1} << c;
        }
    }

    // With condition (i) already met, (ii) can only fail for two vertices whose
    // N[x] ∩ D is the same 2-set.
    std::optional<std::pair<int, int>> violated_pair(Mask chosen) const {
        std::map<Mask, int> seen;
        for (int i = 0; i < cg_.size(); ++i) {
            const Mask hit = cg_.closed[i] & chosen;
            if (popcount(hit) != 2)
                continue;
            auto [it, inserted] = seen.emplace(hit, i);
            if (!inserted)
                return std::pair{it->second, i};
        }
        return std::nullopt;
    }

    const CompactGraph& cg_;
    int demand_;
    bool liars_;
    std::uint64_t node_limit_;
    Mask best_ = 0;
    int best_size_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

SolveResult solve_minimum(const Graph& g, const DominationVariant& variant, SolveMode mode,
                          const SolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const CompactGraph cg = compact(g);
    SolveResult result;

    Mask found = 0;
    if (mode == SolveMode::brute) {
        if (cg.size() > options.brute_cap)
            throw Error(ErrorKind::instance_too_large,
                        std::to_string(cg.size()) + " vertices exceed the brute-force cap of " +
                            std::to_string(options.brute_cap));
        const BruteOutcome outcome = brute_force(cg, variant, false);
        result.nodes_explored = outcome.visited;
        if (outcome.size >= 0) {
            result.status = SolveResult::Status::optimal;
            found = outcome.witnesses.front();
        }
    } else if (satisfies_mask(cg, cg.all(), variant)) {
        BranchAndBound bnb(cg, variant, options.node_limit);
        bnb.run();
        result.nodes_explored = bnb.nodes();
        result.status = bnb.aborted() ? SolveResult::Status::node_limit : SolveResult::Status::optimal;
        found = bnb.best();
    } else {
        result.nodes_explored = 1;
    }

    if (result.status == SolveResult::Status::optimal) {
        result.certificate = certify(g, cg.to_set(found), variant);
        if (!result.certificate->verified)
            throw Error(ErrorKind::internal, "solver produced a set that fails " + variant.name());
    }
    result.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<VertexSet> enumerate_minimum(const Graph& g, const DominationVariant& variant, int brute_cap) {
    const CompactGraph cg = compact(g);
    if (cg.size() > brute_cap)
        throw Error(ErrorKind::instance_too_large, "enumeration beyond the brute-force cap");
    const BruteOutcome outcome = brute_force(cg, variant, true);
    std::vector<VertexSet> out;
    for (Mask m : outcome.witnesses)
        out.push_back(cg.to_set(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<VertexSet> greedy_k_tuple_dominating_set(const Graph& g, int k) {
    if (g.empty())
        throw Error(ErrorKind::empty_graph, "greedy domination on an empty graph");
    if (minimum_degree(g) < k - 1)
        return std::nullopt;
    const VertexSet live = g.live_vertices();
    std::vector<int> have(static_cast<std::size_t>(g.id_bound()), 0);
    std::vector<char> chosen(static_cast<std::size_t>(g.id_bound()), 0);
    VertexSet d;
    for (;;) {
        Vertex pick = -1;
        int pick_gain = 0;
        for (Vertex w : live) {
            if (chosen[w])
                continue;
            int gain = have[w] < k;
            for (Vertex x : g.neighbors(w))
                gain += have[x] < k;
            if (gain > pick_gain) {
                pick_gain = gain;
                pick = w;
            }
        }
        if (pick < 0)
            break;
        chosen[pick] = 1;
        d.push_back(pick);
        ++have[pick];
        for (Vertex x : g.neighbors(pick))
            ++have[x];
    }
    return make_vertex_set(std::move(d));
}

}  // namespace domkernel
