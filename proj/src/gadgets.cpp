#include "domkernel/gadgets.hpp"

#include "domkernel/domination.hpp"
#include "domkernel/error.hpp"

namespace domkernel {

namespace {

// New ids start at g.id_bound(); tombstones of g stay tombstoned.
Graph extend(const Graph& g, int extra, const std::vector<Edge>& new_edges) {
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), new_edges.begin(), new_edges.end());
    Graph out = Graph::from_edges(g.id_bound() + extra, edges);
    return delete_vertices(out, g.deleted_vertices());
}

}  // namespace

std::string to_string(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::ktuple: return "ktuple";
    case GadgetKind::liars: return "liars";
    case GadgetKind::planar_liars: return "planar-liars";
    }
    return "?";
}

GadgetInstance build_ktuple_gadget(const Graph& g, int p, int k) {
    if (k < 1 || p < 0)
        throw Error(ErrorKind::invalid_argument, "k-tuple gadget needs k >= 1 and p >= 0");
    const int base = g.id_bound();
    GadgetInstance out;
    out.kind = GadgetKind::ktuple;
    out.k = k;
    out.original = g;
    out.parameter_in = p;
    out.parameter_out = p + k;

    std::vector<Edge> edges;
    for (int j = 0; j < k; ++j)
        out.new_vertices["u" + std::to_string(j + 1)] = base + j;
    for (Vertex v : g.live_vertices())
        for (int j = 0; j + 1 < k; ++j)
            edges.emplace_back(v, base + j);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            edges.emplace_back(base + i, base + j);
    out.transformed = extend(g, k, edges);
    return out;
}

GadgetInstance build_liars_gadget(const Graph& g, int p) {
    if (p < 0)
        throw Error(ErrorKind::invalid_argument, "liar's gadget needs p >= 0");
    const int base = g.id_bound();
    const Vertex u = base, u2 = base + 1, v = base + 2, v2 = base + 3, w = base + 4;
    GadgetInstance out;
    out.kind = GadgetKind::liars;
    out.original = g;
    out.parameter_in = p;
    out.parameter_out = p + 4;
    out.new_vertices = {{"u", u}, {"u'", u2}, {"v", v}, {"v'", v2}, {"w", w}};

    std::vector<Edge> edges;
    for (Vertex x : g.live_vertices()) {
        edges.emplace_back(x, u);
        edges.emplace_back(x, v);
    }
    edges.insert(edges.end(), {{u, u2}, {v, v2}, {w, u}, {w, v}});
    out.transformed = extend(g, 5, edges);
    return out;
}

GadgetInstance build_planar_liars_gadget(const Graph& g, int k, const PlaneGraph* embedding) {
    if (k < 0)
        throw Error(ErrorKind::invalid_argument, "planar liar's gadget needs k >= 0");
    if (embedding && !(embedding->graph() == g))
        throw Error(ErrorKind::invalid_argument, "embedding does not belong to the graph");
    const VertexSet live = g.live_vertices();
    const int n = static_cast<int>(live.size());
    const int base = g.id_bound();
    GadgetInstance out;
    out.kind = GadgetKind::planar_liars;
    out.original = g;
    out.parameter_in = k;
    out.parameter_out = k + 3 * n;

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        const Vertex x = base + 3 * i, y = x + 1, z = x + 2;
        const std::string idx = std::to_string(i + 1);
        out.new_vertices["x" + idx] = x;
        out.new_vertices["y" + idx] = y;
        out.new_vertices["z" + idx] = z;
        edges.insert(edges.end(), {{live[i], x}, {x, y}, {y, z}});
    }
    out.transformed = extend(g, 3 * n, edges);

    if (embedding) {
        // A pendant path sits in the corner after the last listed neighbor.
        RotationSystem rotation = embedding->rotation();
        rotation.resize(static_cast<std::size_t>(base + 3 * n));
        for (int i = 0; i < n; ++i) {
            const Vertex x = base + 3 * i;
            rotation[live[i]].push_back(x);
            rotation[x] = {live[i], x + 1};
            rotation[x + 1] = {x, x + 2};
            rotation[x + 2] = {x + 1};
        }
        out.embedding = PlaneGraph::build(out.transformed, std::move(rotation));
    }
    return out;
}

GadgetCheck verify_gadget(const GadgetInstance& gadget) {
    DominationVariant target = DominationVariant::liars();
    if (gadget.kind == GadgetKind::ktuple)
        target = DominationVariant::k_tuple(gadget.k);
    const int shift = gadget.parameter_out - gadget.parameter_in;

    const SolveResult source = solve_minimum(gadget.original, DominationVariant::plain(), SolveMode::branch_and_bound);
    const SolveResult image = solve_minimum(gadget.transformed, target, SolveMode::branch_and_bound);
    if (!source.feasible())
        throw Error(ErrorKind::internal, "plain domination is always feasible on a nonempty graph");

    GadgetCheck check;
    check.gamma_original = source.cardinality();
    if (image.status == SolveResult::Status::optimal)
        check.gamma_transformed = image.cardinality();
    check.equivalent = true;
    for (int p = 0; p <= gadget.original.num_live(); ++p) {
        const bool left = check.gamma_original <= p;
        const bool right = check.gamma_transformed && *check.gamma_transformed <= p + shift;
        if (left != right) {
            check.equivalent = false;
            check.first_mismatch = p;
            break;
        }
    }
    return check;
}

}  // namespace domkernel
