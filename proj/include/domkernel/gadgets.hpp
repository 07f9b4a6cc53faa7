#pragma once

#include <map>
#include <optional>
#include <string>

#include "domkernel/graph.hpp"
#include "domkernel/plane.hpp"

namespace domkernel {

enum class GadgetKind { ktuple, liars, planar_liars };

/// A parameterized reduction from Dominating Set: (original, p) maps to
/// (transformed, p'). New vertices get ids after the original id range, in
/// the order of `new_vertices` labels (u1..uk; u,u',v,v',w; x1,y1,z1,...).
struct GadgetInstance {
    GadgetKind kind = GadgetKind::ktuple;
    int k = 0;  // k-tuple gadgets only
    Graph original;
    Graph transformed;
    int parameter_in = 0;
    int parameter_out = 0;
    std::map<std::string, Vertex> new_vertices;
    std::optional<PlaneGraph> embedding;  // planar-liars with a supplied embedding
};

std::string to_string(GadgetKind kind);

/// Adds the clique V_k = {u1..uk} and joins every original vertex to
/// u1..u_{k-1}; p' = p + k.
GadgetInstance build_ktuple_gadget(const Graph& g, int p, int k);

/// Adds u, u', v, v', w with every original vertex joined to u and v, and
/// edges uu', vv', wu, wv; p' = p + 4.
GadgetInstance build_liars_gadget(const Graph& g, int p);

/// Hangs a pendant path v_i - x_i - y_i - z_i off every original vertex;
/// k' = k + 3n. With `embedding`, the result carries an extended embedding.
GadgetInstance build_planar_liars_gadget(const Graph& g, int k, const PlaneGraph* embedding = nullptr);

struct GadgetCheck {
    int gamma_original = 0;
    std::optional<int> gamma_transformed;  // nullopt when infeasible
    /// γ(G) <= p  <=>  γ'(G') <= p + shift, for every p in [0, n].
    bool equivalent = false;
    int first_mismatch = -1;
};

/// Runs the exact solver on both sides and compares the decision answers for
/// every threshold.
GadgetCheck verify_gadget(const GadgetInstance& gadget);

}  // namespace domkernel
