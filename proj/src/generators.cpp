#include "domkernel/generators.hpp"

#include <algorithm>
#include <array>
#include <iterator>

#include "domkernel/error.hpp"
#include "domkernel/random.hpp"

namespace domkernel {

namespace {

constexpr std::array family_names = {
    std::pair{Family::cycle, "cycle"},   std::pair{Family::path, "path"},
    std::pair{Family::star, "star"},     std::pair{Family::grid, "grid"},
    std::pair{Family::wheel, "wheel"},   std::pair{Family::complete, "complete"},
    std::pair{Family::stacked, "stacked"}, std::pair{Family::trigger, "trigger"},
    std::pair{Family::stacked_trigger, "stacked_trigger"}, std::pair{Family::gnp, "gnp"},
};

[[noreturn]] void bad_spec(const GeneratorSpec& spec, const std::string& why) {
    throw Error(ErrorKind::invalid_argument, spec.id() + ": " + why);
}

void expect_params(const GeneratorSpec& spec, std::size_t count) {
    if (spec.size.size() != count)
        bad_spec(spec, "expects " + std::to_string(count) + " size parameter(s)");
}

// Rotation lists are accumulated alongside the edges.
struct EmbeddedBuilder {
    std::vector<Edge> edges;
    RotationSystem rotation;

    explicit EmbeddedBuilder(int n) : rotation(static_cast<std::size_t>(n)) {}

    void edge(Vertex a, Vertex b) { edges.emplace_back(a, b); }

    Instance finish(std::string id) {
        Instance out;
        out.id = std::move(id);
        out.graph = Graph::from_edges(static_cast<int>(rotation.size()), edges);
        out.embedding = PlaneGraph::build(out.graph, std::move(rotation));
        return out;
    }
};

Instance make_path(const GeneratorSpec& spec, int n, bool closed) {
    EmbeddedBuilder b(n);
    const int m = closed ? n : n - 1;
    for (int i = 0; i < m; ++i)
        b.edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        if (closed || i > 0)
            b.rotation[i].push_back((i + n - 1) % n);
        if (closed || i + 1 < n)
            b.rotation[i].push_back((i + 1) % n);
    }
    return b.finish(spec.id());
}

Instance make_star(const GeneratorSpec& spec, int leaves) {
    EmbeddedBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i) {
        b.edge(0, i);
        b.rotation[0].push_back(i);
        b.rotation[i] = {0};
    }
    return b.finish(spec.id());
}

Instance make_grid(const GeneratorSpec& spec, int rows, int cols) {
    EmbeddedBuilder b(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                b.edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows)
                b.edge(id(r, c), id(r + 1, c));
            // Clockwise in screen coordinates: east, south, west, north.
            auto& rot = b.rotation[id(r, c)];
            if (c + 1 < cols)
                rot.push_back(id(r, c + 1));
            if (r + 1 < rows)
                rot.push_back(id(r + 1, c));
            if (c > 0)
                rot.push_back(id(r, c - 1));
            if (r > 0)
                rot.push_back(id(r - 1, c));
        }
    return b.finish(spec.id());
}

// Rim 0..n-1 counterclockwise, hub n in the middle.
Instance make_wheel(const GeneratorSpec& spec, int n) {
    EmbeddedBuilder b(n + 1);
    const Vertex hub = n;
    for (int i = 0; i < n; ++i) {
        b.edge(i, (i + 1) % n);
        b.edge(i, hub);
        b.rotation[i] = {(i + n - 1) % n, hub, (i + 1) % n};
    }
    b.rotation[hub].push_back(0);
    for (int i = n - 1; i >= 1; --i)
        b.rotation[hub].push_back(i);
    return b.finish(spec.id());
}

Instance make_complete(const GeneratorSpec& spec, int n) {
    if (n == 4)
        return make_wheel(spec, 3);
    if (n == 3)
        return make_path(spec, 3, true);
    if (n <= 2)
        return make_path(spec, n, false);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Instance{spec.id(), Graph::from_edges(n, edges), std::nullopt};
}

// K_{2,t}: hubs 0 and 1, commons 2..t+1 stacked vertically between them.
Instance make_trigger(const GeneratorSpec& spec, int t) {
    EmbeddedBuilder b(t + 2);
    for (int i = 0; i < t; ++i) {
        const Vertex c = 2 + i;
        b.edge(0, c);
        b.edge(1, c);
        b.rotation[c] = {0, 1};
        b.rotation[1].push_back(c);
    }
    for (int i = t - 1; i >= 0; --i)
        b.rotation[0].push_back(2 + i);
    return b.finish(spec.id());
}

void insert_after(std::vector<Vertex>& rot, Vertex anchor, Vertex x) {
    const auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(std::next(it), x);
}

void insert_before(std::vector<Vertex>& rot, Vertex anchor, Vertex x) {
    const auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it, x);
}

struct Triangulation {
    std::vector<Edge> edges;
    RotationSystem rotation;
};

// Faces are triples (a, b, c) traced a->b->c. Splitting inserts w with
// rotation [b, a, c] and places it between the face's neighbors at each corner.
Triangulation stacked_triangulation(int n, SplitMix64& rng) {
    Triangulation t;
    t.rotation.resize(static_cast<std::size_t>(n));
    t.edges = {{0, 1}, {1, 2}, {0, 2}};
    t.rotation[0] = {1, 2};
    t.rotation[1] = {2, 0};
    t.rotation[2] = {0, 1};
    std::vector<std::array<Vertex, 3>> faces = {{0, 1, 2}, {1, 0, 2}};
    for (Vertex w = 3; w < n; ++w) {
        const std::size_t pick = rng.below(faces.size());
        const auto [a, b, c] = faces[pick];
        insert_after(t.rotation[b], a, w);
        insert_after(t.rotation[c], b, w);
        insert_after(t.rotation[a], c, w);
        t.rotation[w] = {b, a, c};
        t.edges.insert(t.edges.end(), {{a, w}, {b, w}, {c, w}});
        faces[pick] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
    }
    return t;
}

Instance make_stacked_trigger(const GeneratorSpec& spec, int base, int fans, int t) {
    SplitMix64 rng(spec.seed);
    Triangulation tri = stacked_triangulation(base, rng);
    const int n = base + fans * t;
    tri.rotation.resize(static_cast<std::size_t>(n));
    Vertex next = base;
    for (int f = 0; f < fans; ++f) {
        // Fans hang off edges of the base triangulation only.
        const auto [u, v] = tri.edges[rng.below(static_cast<std::uint64_t>(3 * base - 6))];
        const bool flip = rng.chance(1, 2);
        const Vertex a = flip ? v : u;
        const Vertex b = flip ? u : v;
        for (int i = 0; i < t; ++i) {
            const Vertex c = next++;
            // New triangle a->b->c inside the face of dart a->b.
            insert_after(tri.rotation[b], a, c);
            insert_before(tri.rotation[a], b, c);
            tri.rotation[c] = {b, a};
            tri.edges.insert(tri.edges.end(), {{a, c}, {b, c}});
        }
    }
    Instance out;
    out.id = spec.id();
    out.graph = Graph::from_edges(n, tri.edges);
    out.embedding = PlaneGraph::build(out.graph, std::move(tri.rotation));
    return out;
}

Instance make_gnp(const GeneratorSpec& spec, int n, int percent) {
    SplitMix64 rng(spec.seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(static_cast<std::uint64_t>(percent), 100))
                edges.emplace_back(i, j);
    return Instance{spec.id(), Graph::from_edges(n, edges), std::nullopt};
}

}  // namespace

std::string to_string(Family family) {
    for (auto [f, name] : family_names)
        if (f == family)
            return name;
    return "?";
}

Family parse_family(const std::string& text) {
    for (auto [f, name] : family_names)
        if (text == name)
            return f;
    throw Error(ErrorKind::invalid_argument, "unknown family '" + text + "'");
}

bool is_planar_family(Family family, const std::vector<int>& size) {
    if (family == Family::gnp)
        return false;
    if (family == Family::complete)
        return !size.empty() && size[0] <= 4;
    return true;
}

std::string GeneratorSpec::id() const {
    std::string out = to_string(family) + "(";
    for (std::size_t i = 0; i < size.size(); ++i)
        out += (i ? "," : "") + std::to_string(size[i]);
    return out + ")#" + std::to_string(seed);
}

Instance generate(const GeneratorSpec& spec) {
    switch (spec.family) {
    case Family::cycle:
        expect_params(spec, 1);
        if (spec.size[0] < 3)
            bad_spec(spec, "cycle needs n >= 3");
        return make_path(spec, spec.size[0], true);
    case Family::path:
        expect_params(spec, 1);
        if (spec.size[0] < 1)
            bad_spec(spec, "path needs n >= 1");
        return make_path(spec, spec.size[0], false);
    case Family::star:
        expect_params(spec, 1);
        if (spec.size[0] < 1)
            bad_spec(spec, "star needs at least one leaf");
        return make_star(spec, spec.size[0]);
    case Family::grid:
        expect_params(spec, 2);
        if (spec.size[0] < 1 || spec.size[1] < 1)
            bad_spec(spec, "grid needs rows, cols >= 1");
        return make_grid(spec, spec.size[0], spec.size[1]);
    case Family::wheel:
        expect_params(spec, 1);
        if (spec.size[0] < 3)
            bad_spec(spec, "wheel needs a rim of at least 3");
        return make_wheel(spec, spec.size[0]);
    case Family::complete:
        expect_params(spec, 1);
        if (spec.size[0] < 1 || spec.size[0] > 64)
            bad_spec(spec, "complete graph needs 1 <= n <= 64");
        return make_complete(spec, spec.size[0]);
    case Family::stacked: {
        expect_params(spec, 1);
        Instance out;
        out.id = spec.id();
        out.embedding = generate_stacked_planar(spec.size[0], spec.seed);
        out.graph = out.embedding->graph();
        return out;
    }
    case Family::trigger:
        expect_params(spec, 1);
        if (spec.size[0] < 1)
            bad_spec(spec, "trigger needs t >= 1");
        return make_trigger(spec, spec.size[0]);
    case Family::stacked_trigger:
        expect_params(spec, 3);
        if (spec.size[0] < 3 || spec.size[1] < 1 || spec.size[2] < 1)
            bad_spec(spec, "stacked_trigger needs n_base >= 3, fans >= 1, t >= 1");
        return make_stacked_trigger(spec, spec.size[0], spec.size[1], spec.size[2]);
    case Family::gnp:
        expect_params(spec, 2);
        if (spec.size[0] < 1 || spec.size[1] < 0 || spec.size[1] > 100)
            bad_spec(spec, "gnp needs n >= 1 and 0 <= percent <= 100");
        return make_gnp(spec, spec.size[0], spec.size[1]);
    }
    bad_spec(spec, "unhandled family");
}

PlaneGraph generate_stacked_planar(int n, std::uint64_t seed) {
    if (n < 3)
        throw Error(ErrorKind::invalid_argument, "stacked planar graphs need n >= 3");
    SplitMix64 rng(seed);
    Triangulation t = stacked_triangulation(n, rng);
    return PlaneGraph::build(Graph::from_edges(n, t.edges), std::move(t.rotation));
}

}  // namespace domkernel
