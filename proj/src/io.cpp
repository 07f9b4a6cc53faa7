#include "domkernel/io.hpp"

#include <fstream>
#include <sstream>

#include "domkernel/error.hpp"

namespace domkernel {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

long read_int(std::istringstream& fields, int line, const char* what) {
    long value = 0;
    if (!(fields >> value))
        fail(line, std::string("expected ") + what);
    return value;
}

void expect_end(std::istringstream& fields, int line) {
    std::string extra;
    if (fields >> extra)
        fail(line, "unexpected trailing token '" + extra + "'");
}

}  // namespace

GraphFile parse_graph_file(std::istream& in) {
    std::string raw;
    int line = 0;
    long n = -1;
    long m = -1;
    std::vector<Edge> edges;
    std::vector<Vertex> deleted;
    std::vector<std::pair<Vertex, std::vector<Vertex>>> rotations;

    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::istringstream fields(raw);
        std::string tag;
        if (!(fields >> tag) || tag == "c")
            continue;
        if (n < 0 && tag != "p")
            fail(line, "expected 'p <n> <m>' header before '" + tag + "'");
        if (tag == "p") {
            if (n >= 0)
                fail(line, "duplicate header");
            n = read_int(fields, line, "vertex count");
            m = read_int(fields, line, "edge count");
            expect_end(fields, line);
            if (n < 0 || m < 0)
                fail(line, "negative count");
        } else if (tag == "e") {
            const long u = read_int(fields, line, "edge tail");
            const long v = read_int(fields, line, "edge head");
            expect_end(fields, line);
            if (u < 0 || v < 0 || u >= n || v >= n)
                fail(line, "edge endpoint out of range");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else if (tag == "d") {
            const long v = read_int(fields, line, "deleted id");
            expect_end(fields, line);
            if (v < 0 || v >= n)
                fail(line, "deleted id out of range");
            deleted.push_back(static_cast<Vertex>(v));
        } else if (tag == "r") {
            const long v = read_int(fields, line, "rotation vertex");
            if (v < 0 || v >= n)
                fail(line, "rotation vertex out of range");
            std::vector<Vertex> order;
            long w = 0;
            while (fields >> w) {
                if (w < 0 || w >= n)
                    fail(line, "rotation neighbor out of range");
                order.push_back(static_cast<Vertex>(w));
            }
            if (!fields.eof())
                fail(line, "malformed rotation entry");
            rotations.emplace_back(static_cast<Vertex>(v), std::move(order));
        } else {
            fail(line, "unknown record '" + tag + "'");
        }
    }
    if (n < 0)
        throw Error(ErrorKind::parse, "missing 'p <n> <m>' header");
    if (static_cast<long>(edges.size()) != m)
        throw Error(ErrorKind::parse,
                    "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

    GraphFile file;
    try {
        file.graph = Graph::from_edges(static_cast<int>(n), edges);
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, e.what());
    }
    const VertexSet dead = make_vertex_set(deleted);
    if (dead.size() != deleted.size())
        throw Error(ErrorKind::parse, "vertex deleted twice");
    for (Vertex v : dead)
        if (file.graph.degree(v) != 0)
            throw Error(ErrorKind::parse, "deleted vertex " + std::to_string(v) + " has edges");
    file.graph = delete_vertices(file.graph, dead);

    if (!rotations.empty()) {
        RotationSystem rotation(static_cast<std::size_t>(n));
        std::vector<char> given(static_cast<std::size_t>(n), 0);
        for (auto& [v, order] : rotations) {
            if (given[v])
                throw Error(ErrorKind::parse, "duplicate rotation for vertex " + std::to_string(v));
            given[v] = 1;
            rotation[v] = std::move(order);
        }
        file.rotation = std::move(rotation);
    }
    return file;
}

GraphFile parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_file(in);
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::invalid_input, "cannot open " + path);
    return parse_graph_file(in);
}

PlaneGraph to_plane_graph(GraphFile file) {
    if (!file.rotation)
        throw Error(ErrorKind::invalid_embedding, "file carries no rotation system ('r' lines)");
    return PlaneGraph::build(std::move(file.graph), std::move(*file.rotation));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.id_bound() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    for (Vertex v : g.deleted_vertices())
        out << "d " << v << '\n';
    return out.str();
}

std::string to_embedding_text(const PlaneGraph& pg) {
    std::string text = to_edge_list(pg.graph());
    std::ostringstream out;
    for (Vertex v : pg.graph().live_vertices()) {
        out << "r " << v;
        for (Vertex w : pg.rotation(v))
            out << ' ' << w;
        out << '\n';
    }
    return text + out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::invalid_input, "cannot write " + path);
    out << text;
}

}  // namespace domkernel
