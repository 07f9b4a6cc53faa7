#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "domkernel/graph.hpp"
#include "domkernel/plane.hpp"

namespace domkernel {

// Text format, one record per line:
//
//   c <anything>            comment, ignored
//   p <n> <m>               header, first non-comment line
//   e <u> <v>               m edge lines, 0-based ids
//   d <v>                   tombstoned id (kept so ids survive kernelization)
//   r <v> <w1> <w2> ...     clockwise neighbor order at v (embedding files)
//
// Serialization is canonical: edges sorted with u < v, then d lines, then r
// lines for every live vertex, all ascending by id.

struct GraphFile {
    Graph graph;
    std::optional<RotationSystem> rotation;  // present when any r line was read
};

GraphFile parse_graph_file(std::istream& in);
GraphFile parse_graph_text(const std::string& text);
GraphFile read_graph_file(const std::string& path);

/// Requires a rotation for every live vertex.
PlaneGraph to_plane_graph(GraphFile file);

std::string to_edge_list(const Graph& g);
std::string to_embedding_text(const PlaneGraph& pg);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace domkernel
