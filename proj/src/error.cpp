#include "domkernel/error.hpp"

namespace domkernel {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_vertex: return "invalid-vertex";
    case ErrorKind::empty_graph: return "empty-graph";
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::parse: return "parse-error";
    case ErrorKind::not_planar: return "not-planar";
    case ErrorKind::invalid_embedding: return "invalid-embedding";
    case ErrorKind::invalid_region: return "invalid-region";
    case ErrorKind::instance_too_large: return "instance-too-large";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::internal: return "internal-consistency";
    }
    return "unknown";
}

}  // namespace domkernel
