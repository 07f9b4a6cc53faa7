#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace domkernel {

enum class ErrorKind {
    invalid_vertex,
    empty_graph,
    invalid_pair,
    invalid_input,
    parse,
    not_planar,
    invalid_embedding,
    invalid_region,
    instance_too_large,
    invalid_argument,
    internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace domkernel
