#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domkernel/graph.hpp"
#include "domkernel/plane.hpp"

namespace domkernel {

enum class Family {
    cycle,            // size: n >= 3
    path,             // size: n >= 1
    star,             // size: leaves >= 1
    grid,             // size: rows, cols >= 1
    wheel,            // size: rim n >= 3; hub gets id n
    complete,         // size: n >= 1; embedded only for n <= 4
    stacked,          // size: n >= 3; random maximal planar by face splitting
    trigger,          // size: t >= 1; K_{2,t}, hubs 0 and 1
    stacked_trigger,  // size: n_base >= 3, fans >= 1, t >= 1
    gnp,              // size: n >= 1, edge percent in [0, 100]; not embedded
};

std::string to_string(Family family);
Family parse_family(const std::string& text);
bool is_planar_family(Family family, const std::vector<int>& size);

struct GeneratorSpec {
    Family family = Family::cycle;
    std::vector<int> size;
    std::uint64_t seed = 0;

    /// e.g. "stacked(12)#7"
    std::string id() const;
};

struct Instance {
    std::string id;
    Graph graph;
    std::optional<PlaneGraph> embedding;
};

/// Same spec, same instance, on every platform.
Instance generate(const GeneratorSpec& spec);

PlaneGraph generate_stacked_planar(int n, std::uint64_t seed);

}  // namespace domkernel
