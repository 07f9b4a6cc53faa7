#pragma once

#include <json.hpp>

#include "domkernel/domination.hpp"
#include "domkernel/gadgets.hpp"
#include "domkernel/generators.hpp"
#include "domkernel/kernelize.hpp"
#include "domkernel/regions.hpp"

namespace domkernel {

using Json = nlohmann::ordered_json;

Json to_json(const SolveResult& result);
Json to_json(const ReductionTrace& trace);
Json to_json(const Region& region);
Json to_json(const RegionDecomposition& rd);
Json to_json(const RegionBoundsReport& report);
Json to_json(const GadgetInstance& gadget);
Json to_json(const GeneratorSpec& spec);

GeneratorSpec generator_spec_from_json(const Json& j);

/// Removes every "wall_time_ms" member, recursively.
Json strip_timing(Json j);

}  // namespace domkernel
