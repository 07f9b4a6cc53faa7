#include "domkernel/json.hpp"

#include <algorithm>

#include "domkernel/error.hpp"

namespace domkernel {

Json to_json(const SolveResult& result) {
    Json j;
    j["feasible"] = result.feasible();
    if (result.feasible()) {
        j["cardinality"] = result.cardinality();
        j["set"] = result.certificate->set;
        j["variant"] = result.certificate->variant.name();
        j["verified"] = result.certificate->verified;
    } else {
        j["cardinality"] = nullptr;
        j["set"] = Json::array();
    }
    j["status"] = result.status == SolveResult::Status::optimal      ? "optimal"
                  : result.status == SolveResult::Status::infeasible ? "infeasible"
                                                                     : "node-limit";
    j["nodes_explored"] = result.nodes_explored;
    j["wall_time_ms"] = result.wall_time_ms;
    return j;
}

Json to_json(const ReductionTrace& trace) {
    Json steps = Json::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"u", s.u},
                         {"v", s.v},
                         {"deleted_n2", s.deleted_n2},
                         {"deleted_n3", s.deleted_n3},
                         {"kept_witness", s.witness}});
    return {{"original_n", trace.original_n},
            {"reduced_n", trace.reduced_n},
            {"passes", trace.passes},
            {"steps", std::move(steps)}};
}

Json to_json(const Region& region) {
    return {{"u", region.u},
            {"v", region.v},
            {"p", region.p},
            {"q", region.q},
            {"boundary", region.boundary_vertices},
            {"interior", region.disk.interior_vertices},
            {"faces", region.disk.interior_faces},
            {"size", region.size()}};
}

Json to_json(const RegionDecomposition& rd) {
    Json regions = Json::array();
    for (const auto& r : rd.regions)
        regions.push_back(to_json(r));
    Json multigraph = Json::array();
    for (auto [u, v] : rd.induced_multigraph)
        multigraph.push_back({u, v});
    return {{"dset", rd.dset},
            {"regions", std::move(regions)},
            {"induced_multigraph", std::move(multigraph)},
            {"counts",
             {{"vertices", rd.num_vertices},
              {"covered", rd.covered.size()},
              {"dset", rd.dset.size()},
              {"regions", rd.regions.size()}}},
            {"thin_planar", thin_planar_check(rd)}};
}

Json to_json(const RegionBoundsReport& report) {
    return {{"regime", to_string(report.regime)},
            {"vertices", report.num_vertices},
            {"dset", report.dset_size},
            {"regions", report.region_count},
            {"region_cap", report.region_count_cap},
            {"max_region_size", report.max_region_size},
            {"region_size_cap", report.region_size_cap},
            {"global_cap", report.global_cap},
            {"cover_ok", report.cover_ok},
            {"count_ok", report.count_ok},
            {"sizes_ok", report.sizes_ok},
            {"global_ok", report.global_ok},
            {"passed", report.passed()},
            {"violations", report.violations}};
}

Json to_json(const GadgetInstance& gadget) {
    Json labels = Json::object();
    // Labels in id order, which is the documented construction order.
    std::vector<std::pair<Vertex, std::string>> by_id;
    for (const auto& [label, id] : gadget.new_vertices)
        by_id.emplace_back(id, label);
    std::sort(by_id.begin(), by_id.end());
    for (const auto& [id, label] : by_id)
        labels[label] = id;
    Json j = {{"kind", to_string(gadget.kind)},
              {"parameter_in", gadget.parameter_in},
              {"parameter_out", gadget.parameter_out},
              {"original_n", gadget.original.num_live()},
              {"transformed_n", gadget.transformed.num_live()},
              {"new_vertices", std::move(labels)}};
    if (gadget.kind == GadgetKind::ktuple)
        j["k"] = gadget.k;
    return j;
}

Json to_json(const GeneratorSpec& spec) {
    return {{"family", to_string(spec.family)}, {"size", spec.size}, {"seed", spec.seed}};
}

GeneratorSpec generator_spec_from_json(const Json& j) {
    try {
        GeneratorSpec spec;
        spec.family = parse_family(j.at("family").get<std::string>());
        spec.size = j.at("size").get<std::vector<int>>();
        spec.seed = j.value("seed", std::uint64_t{0});
        return spec;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::invalid_input, std::string("generator spec: ") + e.what());
    }
}

Json strip_timing(Json j) {
    if (j.is_object())
        j.erase("wall_time_ms");
    if (j.is_structured())
        for (auto& value : j)
            value = strip_timing(std::move(value));
    return j;
}

}  // namespace domkernel
